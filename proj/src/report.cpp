#include "weylsym/report.hpp"

#include <atomic>
#include <thread>

#include <json.hpp>

#include "weylsym/discops.hpp"
#include "weylsym/w2bridge.hpp"

namespace weylsym {

bool Report::has_fail() const {
    for (const auto& s : suites)
        for (const auto& i : s.items)
            if (i.status == Status::Fail) return true;
    return false;
}

std::size_t Report::item_count() const {
    std::size_t n = 0;
    for (const auto& s : suites) n += s.items.size();
    return n;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "generators",   "phi",      "upq",           "annihilator",
        "vectorfields", "import_kernel", "pairing",  "factorization",
        "twisted",      "bernstein"};
    return names;
}

namespace {

ItemResult skipped_item(const std::string& id, const std::string& why) {
    ItemResult r;
    r.item_id = id;
    r.status = Status::Skipped;
    r.witness = why;
    return r;
}

std::vector<ItemResult> pairing_items(const OperatorCatalog& cat) {
    std::vector<ItemResult> out;
    out.push_back(timed_item([&] {
        Rational want = 1;
        for (int i = 2; i <= cat.k(); ++i) want *= Rational(factorial(i));
        return check_equal("pairing.c_k", dual_pairing(cat), want);
    }));
    return out;
}

std::vector<ItemResult> bernstein_suite_items(const OperatorCatalog& cat,
                                              std::uint64_t /*seed*/) {
    // the §-pipeline behind the witness: F1, F2, the c_{k+1} = (k+1)!·c_k
    // recursion, then the witness itself
    std::vector<ItemResult> out = items_sigma_delta_lemmas(cat);
    if (cat.k() + 1 <= 5) {
        out.push_back(timed_item([&] {
            Rational ck = dual_pairing(cat);
            Rational next = dual_pairing(cat.k() + 1);
            Rational want = Rational(factorial(cat.k() + 1)) * ck;
            return check_equal("pairing.recursion", next, want);
        }));
    }
    for (auto& r : items_bernstein(cat)) out.push_back(std::move(r));
    return out;
}

std::vector<ItemResult> build_suite(const std::string& name,
                                    const OperatorCatalog& cat,
                                    std::uint64_t seed) {
    int k = cat.k();
    if (name == "generators") return items_generator_relations(cat);
    if (name == "phi") return items_phi_properties(cat, seed);
    if (name == "upq") {
        auto out = items_upq(cat);
        for (auto& r : items_mpoly(cat)) out.push_back(std::move(r));
        return out;
    }
    if (name == "annihilator") {
        auto out = items_annihilator_core(cat);
        for (auto& r : items_annihilator_remarks(cat))
            out.push_back(std::move(r));
        return out;
    }
    if (name == "vectorfields") return items_vectorfields(cat, seed);
    if (name == "import_kernel") {
        if (k > 4)
            return {skipped_item("import.all", "k > 4 exceeds the desk-scale "
                                               "default for this suite")};
        return items_import_kernel(cat);
    }
    if (name == "pairing") {
        if (k > 5)
            return {skipped_item("pairing.c_k", "k > 5 exceeds the desk-scale "
                                                "default for this suite")};
        return pairing_items(cat);
    }
    if (name == "factorization") {
        if (k > 3)
            return {skipped_item("fact.all", "k > 3 exceeds the desk-scale "
                                             "default for this suite")};
        auto out = items_transport_invariants(cat, seed);
        for (auto& r : items_factorization(cat, seed))
            out.push_back(std::move(r));
        return out;
    }
    if (name == "twisted") {
        if (k > 4)
            return {skipped_item("tw.all", "k > 4 exceeds the desk-scale "
                                           "default for this suite")};
        return items_twisted(cat, seed);
    }
    if (name == "bernstein") {
        if (k > 3)
            return {skipped_item("bw.all", "k > 3 exceeds the desk-scale "
                                           "default for this suite")};
        return bernstein_suite_items(cat, seed);
    }
    throw UnknownSuiteError("unknown suite '" + name + "'");
}

}  // namespace

Report run_suite(int k, const std::string& suite_name, std::uint64_t seed,
                 int jobs) {
    if (k < 2)
        throw ContractError(
            "k < 2 rejected: every suite depends on the discriminant");
    std::vector<std::string> wanted;
    if (suite_name == "all")
        wanted = suite_names();
    else {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), suite_name) == names.end())
            throw UnknownSuiteError("unknown suite '" + suite_name + "'");
        wanted.push_back(suite_name);
    }

    OperatorCatalog cat(k);
    Report rep;
    rep.k = k;
    rep.seed = seed;
    rep.suites.resize(wanted.size());

    if (jobs < 1) jobs = 1;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= wanted.size()) return;
            rep.suites[i] =
                SuiteResult{wanted[i], build_suite(wanted[i], cat, seed)};
        }
    };
    if (jobs == 1 || wanted.size() == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        int n = std::min<std::size_t>(jobs, wanted.size());
        for (int t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return rep;
}

std::string report_to_json(const Report& r, bool include_timings) {
    nlohmann::json j;
    j["tool_version"] = r.tool_version;
    j["schema_version"] = r.schema_version;
    j["k"] = r.k;
    j["seed"] = r.seed;
    j["suites"] = nlohmann::json::array();
    for (const auto& s : r.suites) {
        nlohmann::json js;
        js["suite"] = s.suite;
        js["items"] = nlohmann::json::array();
        for (const auto& i : s.items) {
            nlohmann::json ji;
            ji["item_id"] = i.item_id;
            ji["status"] = status_name(i.status);
            ji["lhs"] = i.lhs;
            ji["rhs"] = i.rhs;
            ji["witness"] = i.witness;
            if (include_timings)
                ji["wall_time_ms"] = int(i.wall_ms * 1000) / 1000.0;
            js["items"].push_back(std::move(ji));
        }
        j["suites"].push_back(std::move(js));
    }
    return j.dump(2) + "\n";
}

}  // namespace weylsym
