#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weylsym/discops.hpp"
#include "weylsym/report.hpp"
#include "weylsym/w2bridge.hpp"

namespace {

using namespace weylsym;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("WEYLSYM_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

int cmd_verify(int k, const std::string& suite, std::uint64_t seed, int jobs,
               const std::string& json_path, bool timings) {
    Report rep = run_suite(k, suite, seed, jobs);
    for (const auto& s : rep.suites) {
        std::cout << "suite " << s.suite << " (k=" << rep.k
                  << ", seed=" << rep.seed << ")\n";
        for (const auto& i : s.items) {
            std::cout << "  [" << status_name(i.status) << "] " << i.item_id;
            if (!i.witness.empty()) std::cout << "  -- " << i.witness;
            std::cout << "\n";
        }
    }
    std::size_t fails = 0;
    for (const auto& s : rep.suites)
        for (const auto& i : s.items)
            if (i.status == Status::Fail) ++fails;
    std::cout << rep.item_count() << " items, " << fails << " failed\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        out << report_to_json(rep, timings);
    }
    return rep.has_fail() ? 1 : 0;
}

int cmd_table(const std::string& kind, int k, int pmax, int qmax, int dmax) {
    OperatorCatalog cat(k);
    if (kind == "u") {
        for (int p = 0; p <= pmax; ++p)
            for (int q = 0; q <= qmax; ++q)
                std::cout << "u[" << p << "," << q
                          << "] = " << u_pq_all(cat, p, q).to_string() << "\n";
        return 0;
    }
    if (kind == "M") {
        for (int d = 0; d <= dmax; ++d)
            std::cout << "M[" << d
                      << "] = " << m_poly(cat.ctx(), d).to_string() << "\n";
        return 0;
    }
    if (kind == "generators") {
        auto gens = annihilator_generators(cat);
        std::size_t idx = 0;
        for (int p = 0; p <= k; ++p)
            for (int q = 1; q <= k; ++q)
                std::cout << "G[" << p << "," << q
                          << "] = " << gens[idx++].to_string() << "\n";
        return 0;
    }
    std::cerr << "unknown table kind '" << kind << "'\n";
    return 2;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

double p90(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[std::min(v.size() - 1, std::size_t(0.9 * double(v.size())))];
}

int cmd_bench(const std::string& workload, int k, int size, int reps) {
    OperatorCatalog cat(k);
    std::vector<double> times;
    std::size_t terms = 0;
    std::string note;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        if (workload == "weyl_mul") {
            Rng rng(17);
            WeylElement a = random_symmetric_op(cat, rng, size, size, 2);
            WeylElement b = random_symmetric_op(cat, rng, size, size, 2);
            WeylElement c = a * b;
            terms = c.terms().size();
        } else if (workload == "pairing") {
            Rational c = dual_pairing(cat);
            terms = 1;
            note = "constant = " + c.get_str();
        } else if (workload == "pushforward") {
            Rng rng(17);
            WeylElement p = random_symmetric_op(cat, rng, 1, size, 2);
            W2Element q = pushforward(cat, p);
            terms = q.terms().size();
        } else {
            std::cerr << "unknown workload '" << workload << "'\n";
            return 2;
        }
        auto t1 = std::chrono::steady_clock::now();
        times.push_back(
            std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::cout << "workload=" << workload << " k=" << k << " size=" << size
              << " reps=" << reps << "\n";
    std::cout << "median_ms=" << median(times) << " p90_ms=" << p90(times)
              << " result_terms=" << terms << "\n";
    if (!note.empty()) std::cout << note << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification kernel for symmetric and antisymmetric "
                 "differential operators"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    int vk = 2;
    std::string suite;
    std::uint64_t seed = default_seed();
    int jobs = 1;
    std::string json_path;
    bool timings = false;
    verify->add_option("--k", vk, "number of variables")->required();
    verify->add_option("--suite", suite, "suite name or 'all'")->required();
    verify->add_option("--seed", seed, "seed for randomized checks");
    verify->add_option("--jobs", jobs, "parallel worker cap");
    verify->add_option("--json", json_path, "write the JSON report here");
    verify->add_flag("--timings", timings,
                     "include wall times in the JSON report (breaks "
                     "byte-reproducibility)");

    auto* table = app.add_subcommand("table", "print an operator family");
    std::string kind;
    int tk = 2, pmax = 3, qmax = 2, dmax = 4;
    table->add_option("--kind", kind, "u | M | generators")->required();
    table->add_option("--k", tk, "number of variables")->required();
    table->add_option("--pmax", pmax, "max p for the u table");
    table->add_option("--qmax", qmax, "max q for the u table");
    table->add_option("--dmax", dmax, "max d for the M table");

    auto* bench = app.add_subcommand("bench", "time a workload");
    std::string workload;
    int bk = 2, bsize = 2, reps = 3;
    bench->add_option("--workload", workload, "weyl_mul | pairing | pushforward")
        ->required();
    bench->add_option("--k", bk, "number of variables")->required();
    bench->add_option("--size", bsize, "workload size (operator order)");
    bench->add_option("--reps", reps, "repetitions");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return cmd_verify(vk, suite, seed, jobs, json_path, timings);
        if (table->parsed()) return cmd_table(kind, tk, pmax, qmax, dmax);
        if (bench->parsed()) return cmd_bench(workload, bk, bsize, reps);
    } catch (const weylsym::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
