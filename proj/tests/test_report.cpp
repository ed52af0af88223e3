#include <doctest.h>

#include <set>

#include "weylsym/errors.hpp"
#include "weylsym/report.hpp"

using namespace weylsym;

TEST_CASE("reports are byte-identical across runs") {
    Report a = run_suite(2, "pairing", 5);
    Report b = run_suite(2, "pairing", 5);
    CHECK(report_to_json(a) == report_to_json(b));
    Report c = run_suite(2, "generators", 5);
    Report d = run_suite(2, "generators", 5);
    CHECK(report_to_json(c) == report_to_json(d));
}

TEST_CASE("pairing suite is the single constant item") {
    Report r = run_suite(3, "pairing", 123);
    REQUIRE(r.suites.size() == 1);
    REQUIRE(r.suites[0].items.size() == 1);
    const ItemResult& item = r.suites[0].items[0];
    CHECK(item.status == Status::Pass);
    CHECK(item.lhs == "12");
    CHECK(item.rhs == "12");
}

TEST_CASE("unknown suite and bad k are rejected") {
    CHECK_THROWS_AS((void)run_suite(2, "bogus", 0), UnknownSuiteError);
    CHECK_THROWS_AS((void)run_suite(1, "pairing", 0), ContractError);
}

TEST_CASE("'all' contains every suite exactly once with unique item ids") {
    Report r = run_suite(2, "all", 9);
    CHECK(r.suites.size() == suite_names().size());
    std::set<std::string> suites;
    for (const auto& s : r.suites) suites.insert(s.suite);
    CHECK(suites.size() == suite_names().size());
    std::set<std::string> ids;
    std::size_t n = 0;
    for (const auto& s : r.suites)
        for (const auto& i : s.items) {
            ids.insert(s.suite + "/" + i.item_id);
            ++n;
        }
    CHECK(ids.size() == n);
    CHECK(!r.has_fail());
}

TEST_CASE("parallel execution yields the identical report") {
    Report seq = run_suite(2, "all", 3, 1);
    Report par = run_suite(2, "all", 3, 4);
    CHECK(report_to_json(seq) == report_to_json(par));
}

TEST_CASE("json shape") {
    Report r = run_suite(2, "pairing", 0);
    std::string j = report_to_json(r);
    CHECK(j.find("\"tool_version\"") != std::string::npos);
    CHECK(j.find("\"schema_version\"") != std::string::npos);
    CHECK(j.find("\"wall_time_ms\"") == std::string::npos);
    std::string jt = report_to_json(r, true);
    CHECK(jt.find("\"wall_time_ms\"") != std::string::npos);
}
