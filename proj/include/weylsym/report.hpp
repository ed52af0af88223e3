#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylsym/check.hpp"

namespace weylsym {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

struct SuiteResult {
    std::string suite;
    std::vector<ItemResult> items;
};

struct Report {
    std::string tool_version = kToolVersion;
    int schema_version = kSchemaVersion;
    int k = 0;
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;

    bool has_fail() const;
    std::size_t item_count() const;
};

// suite catalog in its fixed order; "all" expands to every entry
const std::vector<std::string>& suite_names();

// Deterministic report for (k, suite, seed, version).  `jobs` caps the
// number of worker threads used for independent suites; the aggregation
// order never depends on the schedule.
Report run_suite(int k, const std::string& suite_name, std::uint64_t seed,
                 int jobs = 1);

// Canonical JSON; wall-clock timings are emitted only on request so that
// identical (k, suite, seed, version) inputs serialize byte-identically.
std::string report_to_json(const Report& r, bool include_timings = false);

}  // namespace weylsym
