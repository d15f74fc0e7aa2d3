#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace bezout {

struct VerifyFailure {
    std::string inputs, expected, got;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int passed = 0;
    int failed = 0;
    std::vector<VerifyFailure> failures;

    bool ok() const { return failed == 0; }
};

// d_lo/d_hi/trials of -1 pick the suite defaults.
struct VerifyOptions {
    int d_lo = -1;
    int d_hi = -1;
    int trials = -1;
    std::uint64_t seed = 1;
};

std::vector<std::string> suite_names();

// suite is one of suite_names(); throws DomainError otherwise.
SuiteReport run_suite(const std::string& suite, const VerifyOptions& opts);

nlohmann::json report_to_json(const SuiteReport& r);
std::string report_text(const SuiteReport& r);

} // namespace bezout
