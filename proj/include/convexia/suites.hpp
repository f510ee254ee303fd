#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace convexia {

struct SuiteOptions {
    std::uint64_t seed = 1;
    int budget = 0;  // number of random cases; 0 selects the suite default
    int jobs = 1;
};

struct SuiteReport {
    std::string suite;
    int cases = 0;
    std::vector<nlohmann::json> failures;
};

nlohmann::json to_json(const SuiteReport& report);

const std::vector<std::string>& suite_names();

/// Runs a named suite. Throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace convexia
