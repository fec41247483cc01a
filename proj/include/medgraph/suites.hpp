#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace medgraph {

struct SuiteCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteCheck> checks;
    double seconds = 0;

    bool pass() const;
};

struct SuiteOptions {
    int jobs = 1;
    std::uint64_t seed = 20240601;
};

// Throws UnknownSuite.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});
std::vector<std::string> suite_names();

} // namespace medgraph
