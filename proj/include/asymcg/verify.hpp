#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace asymcg {

struct SuiteResult {
    std::string name;
    unsigned passed = 0;
    unsigned failed = 0;
    std::vector<std::string> failures; // first few messages only

    bool ok() const { return failed == 0; }
};

/// Named seeded property campaigns. Each runs `count` independent trials
/// drawn from one deterministic stream; same seed, same verdict.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, unsigned count);

const std::vector<std::string>& suite_names();

} // namespace asymcg
