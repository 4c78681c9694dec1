#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratdyn/kernels.hpp"

namespace ratdyn::verify {

enum class Suite { Kernel, Congruence, Orbits, Asymptotics, FixedPoints, All };

std::optional<Suite> suite_from_string(std::string_view name);
std::string to_string(Suite s);

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

// Runs every check of the suite (All runs each suite in turn). Checks never
// throw; an exception inside a check is recorded as a failure.
std::vector<CheckResult> run_suite(Suite suite, kernels::Execution exec = kernels::default_execution());

} // namespace ratdyn::verify
