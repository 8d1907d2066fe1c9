#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace advpos {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Self-check suites behind `verify`: the entry/determinant identity sweep
/// ("corollary1"), the determinant and first-entry recursion oracles
/// ("recursions"), the root and boundary bracket inequalities ("bounds"), and
/// the power-sum threshold table ("jll"). suite = "all" runs everything.
/// level >= 1 scales the sweep sizes. perturb injects a deliberate coefficient
/// perturbation so a healthy harness must report failures.
std::vector<SuiteResult> run_verification(int level, std::string_view suite, bool perturb);

}  // namespace advpos
