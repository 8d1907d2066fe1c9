#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "advpos/schemes.hpp"

namespace advpos {

/// Initial profiles on the periodic unit interval. SineBump is the smooth
/// profile for order tests; Step, Gaussian and Basis stress positivity.
enum class ProfileKind { SineBump, Step, Gaussian, Basis };

std::string_view profile_name(ProfileKind kind);
ProfileKind parse_profile(std::string_view name);

/// Profile as a function of x in [0,1). Basis needs the grid context: it is
/// the indicator of the half-open cell around grid point basis_index.
std::function<double(double)> make_profile(ProfileKind kind, int m, int basis_index);

/// U(x,t) = U_0({x + a t}) with {.} the fractional part.
double exact_solution(const std::function<double(double)>& profile, double x, double t, double a);

struct SimulationConfig {
    SchemeKind kind = SchemeKind::Upwind1;
    int m = 10;
    double theta = 0.0;
    double a = 1.0;   // wave speed > 0
    double nu = 0.5;  // dt = nu*dx/a with dx = 1/m
    int steps = 10;
    ProfileKind profile = ProfileKind::SineBump;
    int basis_index = 1;
    /// Explicit grid samples; when set they override `profile` and are read
    /// as the piecewise-constant interpolant over the grid cells (so the
    /// exact-solution error stays well defined).
    std::optional<std::vector<double>> initial_values;
    bool record_trajectory = false;
};

struct SimulationReport {
    double min_over_run = 0.0;
    std::optional<int> first_violation_step;  // absent iff min_over_run >= -tol
    double final_error_max = 0.0;
    std::vector<std::vector<double>> trajectory;  // states u^0..u^N when recorded
};

/// Iterates u^{n+1} = M u^n from the sampled profile, applying the
/// precomputed first row of M by cyclic convolution (M is constant across
/// steps). Tracks the running minimum and the first step with an entry below
/// -tol, and measures the final max-norm error at the grid points against the
/// exact shifted profile.
SimulationReport run(const SimulationConfig& config, double tol);

/// Least-squares slope of log(error) vs log(dx) at t = 1 over a doubling grid
/// ladder, nu held fixed (dt proportional to dx).
double convergence_order(SchemeKind kind, double theta, double a, ProfileKind profile,
                         int refinements);

}  // namespace advpos
