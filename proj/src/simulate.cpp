#include "advpos/simulate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "advpos/theta_method.hpp"

namespace advpos {

namespace {

double fractional_part(double x) {
    const double f = x - std::floor(x);
    return (f >= 1.0) ? 0.0 : f;  // guard against floor rounding at integers
}

// u_out[i] = sum_j M_{i+1,j+1} u[j] = sum_j row[(j-i) mod m] u[j]
void apply_first_row(const std::vector<double>& row, const std::vector<double>& u,
                     std::vector<double>& out) {
    const int m = static_cast<int>(row.size());
    for (int i = 0; i < m; ++i) {
        double s = 0.0;
        for (int j = 0; j < m; ++j) s += row[static_cast<size_t>(((j - i) % m + m) % m)] * u[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = s;
    }
}

}  // namespace

std::string_view profile_name(ProfileKind kind) {
    switch (kind) {
        case ProfileKind::SineBump: return "sine";
        case ProfileKind::Step: return "step";
        case ProfileKind::Gaussian: return "gaussian";
        case ProfileKind::Basis: return "basis";
    }
    throw std::invalid_argument("profile_name: bad kind");
}

ProfileKind parse_profile(std::string_view name) {
    if (name == "sine") return ProfileKind::SineBump;
    if (name == "step") return ProfileKind::Step;
    if (name == "gaussian") return ProfileKind::Gaussian;
    if (name == "basis") return ProfileKind::Basis;
    throw std::invalid_argument("unknown profile '" + std::string(name) + "'");
}

std::function<double(double)> make_profile(ProfileKind kind, int m, int basis_index) {
    switch (kind) {
        case ProfileKind::SineBump:
            return [](double x) { return 1.0 + std::sin(2.0 * std::numbers::pi * x); };
        case ProfileKind::Step:
            return [](double x) { return fractional_part(x) < 0.5 ? 1.0 : 0.0; };
        case ProfileKind::Gaussian:
            return [](double x) {
                const double d = fractional_part(x) - 0.5;
                return std::exp(-100.0 * d * d);
            };
        case ProfileKind::Basis: {
            if (m < 1) throw std::invalid_argument("make_profile: basis profile needs m >= 1");
            if (basis_index < 1 || basis_index > m)
                throw std::invalid_argument("make_profile: basis index out of range");
            const double dx = 1.0 / m;
            const double center = basis_index * dx;
            return [dx, center](double x) {
                double d = fractional_part(x) - fractional_part(center);
                d -= std::round(d);  // periodic distance
                return (d >= -0.5 * dx && d < 0.5 * dx) ? 1.0 : 0.0;
            };
        }
    }
    throw std::invalid_argument("make_profile: bad kind");
}

double exact_solution(const std::function<double(double)>& profile, double x, double t, double a) {
    return profile(fractional_part(x + a * t));
}

namespace {

// Piecewise-constant interpolant of grid samples over the cells
// [j dx - dx/2, j dx + dx/2), periodic.
std::function<double(double)> piecewise_profile(std::vector<double> values) {
    const int m = static_cast<int>(values.size());
    return [values = std::move(values), m](double x) {
        const double dx = 1.0 / m;
        const long j = std::lround(fractional_part(x) / dx) % m;  // grid index mod m
        return values[static_cast<size_t>((j + m - 1) % m)];
    };
}

}  // namespace

SimulationReport run(const SimulationConfig& config, double tol) {
    if (tol < 0.0) throw std::invalid_argument("run: tol must be >= 0");
    if (config.steps < 1) throw std::invalid_argument("run: steps must be >= 1");
    if (!(config.a > 0.0)) throw std::invalid_argument("run: wave speed must be positive");
    const FullStepParams params{config.kind, config.m, config.theta, config.nu};
    const auto row = build_M_trig(params).M.first_row();

    const int m = config.m;
    const double dx = 1.0 / m;
    const double dt = config.nu * dx / config.a;
    if (config.initial_values && static_cast<int>(config.initial_values->size()) != m)
        throw std::invalid_argument("run: initial sample vector must have length m");
    const auto profile = config.initial_values
                             ? piecewise_profile(*config.initial_values)
                             : make_profile(config.profile, m, config.basis_index);

    std::vector<double> u(static_cast<size_t>(m)), next(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) u[static_cast<size_t>(j)] = profile((j + 1) * dx);

    SimulationReport report;
    report.min_over_run = u[0];
    for (double v : u) report.min_over_run = std::min(report.min_over_run, v);
    if (config.record_trajectory) report.trajectory.push_back(u);

    for (int n = 1; n <= config.steps; ++n) {
        apply_first_row(row, u, next);
        u.swap(next);
        double step_min = u[0];
        for (double v : u) step_min = std::min(step_min, v);
        report.min_over_run = std::min(report.min_over_run, step_min);
        if (step_min < -tol && !report.first_violation_step) report.first_violation_step = n;
        if (config.record_trajectory) report.trajectory.push_back(u);
    }

    const double t_final = config.steps * dt;
    double err = 0.0;
    for (int j = 0; j < m; ++j) {
        const double exact = exact_solution(profile, (j + 1) * dx, t_final, config.a);
        err = std::max(err, std::abs(u[static_cast<size_t>(j)] - exact));
    }
    report.final_error_max = err;
    return report;
}

double convergence_order(SchemeKind kind, double theta, double a, ProfileKind profile,
                         int refinements) {
    if (refinements < 3) throw std::invalid_argument("convergence_order: need refinements >= 3");
    if (profile == ProfileKind::Basis)
        throw std::invalid_argument("convergence_order: needs a smooth profile");
    const double nu = 0.5;
    int m = 16;
    while (m < min_points(kind)) m *= 2;

    std::vector<double> log_h, log_e;
    for (int r = 0; r < refinements; ++r, m *= 2) {
        // Integer step count reaching t = 1 exactly; nu is re-derived from it
        // so that steps*dt == 1 without drift.
        const int steps = std::max(1, static_cast<int>(std::lround(a * m / nu)));
        SimulationConfig config;
        config.kind = kind;
        config.m = m;
        config.theta = theta;
        config.a = a;
        config.nu = a * static_cast<double>(m) / steps;
        config.steps = steps;
        config.profile = profile;
        const auto report = run(config, 1.0);  // violations irrelevant here
        log_h.push_back(std::log(1.0 / m));
        log_e.push_back(std::log(std::max(report.final_error_max, 1e-300)));
    }

    const int n = static_cast<int>(log_h.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sx += log_h[static_cast<size_t>(i)];
        sy += log_e[static_cast<size_t>(i)];
        sxx += log_h[static_cast<size_t>(i)] * log_h[static_cast<size_t>(i)];
        sxy += log_h[static_cast<size_t>(i)] * log_e[static_cast<size_t>(i)];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace advpos
