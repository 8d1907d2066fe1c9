#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numeric>
#include <string>

#include "advpos/io.hpp"
#include "advpos/region.hpp"
#include "advpos/simulate.hpp"
#include "advpos/theta_method.hpp"
#include "advpos/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArguments = 2;

// --out resolution: relative paths land in $ADVPOS_OUT_DIR when set.
std::filesystem::path resolve_out(const std::string& out) {
    std::filesystem::path p(out);
    if (const char* dir = std::getenv("ADVPOS_OUT_DIR"); dir && *dir && p.is_relative())
        return std::filesystem::path(dir) / p;
    return p;
}

void emit(const std::string& out, const std::string& content) {
    if (out.empty()) {
        std::cout << content;
        return;
    }
    const auto path = resolve_out(out);
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file '" + path.string() + "'");
    f << content;
    if (!f.good()) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::pair<int, int> parse_range(const std::string& spec) {
    const auto pos = spec.find(':');
    if (pos == std::string::npos) {
        const int k = std::stoi(spec);
        return {k, k};
    }
    return {std::stoi(spec.substr(0, pos)), std::stoi(spec.substr(pos + 1))};
}

int cmd_entries(const std::string& scheme, int m, double theta, double nu,
                const std::string& format, const std::string& out) {
    const advpos::FullStepParams p{advpos::parse_scheme(scheme), m, theta, nu};
    const auto fs = advpos::build_M_trig(p);
    const auto& row = fs.M.first_row();
    const auto [min_value, min_index] = fs.M.min_entry();
    const double row_sum = std::accumulate(row.begin(), row.end(), 0.0);

    if (format == "json") {
        json j;
        j["scheme"] = scheme;
        j["m"] = m;
        j["theta"] = theta;
        j["nu"] = nu;
        j["first_row"] = row;
        j["min_entry"] = min_value;
        j["min_index"] = min_index;
        j["row_sum"] = row_sum;
        j["max_imag_residue"] = fs.max_imag_residue;
        emit(out, j.dump(2) + "\n");
        return kExitOk;
    }
    std::string text;
    for (size_t i = 0; i < row.size(); ++i) {
        if (i) text += ' ';
        text += advpos::format_double17(row[i]);
    }
    text += '\n';
    text += "min_entry " + advpos::format_double17(min_value) + " at j=" +
            std::to_string(min_index) + '\n';
    text += "row_sum " + advpos::format_double17(row_sum) + '\n';
    emit(out, text);
    return kExitOk;
}

int cmd_region(const std::string& scheme, int m, const std::string& theta_grid,
               const std::string& nu_grid, double tol, const std::string& out) {
    const auto samples = advpos::region_scan(advpos::parse_scheme(scheme), m,
                                             advpos::parse_grid(theta_grid),
                                             advpos::parse_grid(nu_grid), tol);
    emit(out, advpos::region_csv(samples));
    return kExitOk;
}

int cmd_boundary(const std::string& k_range, const std::string& theta_grid,
                 const std::string& out) {
    const auto [k_lo, k_hi] = parse_range(k_range);
    const auto thetas = advpos::parse_grid(theta_grid);
    std::vector<advpos::BoundaryCurve> curves;
    for (int k = k_lo; k <= k_hi; ++k) curves.push_back(advpos::boundary_curve(k, thetas));
    emit(out, advpos::boundary_csv(curves));
    return kExitOk;
}

int cmd_roots(const std::string& k_range, const std::string& out) {
    const auto [k_lo, k_hi] = parse_range(k_range);
    std::string csv = "k,y_R,theta_k,nu_R_theta1\n";
    for (int k = k_lo; k <= k_hi; ++k) {
        csv += std::to_string(k) + ',' + advpos::format_double17(advpos::root_yR(k)) + ',' +
               advpos::format_double17(advpos::theta_crit(k)) + ',' +
               advpos::format_double17(advpos::nu_R(k, 1.0)) + '\n';
    }
    emit(out, csv);
    return kExitOk;
}

int cmd_verify(int level, const std::string& suite, bool perturb) {
    const auto results = advpos::run_verification(level, suite, perturb);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << ' ' << r.name << ": " << r.detail << '\n';
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "verification passed" : "verification FAILED") << '\n';
    return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_simulate(const std::string& scheme, int m, double theta, double nu, double a, int steps,
                 const std::string& profile, int basis_index, double tol,
                 const std::string& trajectory, const std::string& out) {
    advpos::SimulationConfig config;
    config.kind = advpos::parse_scheme(scheme);
    config.m = m;
    config.theta = theta;
    config.nu = nu;
    config.a = a;
    config.steps = steps;
    config.profile = advpos::parse_profile(profile);
    config.basis_index = basis_index;
    config.record_trajectory = !trajectory.empty();
    const auto report = advpos::run(config, tol);

    json j;
    j["scheme"] = scheme;
    j["m"] = m;
    j["theta"] = theta;
    j["nu"] = nu;
    j["a"] = a;
    j["steps"] = steps;
    j["profile"] = profile;
    j["min_over_run"] = report.min_over_run;
    if (report.first_violation_step)
        j["first_violation_step"] = *report.first_violation_step;
    else
        j["first_violation_step"] = nullptr;
    j["final_error_max"] = report.final_error_max;
    emit(out, j.dump(2) + "\n");

    if (!trajectory.empty()) {
        std::string csv = "step,x_index,value\n";
        for (size_t n = 0; n < report.trajectory.size(); ++n)
            for (size_t i = 0; i < report.trajectory[n].size(); ++i)
                csv += std::to_string(n) + ',' + std::to_string(i + 1) + ',' +
                       advpos::format_double17(report.trajectory[n][i]) + '\n';
        emit(trajectory, csv);
    }
    return kExitOk;
}

int cmd_jll(int m, double theta, int p_max, std::vector<int> q_list, double scan_max,
            const std::string& out) {
    std::string csv = "p,q,nu_star\n";
    for (int q : q_list)
        for (int p = 1; p <= p_max; ++p)
            csv += std::to_string(p) + ',' + std::to_string(q) + ',' +
                   advpos::format_double17(advpos::jll_nu_star(m, theta, p, q, scan_max)) + '\n';
    emit(out, csv);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Positivity analysis of theta-method advection discretizations"};
    app.require_subcommand(1);

    std::string scheme = "centered2", format = "csv", out, theta_grid, nu_grid;
    std::string k_range = "1:6", suite = "all", profile = "sine", trajectory;
    int m = 3, steps = 10, level = 1, p_max = 9, basis_index = 1;
    double theta = 1.0, nu = 1.0, a = 1.0, tol = 1e-12, scan_max = 100.0;
    bool perturb = false;
    std::vector<int> q_list{2, 3};

    auto* entries = app.add_subcommand("entries", "First row of M plus min entry and row sum");
    entries->add_option("--scheme", scheme);
    entries->add_option("--m", m);
    entries->add_option("--theta", theta);
    entries->add_option("--nu", nu);
    entries->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));
    entries->add_option("--out", out);

    auto* region = app.add_subcommand("region", "Non-negativity scan over a (theta,nu) grid");
    region->add_option("--scheme", scheme);
    region->add_option("--m", m);
    region->add_option("--theta-grid", theta_grid)->required();
    region->add_option("--nu-grid", nu_grid)->required();
    region->add_option("--tol", tol);
    region->add_option("--out", out);

    auto* boundary = app.add_subcommand("boundary", "nu_R/nu_L boundary curves (centered2, odd m)");
    boundary->add_option("--k-range", k_range);
    boundary->add_option("--theta-grid", theta_grid)->required();
    boundary->add_option("--out", out);

    auto* roots = app.add_subcommand("roots", "y_R, theta_k and nu_R(k,1) per k");
    roots->add_option("--k-range", k_range);
    roots->add_option("--out", out);

    auto* verify = app.add_subcommand("verify", "Run the identity/invariant self-check suites");
    verify->add_option("--level", level)->check(CLI::PositiveNumber);
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "corollary1", "recursions", "bounds", "jll"}));
    verify->add_flag("--perturb", perturb, "Inject a coefficient perturbation (harness sanity)");

    auto* simulate = app.add_subcommand("simulate", "Time-step the full discretization");
    simulate->add_option("--scheme", scheme);
    simulate->add_option("--m", m);
    simulate->add_option("--theta", theta);
    simulate->add_option("--nu", nu);
    simulate->add_option("--a", a);
    simulate->add_option("--steps", steps);
    simulate->add_option("--profile", profile)
        ->check(CLI::IsMember({"sine", "step", "gaussian", "basis"}));
    simulate->add_option("--basis-index", basis_index);
    simulate->add_option("--tol", tol);
    simulate->add_option("--trajectory", trajectory, "Write step,x_index,value CSV here");
    simulate->add_option("--out", out);

    auto* jll = app.add_subcommand("jll", "Power-sum thresholds nu_*(p,q)");
    jll->add_option("--m", m);
    jll->add_option("--theta", theta);
    jll->add_option("--p-max", p_max);
    jll->add_option("--q-list", q_list);
    jll->add_option("--scan-max", scan_max);
    jll->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitBadArguments;
    }

    try {
        if (entries->parsed()) return cmd_entries(scheme, m, theta, nu, format, out);
        if (region->parsed()) return cmd_region(scheme, m, theta_grid, nu_grid, tol, out);
        if (boundary->parsed()) return cmd_boundary(k_range, theta_grid, out);
        if (roots->parsed()) return cmd_roots(k_range, out);
        if (verify->parsed()) return cmd_verify(level, suite, perturb);
        if (simulate->parsed())
            return cmd_simulate(scheme, m, theta, nu, a, steps, profile, basis_index, tol,
                                trajectory, out);
        if (jll->parsed()) return cmd_jll(m, theta, p_max, q_list, scan_max, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArguments;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    return kExitBadArguments;
}
