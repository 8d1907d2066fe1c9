#include "advpos/region.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "advpos/closed_form.hpp"
#include "advpos/theta_method.hpp"
#include "advpos/util.hpp"

namespace advpos {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Bisection of a monotone-increasing f on (lo, hi) with known signs
// f(lo) < 0 < f(hi); endpoints themselves are never evaluated.
double bisect_increasing(const std::function<double(double)>& f, double lo, double hi, double tol) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at ulp width
        (f(mid) < 0.0 ? lo : hi) = mid;
        if (hi - lo <= tol) break;
    }
    return 0.5 * (lo + hi);
}

// Boolean edge bisection: pred(lo) != pred(hi); returns the crossing point.
double bisect_predicate(const std::function<bool(double)>& pred, double lo, double hi,
                        bool lo_value) {
    for (int it = 0; it < 120; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= std::min(lo, hi) || mid >= std::max(lo, hi)) break;
        (pred(mid) == lo_value ? lo : hi) = mid;
        if (std::abs(hi - lo) <= 1e-13 * std::max(std::abs(lo), std::abs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

// Golden-section maximization of f over [a,b] in log coordinates.
double golden_max(const std::function<double(double)>& f, double a, double b, double* argmax) {
    constexpr double inv_phi = 0.6180339887498949;
    double la = std::log(a), lb = std::log(b);
    double x1 = lb - inv_phi * (lb - la);
    double x2 = la + inv_phi * (lb - la);
    double f1 = f(std::exp(x1)), f2 = f(std::exp(x2));
    for (int it = 0; it < 120 && (lb - la) > 1e-13; ++it) {
        if (f1 < f2) {
            la = x1;
            x1 = x2;
            f1 = f2;
            x2 = la + inv_phi * (lb - la);
            f2 = f(std::exp(x2));
        } else {
            lb = x2;
            x2 = x1;
            f2 = f1;
            x1 = lb - inv_phi * (lb - la);
            f1 = f(std::exp(x1));
        }
    }
    const double xm = 0.5 * (la + lb);
    if (argmax) *argmax = std::exp(xm);
    return f(std::exp(xm));
}

int grid_points_per_decade(double lo, double hi) {
    const double decades = std::log10(hi / lo);
    return std::max(2, static_cast<int>(std::ceil(400.0 * decades)) + 1);
}

double min_entry_at(SchemeKind kind, int m, double theta, double nu) {
    return build_M_trig({kind, m, theta, nu}).M.min_entry().first;
}

}  // namespace

double theta_fn(double y, int k) {
    if (k < 1) throw std::invalid_argument("theta_fn: k must be >= 1");
    if (!(y > 0.0 && y < 1.0)) throw std::invalid_argument("theta_fn: y must lie in (0,1)");
    return 2.0 * y * y * one_minus_pow(y, 4L * k) /
           ((1.0 + y * y) * one_minus_pow(y, 4L * k + 2));
}

double root_yR(int k, double tol) {
    if (k < 1) throw std::invalid_argument("root_yR: k must be >= 1");
    if (tol < 0.0) throw std::invalid_argument("root_yR: tol must be >= 0");
    const SparsePolynomial pr = poly_PR(k);
    return bisect_increasing([&pr](double y) { return pr(y); }, 0.0, 1.0, tol);
}

double root_yL(int k, double theta, double tol) {
    if (k < 1) throw std::invalid_argument("root_yL: k must be >= 1");
    const double cap = 2.0 * k / (2.0 * k + 1.0);
    if (!(theta > 0.0 && theta < cap))
        throw std::invalid_argument("root_yL: theta must lie in (0, 2k/(2k+1))");
    return bisect_increasing([k, theta](double y) { return theta_fn(y, k) - theta; }, 0.0, 1.0, tol);
}

double nu_R(int k, double theta) {
    if (!(theta > 0.0 && theta <= 1.0)) throw std::invalid_argument("nu_R: theta must lie in (0,1]");
    const double y = root_yR(k, 0.0);
    return 2.0 * y / ((1.0 - y * y) * theta);
}

double nu_L(int k, double theta) {
    if (!(theta > 0.0 && theta <= 1.0)) throw std::invalid_argument("nu_L: theta must lie in (0,1]");
    if (theta >= 2.0 * k / (2.0 * k + 1.0)) return kInf;
    const double y = root_yL(k, theta, 0.0);
    return 2.0 * y / ((1.0 - y * y) * theta);
}

double theta_crit(int k) { return theta_fn(root_yR(k, 0.0), k); }

double jll_nu_star(int m, double theta, int p, int q, double scan_max) {
    if (m < 3) throw std::invalid_argument("jll_nu_star: m must be >= 3");
    if (p < 1 || q < 1) throw std::invalid_argument("jll_nu_star: p, q must be >= 1");
    if (!(scan_max > 0.0)) throw std::invalid_argument("jll_nu_star: scan_max must be positive");

    std::vector<double> sines(static_cast<size_t>(m));
    for (int l = 0; l < m; ++l) sines[static_cast<size_t>(l)] = std::sin(2.0 * std::numbers::pi * l / m);

    auto power_sum = [&](double nu, int e) {
        std::complex<double> s = 0.0;
        for (int l = 0; l < m; ++l) {
            const std::complex<double> sig =
                stability_R(theta, {0.0, nu * sines[static_cast<size_t>(l)]});
            std::complex<double> acc = 1.0, base = sig;
            for (int n = e; n > 0; n >>= 1) {
                if (n & 1) acc *= base;
                base *= base;
            }
            s += acc;
        }
        // The spectrum is conjugation-closed, so the sum is real up to
        // round-off; anything bigger means a broken convention upstream.
        if (std::abs(s.imag()) > 1e-9)
            throw std::runtime_error("jll_nu_star: power sum has non-vanishing imaginary part");
        return s.real();
    };
    auto condition_fails = [&](double nu) {
        const double sp = power_sum(nu, p);
        const double spq = power_sum(nu, p * q);
        const double lhs = ipow(sp, q);
        return lhs < 0.0 || lhs > ipow(static_cast<double>(m), q - 1) * spq;
    };

    const double lo = std::min(1e-3, scan_max / 10.0);
    const auto grid = logspace(lo, scan_max, grid_points_per_decade(lo, scan_max));
    int last_fail = -1;
    for (int i = 0; i < static_cast<int>(grid.size()); ++i)
        if (condition_fails(grid[static_cast<size_t>(i)])) last_fail = i;
    if (last_fail < 0) return 0.0;
    if (last_fail + 1 == static_cast<int>(grid.size())) return scan_max;
    return bisect_predicate(condition_fails, grid[static_cast<size_t>(last_fail)],
                            grid[static_cast<size_t>(last_fail + 1)], true);
}

std::optional<NuInterval> nu_interval_numeric(SchemeKind kind, int m, double theta,
                                              double nu_max, double tol) {
    if (m % 2 == 0) throw std::invalid_argument("nu_interval_numeric: m must be odd");
    if (m < min_points(kind)) throw std::invalid_argument("nu_interval_numeric: m below scheme minimum");
    if (!(nu_max > 0.0)) throw std::invalid_argument("nu_interval_numeric: nu_max must be positive");
    if (tol < 0.0) throw std::invalid_argument("nu_interval_numeric: tol must be >= 0");
    if (!(theta >= 0.0 && theta <= 1.0))
        throw std::invalid_argument("nu_interval_numeric: theta must lie in [0,1]");

    auto fmin = [&](double nu) { return min_entry_at(kind, m, theta, nu); };
    auto pred = [&](double nu) { return fmin(nu) >= -tol; };

    const double lo_grid = std::min(1e-2, nu_max / 10.0);
    const auto grid = logspace(lo_grid, nu_max, grid_points_per_decade(lo_grid, nu_max));
    const int n = static_cast<int>(grid.size());

    std::vector<double> vals(static_cast<size_t>(n));
    int first_true = -1, last_true = -1, runs = 0;
    bool prev = false;
    for (int i = 0; i < n; ++i) {
        vals[static_cast<size_t>(i)] = fmin(grid[static_cast<size_t>(i)]);
        const bool cur = vals[static_cast<size_t>(i)] >= -tol;
        if (cur && first_true < 0) first_true = i;
        if (cur) last_true = i;
        if (cur && !prev) ++runs;
        prev = cur;
    }

    if (first_true < 0) {
        // Nothing on the grid: refine around the best sample in case the
        // region is a sliver narrower than the grid spacing (it degenerates
        // to a point at the lower-left corner of the parameter region).
        int best = 0;
        for (int i = 1; i < n; ++i)
            if (vals[static_cast<size_t>(i)] > vals[static_cast<size_t>(best)]) best = i;
        const double a = grid[static_cast<size_t>(std::max(0, best - 1))];
        const double b = grid[static_cast<size_t>(std::min(n - 1, best + 1))];
        double peak_nu = grid[static_cast<size_t>(best)];
        const double peak = golden_max(fmin, a, b, &peak_nu);
        if (peak < -tol) return std::nullopt;
        NuInterval out;
        out.runs = 1;
        out.lo = (fmin(a) >= -tol) ? a : bisect_predicate(pred, a, peak_nu, false);
        out.hi = (fmin(b) >= -tol) ? b : bisect_predicate(pred, peak_nu, b, true);
        return out;
    }

    NuInterval out;
    out.runs = runs;
    out.lo = (first_true == 0)
                 ? grid[0]
                 : bisect_predicate(pred, grid[static_cast<size_t>(first_true - 1)],
                                    grid[static_cast<size_t>(first_true)], false);
    if (last_true == n - 1) {
        // The nu -> inf entry limits only exist for theta > 0.
        const bool limits_ok = theta > 0.0 && limit_entry_first(m, theta) >= -tol &&
                               limit_entry_tail(m, theta) > 0.0;
        out.hi = limits_ok ? kInf : nu_max;
    } else {
        out.hi = bisect_predicate(pred, grid[static_cast<size_t>(last_true)],
                                  grid[static_cast<size_t>(last_true + 1)], true);
    }
    return out;
}

double corner_theta(SchemeKind kind, int m, double tol) {
    if (kind == SchemeKind::Upwind1)
        throw std::invalid_argument("corner_theta: not defined for upwind1");
    if (m % 2 == 0) throw std::invalid_argument("corner_theta: m must be odd");
    if (!(tol > 0.0)) throw std::invalid_argument("corner_theta: tol must be positive");

    auto cap = [&](double theta) {
        if (kind == SchemeKind::Centered2) {
            // 10x the closed-form upper bracket for nu_R at this theta.
            const int k = (m - 1) / 2;
            const double r = std::sqrt(2.0) - 1.0;
            const double u = std::pow(r, 1.0 / (2.0 * k + 1.0));
            return 10.0 * 2.0 * u / ((1.0 - u * u) * theta);
        }
        return 1e4;
    };
    auto nonempty = [&](double theta) {
        return nu_interval_numeric(kind, m, theta, cap(theta), 0.0).has_value();
    };

    double hi = 1.0;
    if (!nonempty(hi)) throw std::runtime_error("corner_theta: region empty even at theta = 1");
    double lo = 0.05;
    while (lo > 1e-4 && nonempty(lo)) lo *= 0.5;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (nonempty(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<RegionSample> region_scan(SchemeKind kind, int m,
                                      const std::vector<double>& theta_grid,
                                      const std::vector<double>& nu_grid, double tol) {
    if (theta_grid.empty() || nu_grid.empty())
        throw std::invalid_argument("region_scan: grids must be non-empty");
    std::vector<RegionSample> out;
    out.reserve(theta_grid.size() * nu_grid.size());
    for (double theta : theta_grid) {
        for (double nu : nu_grid) {
            const auto check = is_positivity_preserving({kind, m, theta, nu}, tol);
            out.push_back({kind, m, theta, nu, check.min_value, check.nonneg});
        }
    }
    return out;
}

double even_m_negativity_witness(SchemeKind kind, int m, double theta, double nu) {
    if (m % 2 != 0) throw std::invalid_argument("even_m_negativity_witness: m must be even");
    const auto fs = build_M_trig({kind, m, theta, nu});
    return fs.M.first_row().back();
}

double eval_p8(double y) {
    if (y < 0.0) throw std::invalid_argument("eval_p8: y must be >= 0");
    const double s2 = std::sqrt(2.0);
    const double a4 = -3.0 * (8.0 + 3.0 * s2);
    const double a2 = -32.0 * (7.0 + 5.0 * s2);
    const double a0 = -256.0 * (2.0 + s2);
    return (((a4 * y + 64.0) * y + a2) * y + 256.0) * y + a0;
}

BoundaryCurve boundary_curve(int k, const std::vector<double>& theta_grid) {
    if (theta_grid.empty()) throw std::invalid_argument("boundary_curve: grid must be non-empty");
    BoundaryCurve curve;
    curve.k = k;
    curve.theta_critical = theta_crit(k);
    curve.samples.reserve(theta_grid.size());
    for (double theta : theta_grid) curve.samples.push_back({theta, nu_R(k, theta), nu_L(k, theta)});
    return curve;
}

}  // namespace advpos
