#pragma once

#include <optional>
#include <vector>

#include "advpos/schemes.hpp"

namespace advpos {

/// Theta(y,k) = 2 y^2 (1 - y^{4k}) / ((1+y^2)(1 - y^{4k+2})), the value of
/// theta at which P_{L,k,theta}(y) = 0; strictly increasing on (0,1) with
/// limits 0 and 2k/(2k+1).
double theta_fn(double y, int k);

/// Unique root in (0,1) of the strictly increasing P_{R,k}, by bisection to
/// absolute tolerance tol on y (tol = 0 runs the bracket down to ulp width).
double root_yR(int k, double tol = 1e-13);

/// Unique y in (0,1) with Theta(y,k) = theta; requires 0 < theta < 2k/(2k+1).
double root_yL(int k, double theta, double tol = 1e-13);

/// Lower CFL boundary nu_R(k,theta) = (2 y_R(k)/(1 - y_R(k)^2)) / theta.
double nu_R(int k, double theta);

/// Upper CFL boundary; +infinity once theta >= 2k/(2k+1) (no upper bound on
/// nu there). The infinity marker survives into CSV as the literal "inf".
double nu_L(int k, double theta);

/// theta_k = Theta(y_R(k), k): smallest theta with nu_R(k,theta) <= nu_L(k,theta).
double theta_crit(int k);

/// Threshold nu_*(p,q) of the power-sum necessary condition
///   0 <= (sum_l sigma_l^p)^q <= m^{q-1} sum_l sigma_l^{pq}
/// for the Centered2 spectrum sigma_l = R(nu i sin xi_l): supremum of the
/// nu in (0, scan_max] violating it (fine log scan, then bisection), or 0 if
/// it never fails.
double jll_nu_star(int m, double theta, int p, int q, double scan_max);

/// Maximal nu-interval on which M(kind, m, theta, .) is entrywise >= -tol.
struct NuInterval {
    double lo = 0.0;
    double hi = 0.0;  // +infinity when the region is unbounded above
    int runs = 1;     // number of disjoint true runs seen on the scan grid;
                      // > 1 flags a (never observed) multi-interval outcome
};

/// Numeric analogue of the closed-form interval [nu_R, nu_L] for schemes
/// without closed forms: log scan over (0, nu_max] at 400 points per decade,
/// edge bisection, plus a local max refinement so that slivers narrower than
/// the grid (near region corners) are still found. hi is marked infinite only
/// when the predicate holds at nu_max and the large-nu limit entries are all
/// positive. Empty optional = empty region.
std::optional<NuInterval> nu_interval_numeric(SchemeKind kind, int m, double theta,
                                              double nu_max, double tol);

/// Smallest theta (to tolerance tol) at which nu_interval_numeric is
/// non-empty, by bisection over theta.
double corner_theta(SchemeKind kind, int m, double tol);

struct RegionSample {
    SchemeKind kind = SchemeKind::Centered2;
    int m = 0;
    double theta = 0.0;
    double nu = 0.0;
    double min_entry = 0.0;
    bool nonneg = false;
};

/// One sample per (theta, nu) grid point, theta-major, via the Fourier route.
std::vector<RegionSample> region_scan(SchemeKind kind, int m,
                                      const std::vector<double>& theta_grid,
                                      const std::vector<double>& nu_grid, double tol);

/// M_{1,m} for even m; the scanned-grid witness of the even-m obstruction.
double even_m_negativity_witness(SchemeKind kind, int m, double theta, double nu);

/// p_8(y) = -3(8+3 sqrt 2) y^4 + 64 y^3 - 32(7+5 sqrt 2) y^2 + 256 y - 256(2+sqrt 2),
/// the sign certificate of M_{1,8} for the even spectral scheme at y = pi theta nu.
double eval_p8(double y);

struct BoundarySample {
    double theta = 0.0;
    double nu_r = 0.0;
    double nu_l = 0.0;  // may be +infinity
};

struct BoundaryCurve {
    int k = 1;
    double theta_critical = 0.0;
    std::vector<BoundarySample> samples;
};

BoundaryCurve boundary_curve(int k, const std::vector<double>& theta_grid);

}  // namespace advpos
