#include "advpos/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "advpos/theta_method.hpp"
#include "advpos/util.hpp"

namespace advpos {

SparsePolynomial::SparsePolynomial(std::initializer_list<std::pair<long, double>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

void SparsePolynomial::add_term(long exponent, double coeff) {
    if (exponent < 0) throw std::invalid_argument("SparsePolynomial: negative exponent");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const auto& t, long e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) {
        it->second += coeff;
        if (it->second == 0.0) terms_.erase(it);
    } else if (coeff != 0.0) {
        terms_.insert(it, {exponent, coeff});
    }
}

double SparsePolynomial::operator()(double y) const {
    double acc = 0.0;
    double power = 1.0;
    long at = 0;
    for (const auto& [e, c] : terms_) {
        power *= ipow(y, e - at);
        at = e;
        acc += c * power;
    }
    return acc;
}

double SparsePolynomial::coefficient_sum() const {
    double s = 0.0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

YCoordinate::YCoordinate(double y) : y_(y) {
    if (!(y > 0.0 && y < 1.0)) throw std::invalid_argument("YCoordinate: y must lie in (0,1)");
}

YCoordinate y_from(double theta, double nu) {
    if (!(theta > 0.0 && theta <= 1.0))
        throw std::invalid_argument("y_from: theta must lie in (0,1]");
    if (!(nu > 0.0)) throw std::invalid_argument("y_from: nu must be positive");
    const double tn = theta * nu;
    // (sqrt(1+tn^2)-1)/tn rewritten to avoid cancellation for small tn.
    return YCoordinate(tn / (std::sqrt(1.0 + tn * tn) + 1.0));
}

double nu_from(YCoordinate y, double theta) {
    if (!(theta > 0.0 && theta <= 1.0))
        throw std::invalid_argument("nu_from: theta must lie in (0,1]");
    const double v = y.value();
    return 2.0 * v / ((1.0 - v * v) * theta);
}

double det_D_closed(int k, YCoordinate y) {
    if (k < 1) throw std::invalid_argument("det_D_closed: k must be >= 1");
    const double v = y.value();
    const long n = 2L * k + 1;
    return one_minus_pow(v, 4L * k + 2) / ipow(1.0 - v * v, n);
}

double det_D_recursive(int k, double mu) {
    if (k < 1) throw std::invalid_argument("det_D_recursive: k must be >= 1");
    if (!(mu > 0.0)) throw std::invalid_argument("det_D_recursive: mu must be positive");
    double d1 = 1.0 + 3.0 * mu / 4.0;
    double d2 = 1.0 + 5.0 * mu / 4.0 + 5.0 * mu * mu / 16.0;
    if (k == 1) return d1;
    if (k == 2) return d2;
    for (int i = 3; i <= k; ++i) {
        const double d3 = (1.0 + mu / 2.0) * d2 - (mu * mu / 16.0) * d1;
        d1 = d2;
        d2 = d3;
    }
    return d2;
}

SparsePolynomial poly_PL(int k, double theta) {
    if (k < 1) throw std::invalid_argument("poly_PL: k must be >= 1");
    return SparsePolynomial{{0, theta},
                            {2, theta - 2.0},
                            {4L * k + 2, 2.0 - theta},
                            {4L * k + 4, -theta}};
}

SparsePolynomial poly_PR(int k) {
    if (k < 1) throw std::invalid_argument("poly_PR: k must be >= 1");
    return SparsePolynomial{{0, -1.0}, {2L * k - 1, 1.0}, {2L * k + 1, 1.0}, {4L * k, 1.0}};
}

SparsePolynomial poly_Pjk(int j, int k) {
    if (k < 1) throw std::invalid_argument("poly_Pjk: k must be >= 1");
    if (j < 2 || j > 2 * k + 1) throw std::invalid_argument("poly_Pjk: j must lie in [2, 2k+1]");
    const double sj = (j % 2 == 0) ? 1.0 : -1.0;  // (-1)^j
    SparsePolynomial p;
    p.add_term(4L * k + 2 - j, -sj);
    p.add_term(2L * k - 1 + j, 1.0);
    p.add_term(2L * k + 1 - j, sj);
    p.add_term(j - 2L, 1.0);
    return p;
}

double entry_closed(int j, int k, double theta, double nu) {
    if (k < 1) throw std::invalid_argument("entry_closed: k must be >= 1");
    if (j < 1 || j > 2 * k + 1) throw std::invalid_argument("entry_closed: j must lie in [1, 2k+1]");
    const YCoordinate yc = y_from(theta, nu);
    const double y = yc.value();
    if (y > 1.0 - 1e-8)
        throw std::domain_error("entry_closed: y too close to 1; use the large-nu limit formulas");
    const double denom_core = (1.0 + y * y) * one_minus_pow(y, 4L * k + 2);
    if (j == 1) return poly_PL(k, theta)(y) / (denom_core * theta);
    const double om = 1.0 - y * y;
    return nu * om * om * poly_Pjk(j, k)(y) / (2.0 * denom_core);
}

Corollary1Report verify_corollary1(int k, double theta, double nu, double tol) {
    if (k < 1) throw std::invalid_argument("verify_corollary1: k must be >= 1");
    const int m = 2 * k + 1;
    const FullStepParams p{SchemeKind::Centered2, m, theta, nu};
    const auto trig = build_M_trig(p).M.first_row();
    const auto direct = build_M_direct(p).M.first_row();

    Corollary1Report rep;
    for (int j = 1; j <= m; ++j) {
        const double closed = entry_closed(j, k, theta, nu);
        const double t = trig[static_cast<size_t>(j - 1)];
        const double d = direct[static_cast<size_t>(j - 1)];
        rep.trig_vs_closed = std::max(rep.trig_vs_closed, rel_err(t, closed));
        rep.closed_vs_direct = std::max(rep.closed_vs_direct, rel_err(closed, d));
        rep.trig_vs_direct = std::max(rep.trig_vs_direct, rel_err(t, d));
    }

    // Determinant identity: prod_l (1 - i theta nu sin xi_l) against both the
    // kappa-root form and the y form.
    std::complex<double> prod = 1.0;
    for (int l = 0; l < m; ++l) {
        const double xi = 2.0 * std::numbers::pi * l / m;
        prod *= std::complex<double>(1.0, -theta * nu * std::sin(xi));
    }
    const double mu = mu_of(theta, nu);
    const double r = std::sqrt(1.0 + mu);
    const double kappa_form = ipow((r + 1.0) / 2.0, 2L * k + 1) - ipow((r - 1.0) / 2.0, 2L * k + 1);
    const double y_form = det_D_closed(k, y_from(theta, nu));
    const double scale = std::max(1.0, std::abs(prod));
    rep.det_err = std::max({rel_err(prod.real(), kappa_form), rel_err(prod.real(), y_form),
                            std::abs(prod.imag()) / scale});

    rep.max_err = std::max({rep.trig_vs_closed, rep.closed_vs_direct, rep.trig_vs_direct, rep.det_err});
    rep.pass = rep.max_err <= tol;
    return rep;
}

}  // namespace advpos
