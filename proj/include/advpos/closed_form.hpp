#pragma once

#include <utility>
#include <vector>

#include "advpos/circulant.hpp"

namespace advpos {

/// Sparse (lacunary) polynomial: few terms regardless of degree. Terms are
/// kept with strictly increasing exponents, zero coefficients dropped.
class SparsePolynomial {
  public:
    SparsePolynomial() = default;
    SparsePolynomial(std::initializer_list<std::pair<long, double>> terms);

    /// Adds coeff * y^exponent, merging with an existing term if present.
    void add_term(long exponent, double coeff);

    /// Evaluation by exponent-gap power accumulation: with exponents like
    /// 4k+2 and only four terms, walking the gaps beats dense Horner.
    double operator()(double y) const;

    const std::vector<std::pair<long, double>>& terms() const { return terms_; }

    /// Value at y = 1 computed as the exact coefficient sum.
    double coefficient_sum() const;

  private:
    std::vector<std::pair<long, double>> terms_;
};

/// The variable y = (sqrt(1 + theta^2 nu^2) - 1)/(theta nu), a bijection from
/// mu = theta^2 nu^2 in (0,inf) onto (0,1). The matrix entries become sparse
/// polynomials in y, numerically benign where the raw rational functions in
/// (theta, nu) cancel badly.
class YCoordinate {
  public:
    explicit YCoordinate(double y);
    double value() const { return y_; }

  private:
    double y_;
};

/// y from (theta, nu); theta in (0,1], nu > 0. Throws for theta = 0 (the
/// transform is undefined there).
YCoordinate y_from(double theta, double nu);

/// Inverse relation nu = (2y/(1-y^2)) / theta.
double nu_from(YCoordinate y, double theta);

/// mu = theta^2 nu^2.
inline double mu_of(double theta, double nu) { return theta * theta * nu * nu; }

/// det(I - theta nu L) for Centered2 at m = 2k+1, closed form
/// (1 - y^{4k+2}) / (1 - y^2)^{2k+1}.
double det_D_closed(int k, YCoordinate y);

/// Same determinant by the second-order recursion
/// D_{k+2} = (1 + mu/2) D_{k+1} - (mu^2/16) D_k, from D_1, D_2.
/// Kept as an independent oracle for det_D_closed.
double det_D_recursive(int k, double mu);

/// Numerator polynomial of the leftmost entry M_{1,1}:
/// -theta y^{4k+4} - (theta-2) y^{4k+2} + (theta-2) y^2 + theta.
SparsePolynomial poly_PL(int k, double theta);

/// Numerator polynomial governing the rightmost entry:
/// y^{4k} + y^{2k+1} + y^{2k-1} - 1.
SparsePolynomial poly_PR(int k);

/// P_{j,k}(y) = (-1)^{j-1} y^{4k+2-j} + y^{2k-1+j} + (-1)^j y^{2k+1-j} + y^{j-2}
/// for 2 <= j <= 2k+1; poly_Pjk(2k+1, k) coincides with poly_PR(k).
SparsePolynomial poly_Pjk(int j, int k);

/// Closed-form first-row entry M_{1,j}(2k+1, theta, nu):
///   j = 1:  P_{L,k,theta}(y) / ((1+y^2)(1-y^{4k+2}) theta)
///   j >= 2: nu (1-y^2)^2 P_{j,k}(y) / (2 (1+y^2)(1-y^{4k+2}))
/// Restricted to y <= 1 - 1e-8 (throws domain_error beyond); the nu -> inf
/// behavior is covered analytically by the limit_entry_* formulas.
double entry_closed(int j, int k, double theta, double nu);

/// Cross-check of the three entry representations plus the determinant
/// product identity at one parameter point.
struct Corollary1Report {
    double trig_vs_closed = 0.0;
    double closed_vs_direct = 0.0;
    double trig_vs_direct = 0.0;
    double det_err = 0.0;  // product vs kappa form vs y form, worst pair
    double max_err = 0.0;
    bool pass = false;
};

Corollary1Report verify_corollary1(int k, double theta, double nu, double tol);

}  // namespace advpos
