#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace advpos {

/// Eigenvalues of a circulant matrix, ordered by frequency index l = 1..m.
using ComplexSpectrum = std::vector<std::complex<double>>;

/// Real circulant matrix stored as its first row: entry(i,j) = first_row[(j-i) mod m].
///
/// Immutable after construction; all operations are pure, so instances can be
/// shared freely across threads.
class CirculantMatrix {
  public:
    explicit CirculantMatrix(std::vector<double> first_row);

    int order() const { return static_cast<int>(row_.size()); }
    const std::vector<double>& first_row() const { return row_; }

    /// Entry at 1-based position (i,j).
    double entry(int i, int j) const;

    /// C*v by direct O(m^2) summation.
    std::vector<double> apply(const std::vector<double>& v) const;

    /// Circulant product this*other (cyclic convolution of first rows).
    CirculantMatrix compose(const CirculantMatrix& other) const;

    /// Eigenvalue for frequency l is sum_j first_row[j] * exp(+i (j-1) xi_l),
    /// xi_l = 2*pi*(l-1)/m. The +i sign matches the eigenvector convention
    /// f_{j,l} = exp(+i (j-1) xi_l)/sqrt(m) and decides which index carries
    /// +i*sin versus -i*sin; downstream identity checks depend on it.
    ComplexSpectrum spectrum() const;

    /// Minimum of the first row and its 1-based index (ties -> smallest index).
    std::pair<double, int> min_entry() const;

    /// True iff min entry >= -tol. Throws on negative tol.
    bool is_nonnegative(double tol) const;

    /// 1e-12 * max(1, |max entry|): absorbs round-off from the solve paths
    /// without masking genuine sign changes, which are O(nu/m).
    double default_tol() const;

    /// Materialized m x m matrix (for oracles and small-m checks).
    std::vector<std::vector<double>> dense() const;

  private:
    std::vector<double> row_;
};

}  // namespace advpos
