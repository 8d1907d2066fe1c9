#include "advpos/circulant.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace advpos {

CirculantMatrix::CirculantMatrix(std::vector<double> first_row) : row_(std::move(first_row)) {
    if (row_.empty()) throw std::invalid_argument("CirculantMatrix: first row must be non-empty");
}

double CirculantMatrix::entry(int i, int j) const {
    const int m = order();
    if (i < 1 || i > m || j < 1 || j > m)
        throw std::invalid_argument("CirculantMatrix::entry: index out of range");
    return row_[static_cast<size_t>(((j - i) % m + m) % m)];
}

std::vector<double> CirculantMatrix::apply(const std::vector<double>& v) const {
    const int m = order();
    if (static_cast<int>(v.size()) != m)
        throw std::invalid_argument("CirculantMatrix::apply: length mismatch");
    std::vector<double> out(static_cast<size_t>(m), 0.0);
    for (int i = 0; i < m; ++i) {
        double s = 0.0;
        for (int j = 0; j < m; ++j) s += row_[static_cast<size_t>(((j - i) % m + m) % m)] * v[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = s;
    }
    return out;
}

CirculantMatrix CirculantMatrix::compose(const CirculantMatrix& other) const {
    const int m = order();
    if (other.order() != m) throw std::invalid_argument("CirculantMatrix::compose: order mismatch");
    // (A*B)_{1,1+d} = sum_t a[t] * b[(d-t) mod m]
    std::vector<double> prod(static_cast<size_t>(m), 0.0);
    for (int d = 0; d < m; ++d) {
        double s = 0.0;
        for (int t = 0; t < m; ++t) s += row_[static_cast<size_t>(t)] * other.row_[static_cast<size_t>(((d - t) % m + m) % m)];
        prod[static_cast<size_t>(d)] = s;
    }
    return CirculantMatrix(std::move(prod));
}

ComplexSpectrum CirculantMatrix::spectrum() const {
    const int m = order();
    // Direct O(m^2) summation from a precomputed root-of-unity table; no FFT
    // at desk scale, where exactness of the convention matters more than speed.
    std::vector<std::complex<double>> roots(static_cast<size_t>(m));
    for (int t = 0; t < m; ++t) {
        const double ang = 2.0 * std::numbers::pi * t / m;
        roots[static_cast<size_t>(t)] = {std::cos(ang), std::sin(ang)};
    }
    ComplexSpectrum values(static_cast<size_t>(m));
    for (int l = 0; l < m; ++l) {
        std::complex<double> s = 0.0;
        for (int j = 0; j < m; ++j) s += row_[static_cast<size_t>(j)] * roots[static_cast<size_t>((static_cast<long>(j) * l) % m)];
        values[static_cast<size_t>(l)] = s;
    }
    return values;
}

std::pair<double, int> CirculantMatrix::min_entry() const {
    double best = row_[0];
    int pos = 1;
    for (int j = 1; j < order(); ++j) {
        if (row_[static_cast<size_t>(j)] < best) {
            best = row_[static_cast<size_t>(j)];
            pos = j + 1;
        }
    }
    return {best, pos};
}

bool CirculantMatrix::is_nonnegative(double tol) const {
    if (tol < 0.0) throw std::invalid_argument("CirculantMatrix::is_nonnegative: tol must be >= 0");
    return min_entry().first >= -tol;
}

double CirculantMatrix::default_tol() const {
    double mx = 0.0;
    for (double v : row_) mx = std::max(mx, std::abs(v));
    return 1e-12 * std::max(1.0, mx);
}

std::vector<std::vector<double>> CirculantMatrix::dense() const {
    const int m = order();
    std::vector<std::vector<double>> out(static_cast<size_t>(m), std::vector<double>(static_cast<size_t>(m)));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) out[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = entry(i, j);
    return out;
}

}  // namespace advpos
