#include "advpos/theta_method.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

namespace advpos {

namespace {
constexpr double kPi = std::numbers::pi;

// Complex spectrum of nu*L, by scheme. Centered/spectral schemes have purely
// imaginary eigenvalues i*lambda_l; upwind has e^{i xi_l} - 1.
std::vector<std::complex<double>> scaled_spectrum(const FullStepParams& p) {
    std::vector<std::complex<double>> z(static_cast<size_t>(p.m));
    if (p.kind == SchemeKind::Upwind1) {
        for (int l = 0; l < p.m; ++l) {
            const double ang = 2.0 * kPi * l / p.m;
            z[static_cast<size_t>(l)] = p.nu * std::complex<double>(std::cos(ang) - 1.0, std::sin(ang));
        }
    } else {
        const auto lam = eigen_imag(p.kind, p.m);
        for (int l = 0; l < p.m; ++l) z[static_cast<size_t>(l)] = {0.0, p.nu * lam[static_cast<size_t>(l)]};
    }
    return z;
}
}  // namespace

void FullStepParams::validate() const {
    if (m < min_points(kind))
        throw std::invalid_argument("FullStepParams: m below scheme minimum");
    if (!(theta >= 0.0 && theta <= 1.0))
        throw std::invalid_argument("FullStepParams: theta must lie in [0,1]");
    if (!(nu > 0.0)) throw std::invalid_argument("FullStepParams: nu must be positive");
}

std::complex<double> stability_R(double theta, std::complex<double> z) {
    const std::complex<double> den = 1.0 - theta * z;
    if (std::abs(den) == 0.0) throw singular_system_error("stability_R: pole at theta*z = 1");
    return (1.0 + (1.0 - theta) * z) / den;
}

double limit_entry_first(int m, double theta) {
    if (theta <= 0.0) throw std::invalid_argument("limit_entry_first: theta must be positive");
    return 1.0 - (m - 1) / (m * theta);
}

double limit_entry_tail(int m, double theta) {
    if (theta <= 0.0) throw std::invalid_argument("limit_entry_tail: theta must be positive");
    return 1.0 / (m * theta);
}

FullStepMatrix build_M_trig(const FullStepParams& p) {
    p.validate();
    const int m = p.m;
    const auto z = scaled_spectrum(p);
    std::vector<std::complex<double>> sigma(static_cast<size_t>(m));
    for (int l = 0; l < m; ++l) sigma[static_cast<size_t>(l)] = stability_R(p.theta, z[static_cast<size_t>(l)]);

    // Precomputed table of e^{-2 pi i t/m}; entry (j,l) of the inverse
    // transform is table[(j-1)(l-1) mod m].
    std::vector<std::complex<double>> table(static_cast<size_t>(m));
    for (int t = 0; t < m; ++t) {
        const double ang = -2.0 * kPi * t / m;
        table[static_cast<size_t>(t)] = {std::cos(ang), std::sin(ang)};
    }

    std::vector<double> row(static_cast<size_t>(m));
    double residue = 0.0;
    for (int j = 0; j < m; ++j) {
        std::complex<double> s = 0.0;
        for (int l = 0; l < m; ++l)
            s += sigma[static_cast<size_t>(l)] * table[static_cast<size_t>((static_cast<long>(j) * l) % m)];
        s /= static_cast<double>(m);
        row[static_cast<size_t>(j)] = s.real();
        residue = std::max(residue, std::abs(s.imag()));
    }
    if (residue > 1e-10 * m)
        throw singular_system_error("build_M_trig: imaginary residue exceeds 1e-10*m");
    return FullStepMatrix{p, CirculantMatrix(std::move(row)), residue};
}

FullStepMatrix build_M_direct(const FullStepParams& p) {
    p.validate();
    const int m = p.m;
    const CirculantMatrix L = build_L(p.kind, p.m);

    Eigen::MatrixXd A(m, m), B(m, m);
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            const double l = L.entry(i, j);
            const double id = (i == j) ? 1.0 : 0.0;
            A(i - 1, j - 1) = id - p.theta * p.nu * l;
            B(i - 1, j - 1) = id + (1.0 - p.theta) * p.nu * l;
        }
    }

    // First row of A^{-1} B: solve A^T w = e_1, then M_{1,:} = w^T B.
    Eigen::VectorXd e1 = Eigen::VectorXd::Zero(m);
    e1(0) = 1.0;
    const Eigen::MatrixXd At = A.transpose();
    const Eigen::VectorXd w = At.partialPivLu().solve(e1);
    const double res = (At * w - e1).lpNorm<Eigen::Infinity>();
    const double scale = At.lpNorm<Eigen::Infinity>() * w.lpNorm<Eigen::Infinity>() + 1.0;
    if (!w.allFinite() || res > 1e-8 * scale)
        throw singular_system_error("build_M_direct: system numerically singular");

    const Eigen::RowVectorXd first = w.transpose() * B;
    std::vector<double> row(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) row[static_cast<size_t>(j)] = first(j);
    return FullStepMatrix{p, CirculantMatrix(std::move(row)), 0.0};
}

PositivityCheck is_positivity_preserving(const FullStepParams& p, double tol) {
    if (tol < 0.0) throw std::invalid_argument("is_positivity_preserving: tol must be >= 0");
    const FullStepMatrix fs = build_M_trig(p);
    const auto [value, pos] = fs.M.min_entry();
    return PositivityCheck{value >= -tol, value, pos};
}

}  // namespace advpos
