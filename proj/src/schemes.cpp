#include "advpos/schemes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace advpos {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::string_view scheme_name(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::Upwind1: return "upwind1";
        case SchemeKind::Centered2: return "centered2";
        case SchemeKind::Centered4: return "centered4";
        case SchemeKind::Centered6: return "centered6";
        case SchemeKind::Spectral: return "spectral";
    }
    throw std::invalid_argument("scheme_name: bad kind");
}

SchemeKind parse_scheme(std::string_view name) {
    if (name == "upwind1") return SchemeKind::Upwind1;
    if (name == "centered2") return SchemeKind::Centered2;
    if (name == "centered4") return SchemeKind::Centered4;
    if (name == "centered6") return SchemeKind::Centered6;
    if (name == "spectral") return SchemeKind::Spectral;
    throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

int min_points(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::Upwind1: return 2;
        case SchemeKind::Centered2: return 3;
        case SchemeKind::Centered4: return 5;
        case SchemeKind::Centered6: return 7;
        case SchemeKind::Spectral: return 4;
    }
    throw std::invalid_argument("min_points: bad kind");
}

std::vector<double> grid_angles(int m) {
    if (m < 1) throw std::invalid_argument("grid_angles: m must be positive");
    std::vector<double> xi(static_cast<size_t>(m));
    for (int l = 0; l < m; ++l) xi[static_cast<size_t>(l)] = 2.0 * kPi * l / m;
    return xi;
}

std::vector<double> stencil_coeffs(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::Centered2: return {1.0 / 2.0};
        case SchemeKind::Centered4: return {2.0 / 3.0, -1.0 / 12.0};
        case SchemeKind::Centered6: return {3.0 / 4.0, -3.0 / 20.0, 1.0 / 60.0};
        default: return {};
    }
}

CirculantMatrix build_L(SchemeKind kind, int m) {
    if (m < min_points(kind))
        throw std::invalid_argument("build_L: m below scheme minimum");
    std::vector<double> row(static_cast<size_t>(m), 0.0);
    switch (kind) {
        case SchemeKind::Upwind1:
            row[0] = -1.0;
            row[1] = 1.0;
            break;
        case SchemeKind::Centered2:
        case SchemeKind::Centered4:
        case SchemeKind::Centered6: {
            const auto coeffs = stencil_coeffs(kind);
            for (size_t k = 0; k < coeffs.size(); ++k) {
                row[k + 1] = coeffs[k];
                row[static_cast<size_t>(m) - 1 - k] = -coeffs[k];
            }
            break;
        }
        case SchemeKind::Spectral: {
            // First row of L_{i,j} = (pi/m)(-1)^{i+j} trig((i-j) pi/m): with
            // d = j - i, the row-1 entry is -(pi/m)(-1)^d cot(d pi/m) for even
            // m, csc for odd m. Both variants are genuinely circulant (the
            // sign flip of csc across a period cancels the parity flip).
            const bool even = (m % 2 == 0);
            for (int d = 1; d < m; ++d) {
                const double ang = d * kPi / m;
                const double trig = even ? std::cos(ang) / std::sin(ang) : 1.0 / std::sin(ang);
                const double sign = (d % 2 == 0) ? 1.0 : -1.0;
                row[static_cast<size_t>(d)] = -(kPi / m) * sign * trig;
            }
            break;
        }
    }
    return CirculantMatrix(std::move(row));
}

double symbol_psi(SchemeKind kind, double x) {
    switch (kind) {
        case SchemeKind::Upwind1:
            throw std::invalid_argument("symbol_psi: upwind1 has no odd/imaginary symbol");
        case SchemeKind::Spectral:
            if (x < 0.0 || x > kPi)
                throw std::invalid_argument("symbol_psi: spectral symbol defined on [0, pi] only");
            return x;
        default: {
            const auto coeffs = stencil_coeffs(kind);
            double s = 0.0;
            for (size_t k = 0; k < coeffs.size(); ++k) s += coeffs[k] * std::sin((static_cast<double>(k) + 1.0) * x);
            return 2.0 * s;
        }
    }
}

std::vector<double> eigen_imag(SchemeKind kind, int m) {
    if (kind == SchemeKind::Upwind1)
        throw std::invalid_argument("eigen_imag: upwind1 eigenvalues are not purely imaginary");
    if (m < min_points(kind))
        throw std::invalid_argument("eigen_imag: m below scheme minimum");
    const auto xi = grid_angles(m);
    std::vector<double> lam(static_cast<size_t>(m));
    if (kind == SchemeKind::Spectral) {
        for (int l = 1; l <= m; ++l) {
            if (2 * l < m + 2)
                lam[static_cast<size_t>(l - 1)] = xi[static_cast<size_t>(l - 1)];
            else if (2 * l == m + 2)
                lam[static_cast<size_t>(l - 1)] = 0.0;
            else
                lam[static_cast<size_t>(l - 1)] = xi[static_cast<size_t>(l - 1)] - 2.0 * kPi;
        }
    } else {
        for (int l = 0; l < m; ++l) lam[static_cast<size_t>(l)] = symbol_psi(kind, xi[static_cast<size_t>(l)]);
    }
    return lam;
}

}  // namespace advpos
