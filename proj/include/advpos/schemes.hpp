#pragma once

#include <string_view>
#include <vector>

#include "advpos/circulant.hpp"

namespace advpos {

/// Spatial semi-discretizations of u_t = a u_x on the periodic unit interval.
enum class SchemeKind { Upwind1, Centered2, Centered4, Centered6, Spectral };

/// Lowercase CLI token: upwind1, centered2, centered4, centered6, spectral.
std::string_view scheme_name(SchemeKind kind);
SchemeKind parse_scheme(std::string_view name);

/// Smallest admissible number of grid points for the scheme.
int min_points(SchemeKind kind);

/// Evenly spaced angles xi_l = 2*pi*(l-1)/m for l = 1..m.
std::vector<double> grid_angles(int m);

/// Upper-stencil coefficients C of the centered schemes: L_{i,i+k} = C_k,
/// L_{i,i-k} = -C_k. Empty for non-centered kinds.
std::vector<double> stencil_coeffs(SchemeKind kind);

/// The circulant operator L of the scheme at m grid points.
///
/// Centered: antisymmetric banded circulant built from stencil_coeffs.
/// Upwind1: first row (-1, 1, 0, ..., 0).
/// Spectral: zero diagonal and off-diagonal entries
///   (pi/m) (-1)^{i+j} cot((i-j) pi/m) for even m (csc variant for odd m),
/// materialized through its first row so the downstream code path is uniform.
CirculantMatrix build_L(SchemeKind kind, int m);

/// Symbol psi with eigenvalue(L)_l = i*psi(xi_l) for the centered schemes,
/// psi(x) = 2 sum_k C_k sin(kx). For Spectral, psi(x) = x on [0, pi] only;
/// full-range eigenvalues come from eigen_imag. Upwind1 has no odd/imaginary
/// symbol and is rejected.
double symbol_psi(SchemeKind kind, double x);

/// lambda_l with eigenvalue(L)_l = i*lambda_l, l = 1..m. Centered schemes:
/// psi(xi_l). Spectral: xi_l below the Nyquist index, xi_l - 2*pi above it,
/// and exactly 0 at l = m/2+1 for even m (not left to cancellation; the
/// even-m analysis needs that eigenvalue to vanish identically).
std::vector<double> eigen_imag(SchemeKind kind, int m);

}  // namespace advpos
