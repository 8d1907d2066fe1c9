#pragma once

#include <complex>
#include <stdexcept>

#include "advpos/circulant.hpp"
#include "advpos/schemes.hpp"

namespace advpos {

/// Raised when a full-step linear system is (numerically) singular. With the
/// schemes here the eigenvalues of I - theta*nu*L have modulus >= 1, so this
/// is a canary for broken inputs rather than an expected outcome.
struct singular_system_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameters of one full discretization step: scheme, grid size, the time
/// blending parameter theta in [0,1], and the CFL number nu = a*dt/dx > 0.
struct FullStepParams {
    SchemeKind kind = SchemeKind::Centered2;
    int m = 3;
    double theta = 1.0;
    double nu = 1.0;

    /// Throws invalid_argument unless theta in [0,1], nu > 0 and m admissible.
    void validate() const;
};

/// Stability function of the theta-method: R(z) = (1 + (1-theta) z)/(1 - theta z).
/// Throws singular_system_error at the pole theta*z = 1.
std::complex<double> stability_R(double theta, std::complex<double> z);

/// Large-nu limit of M_{1,1} for odd m: 1 - (m-1)/(m*theta), theta in (0,1].
double limit_entry_first(int m, double theta);

/// Large-nu limit of M_{1,j}, j >= 2, for odd m: 1/(m*theta).
double limit_entry_tail(int m, double theta);

/// Full step matrix M = R(nu L) together with the construction residue.
struct FullStepMatrix {
    FullStepParams params;
    CirculantMatrix M;
    /// Largest imaginary part discarded when realizing the Fourier sum
    /// (exactly 0 for the direct route). Its vanishing is a theorem, so the
    /// builder treats anything above 1e-10*m as an error instead of rounding
    /// it away.
    double max_imag_residue = 0.0;
};

/// M via the discrete Fourier sum M_{1,j} = (1/m) sum_l R(nu lambda_l) e^{-i(j-1)xi_l}.
FullStepMatrix build_M_trig(const FullStepParams& p);

/// M via a pivoted dense solve of (I - theta nu L) M = I + (1-theta) nu L.
/// Independent of the Fourier route; the test suites use it as the oracle.
FullStepMatrix build_M_direct(const FullStepParams& p);

struct PositivityCheck {
    bool nonneg = false;
    double min_value = 0.0;
    int witness = 1;  // 1-based first-row index of the minimum
};

/// Entrywise non-negativity of M (positivity preservation of the step).
PositivityCheck is_positivity_preserving(const FullStepParams& p, double tol);

}  // namespace advpos
