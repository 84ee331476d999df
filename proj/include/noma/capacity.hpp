#pragma once

#include "noma/postsic_bpsk.hpp"
#include "noma/scenario.hpp"

// Ergodic capacity of the near user: exact branch-conditioned values, a
// closed-form approximation of the dominant success part, and the
// conventional baseline.

namespace noma::bpsk {

/// Exact success-branch EC in bits/s/Hz. The Phi factor of the
/// success-branch fading density is split as 1 - Q: the "1" part has the
/// closed form exp(u) E1(u) / (p_S ln 2) with u = E[W^2]/(alpha2 omega),
/// the Q part is integrated by semi-infinite quadrature.
double ec_given_success_exact(const Scenario& s, const ConstellationPoint& x);

/// Exact failure-branch EC: E[log2(1 + alpha2 b^2/(4 alpha1 b^2 + E[Z^2]))]
/// under the failure-branch fading density, by adaptive quadrature
/// (the density concentrates near zero at high SNR). Bounded above by
/// log2(1 + alpha2/(4 alpha1)).
double ec_given_failure_exact(const Scenario& s, const ConstellationPoint& x);

/// Equiprobable symbol average of C_S p_S + C_F p_F; collapses to two
/// distinct symbols by |X| symmetry.
double ec_total_exact(const Scenario& s);

/// Closed-form approximation: drop the failure part and replace the Q
/// integral by its two-exponential (Chiani) surrogate. Per symbol the
/// success part becomes (2/omega)(I1 - I2); see CapacityBreakdown for
/// the kernels.
double ec_closed_form_approx(const Scenario& s);

/// Conventional EC with residual factor zeta:
/// (1/ln 2)[exp(u1) E1(u1) - exp(u2) E1(u2)], u1 = (1/gbar)/(zeta alpha1 + alpha2),
/// u2 = (1/gbar)/(zeta alpha1); the zeta = 0 limit drops the second term.
double legacy_ec(const Scenario& s, const LegacyModel& m);

/// |exact - other| / exact * 100. Throws std::domain_error when exact == 0.
double normalized_error_percent(double exact, double other);

/// Per-symbol capacity decomposition with the closed-form intermediates.
struct CapacityBreakdown {
    ConstellationPoint point;
    double c_success = 0.0;  // exact, bits/s/Hz
    double c_failure = 0.0;
    double c_total = 0.0;    // c_success p_S + c_failure p_F
    double c_approx = 0.0;   // (2/omega)(I1 - I2), the closed-form success part
    double kernel_a = 0.0;   // A  = alpha2 / E[W^2]
    double kernel_b1 = 0.0;  // B1 = X^2/(2 sigma_n^2) + 1/omega
    double kernel_b2 = 0.0;  // B2 = 2 X^2/(3 sigma_n^2) + 1/omega
    double i1 = 0.0;         // (omega/(2 ln 2)) exp(u) E1(u)
    double i2 = 0.0;         // (1/4)[I(A,B1)/3 + I(A,B2)]
};

CapacityBreakdown capacity_breakdown(const Scenario& s, const ConstellationPoint& x);

/// I(A,B) = (1/(2 ln2 B)) exp(B/A) E1(B/A), the closed form of
/// int_0^inf b log2(1 + A b^2) exp(-B b^2) db.
double capacity_kernel(double a, double b);

}  // namespace noma::bpsk
