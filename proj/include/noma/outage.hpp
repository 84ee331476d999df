#pragma once

#include "noma/postsic_bpsk.hpp"
#include "noma/scenario.hpp"

// Exact near-user outage probability, split by SIC branch, plus the
// conventional residual-factor baseline.

namespace noma::bpsk {

/// Pr(gamma_S < gamma_th) on the success branch, where
/// gamma_S = alpha2 beta^2 / E[W^2]. Closed form obtained by parts from
/// the success-branch fading CDF:
///   (1/p_S) [ 1/2 - exp(-eps^2/omega) Phi(|X| eps / sigma_n)
///             + (mu/2) erf(eps sqrt((X^2 gbar + 2)/(2 omega))) ],
/// eps = sqrt(gamma_th E[W^2] / alpha2).
double outage_given_success(const Scenario& s, const ConstellationPoint& x);

/// Pr(gamma_F < gamma_th) on the failure branch, with
/// gamma_F = alpha2 beta^2 / (4 alpha1 beta^2 + E[Z^2]). Saturates to 1
/// whenever alpha2 <= 4 alpha1 gamma_th; otherwise integrates the
/// failure-branch fading density up to
/// eps = sqrt(gamma_th E[Z^2] / (alpha2 - 4 alpha1 gamma_th)).
double outage_given_failure(const Scenario& s, const ConstellationPoint& x);

/// Equiprobable average over the four symbols; by |X| symmetry this is
/// (term(X11) + term(X10)) / 2 with term = P_OS p_S + P_OF p_F.
double outage_total(const Scenario& s);

/// Conventional model: 1 - exp(-(gamma_th/gbar)/(alpha2 - zeta alpha1 gamma_th))
/// while alpha2 > zeta alpha1 gamma_th, else 1.
double legacy_outage(const Scenario& s, const LegacyModel& m);

/// Largest zeta for which the legacy SINR can reach the threshold:
/// alpha2 / (alpha1 gamma_th).
double legacy_zeta_upper_bound(const Scenario& s);

/// Per-symbol outage decomposition with the documented intermediates.
struct OutageBreakdown {
    ConstellationPoint point;
    double po_success = 0.0;
    double po_failure = 0.0;
    double p_s = 0.0;
    double p_f = 0.0;
    double contribution = 0.0;  // po_success p_s + po_failure p_f
    double psi = 0.0;           // alpha2 / E[W^2]
    double eps_success = 0.0;
    double eps_failure = 0.0;   // +inf when the failure branch saturates
};

OutageBreakdown outage_breakdown(const Scenario& s, const ConstellationPoint& x);

}  // namespace noma::bpsk
