#pragma once

#include <vector>

#include "noma/scenario.hpp"

// Post-SIC conditional statistics for BPSK. Conditioning a symbol period
// on the SIC outcome couples the fading gain and the noise sample: the
// success branch sees quieter noise and slightly larger fading, the
// failure branch the opposite. Everything below depends on the symbol
// only through |X_ij| plus an orientation flag for the one-sided noise
// supports, so the four constellation points collapse to two curves.
//
// Pure functions over immutable inputs; thread-safe without coordination.

namespace noma::bpsk {

enum class Branch { success, failure, unconditional };
enum class Variable { fading, noise };

/// Probability that the far-user symbol is detected correctly given the
/// transmitted symbol: p_S = (1 + mu)/2 with
/// mu = sqrt(X^2 gbar / (X^2 gbar + 2)). Depends on X only through X^2.
double sic_success_prob(const Scenario& s, const ConstellationPoint& x);

/// Failure probability 1 - p_S in a cancellation-safe form,
/// p_F = 1 / ((X^2 gbar + 2)(1 + mu)), exact even for gbar ~ 1e12.
double sic_failure_prob(const Scenario& s, const ConstellationPoint& x);

/// Fading density conditioned on SIC success:
/// (2b / (omega p_S)) Phi(|X| b / sigma_n) exp(-b^2/omega), b >= 0.
double pdf_beta_success(const Scenario& s, const ConstellationPoint& x, double beta);

/// Fading density conditioned on SIC failure:
/// (2b / (omega p_F)) Q(|X| b / sigma_n) exp(-b^2/omega), b >= 0.
double pdf_beta_failure(const Scenario& s, const ConstellationPoint& x, double beta);

/// Noise density conditioned on success. For X > 0 the density is
/// f_N(w)/p_S on w >= 0 and damped by exp(-w^2/(X^2 omega)) on w < 0;
/// the halves swap for X < 0.
double pdf_noise_success(const Scenario& s, const ConstellationPoint& x, double w);

/// Noise density conditioned on failure; supported on w < 0 for X > 0
/// (flipped for X < 0), zero on the other half-line.
double pdf_noise_failure(const Scenario& s, const ConstellationPoint& x, double z);

/// Joint density of (fading, noise) conditioned on the branch. The
/// success region is n >= -X b (boundary included), failure its
/// complement; outside the region the density is zero.
double joint_pdf(const Scenario& s, const ConstellationPoint& x, Branch branch,
                 double beta, double n);

/// Success-branch noise second moment, sigma_n^2 (1 - mu + mu^2);
/// always in (sigma_n^2/2, sigma_n^2) and -> sigma_n^2 as gbar -> inf.
double second_moment_w(const Scenario& s, const ConstellationPoint& x);

/// Failure-branch noise second moment, sigma_n^2 (1 + mu + mu^2) > sigma_n^2.
double second_moment_z(const Scenario& s, const ConstellationPoint& x);

/// Per-symbol branch probabilities and conditional noise powers.
struct ConditionalChannelStats {
    ConstellationPoint point;
    double p_success = 0.0;
    double p_failure = 0.0;
    double m2_w = 0.0;  // E[W^2]
    double m2_z = 0.0;  // E[Z^2]
};

ConditionalChannelStats conditional_stats(const Scenario& s,
                                          const ConstellationPoint& x);

/// A density sampled on an ordered grid, for CSV export and
/// histogram comparison.
struct PdfCurve {
    std::vector<double> grid;
    std::vector<double> density;
    Branch branch = Branch::unconditional;
    Variable variable = Variable::fading;

    /// Trapezoid integral over the grid.
    double trapezoid() const;
};

/// Samples the requested conditional (or unconditional) PDF. Defaults:
/// 2048 points on [0, 5 sqrt(omega)] for fading, +-6 sigma_n for noise.
PdfCurve sample_pdf_curve(const Scenario& s, const ConstellationPoint& x,
                          Branch branch, Variable variable, int points = 2048);

/// Same, on an explicit [lo, hi] span.
PdfCurve sample_pdf_curve(const Scenario& s, const ConstellationPoint& x,
                          Branch branch, Variable variable, double lo, double hi,
                          int points);

}  // namespace noma::bpsk
