#pragma once

#include <cstdint>
#include <vector>

#include "noma/postsic_bpsk.hpp"
#include "noma/postsic_qpsk.hpp"
#include "noma/scenario.hpp"

// Ground-truth link simulator: superposition -> Rayleigh fading -> AWGN
// -> hard-decision SIC. Sampling is split into independently seeded
// chunks that are merged in a fixed order, so estimates are bit-identical
// for a given (seed, config) regardless of execution parallelism.

namespace noma::mc {

struct McConfig {
    std::uint64_t samples = 10'000'000;
    std::uint64_t seed = 1;
    std::uint64_t chunk = 1u << 20;
    int bins = 200;
    int threads = 0;  // 0: hardware concurrency

    void validate() const;
};

struct McEstimate {
    double mean = 0.0;
    double stderror = 0.0;
    std::uint64_t n = 0;
};

struct ConditionalHistogram {
    bpsk::Branch branch = bpsk::Branch::success;
    bpsk::Variable variable = bpsk::Variable::fading;
    std::vector<double> edges;        // bins+1 fixed edges from the analytic support
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;          // branch sample count (includes out-of-range)

    /// Empirical density value of bin k: counts[k] / (total * width_k).
    double density(int k) const;
};

struct HistogramDistance {
    double sup = 0.0;
    double l1 = 0.0;
};

/// Sup and L1 distance between an empirical histogram and a sampled
/// analytic curve, the curve bin-averaged by trapezoid integration over
/// each bin. Throws std::invalid_argument if the curve does not span the
/// histogram support.
HistogramDistance histogram_distance(const ConditionalHistogram& h,
                                     const bpsk::PdfCurve& curve);

struct BpskBranchStats {
    McEstimate p_success;
    McEstimate m2_w;  // noise second moment, success branch
    McEstimate m2_z;  // noise second moment, failure branch
    McEstimate mean_w;
    McEstimate mean_z;
    ConditionalHistogram fading_success;
    ConditionalHistogram fading_failure;
    ConditionalHistogram noise_success;
    ConditionalHistogram noise_failure;
};

/// Simulates the far-user decision for a fixed transmitted symbol and
/// accumulates branch-conditioned fading/noise statistics. Boundary
/// Y == 0 counts as a success, matching the analytic convention.
BpskBranchStats simulate_bpsk_branch_stats(const Scenario& s,
                                           const ConstellationPoint& x,
                                           const McConfig& cfg);

/// Empirical near-user outage probability: symbols drawn equiprobably,
/// the branch SINR uses the analytic conditional noise moments
/// (gamma_S = alpha2 b^2 / E[W^2], gamma_F = alpha2 b^2/(4 alpha1 b^2 + E[Z^2])).
McEstimate simulate_bpsk_outage(const Scenario& s, const McConfig& cfg);

/// Empirical near-user ergodic capacity, sample average of log2(1+gamma)
/// with the same branch SINRs as the outage simulator.
McEstimate simulate_bpsk_ec(const Scenario& s, const McConfig& cfg);

struct QpskSuccessStats {
    McEstimate p_success;
    McEstimate m2_w;      // E|W|^2, success branch
    McEstimate var_w;     // E|W|^2 - |E W|^2
    McEstimate mean_w_re;
    McEstimate mean_w_im;
};

/// Success-branch statistics of the complex noise for one rail pair of
/// the top-right far-user quadrant; success requires both rail decisions
/// to be correct.
QpskSuccessStats simulate_qpsk_success_stats(const Scenario& s,
                                             const qpsk::QuadrantLevels& q,
                                             const McConfig& cfg);

}  // namespace noma::mc
