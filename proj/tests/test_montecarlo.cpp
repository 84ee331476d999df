#include <cmath>
#include <cstring>

#include "doctest.h"
#include "noma/capacity.hpp"
#include "noma/montecarlo.hpp"
#include "noma/numerics.hpp"
#include "noma/outage.hpp"

using namespace noma;

namespace {

mc::McConfig quick_cfg(std::uint64_t samples = 1'000'000, std::uint64_t seed = 7) {
    mc::McConfig cfg;
    cfg.samples = samples;
    cfg.seed = seed;
    return cfg;
}

bool within(const mc::McEstimate& est, double target, double k = 3.0) {
    return std::fabs(est.mean - target) <= k * est.stderror;
}

}  // namespace

TEST_CASE("config validation") {
    mc::McConfig cfg;
    cfg.samples = 10;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.samples = 1000;
    cfg.bins = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("branch statistics agree with the analysis") {
    const Scenario s = build_scenario(0.8, 0.0, 1.0, 1.0);
    const auto x11 = bpsk_constellation(s)[3];
    const auto stats = mc::simulate_bpsk_branch_stats(s, x11, quick_cfg());

    CHECK(stats.p_success.n == 1'000'000);
    CHECK(within(stats.p_success, bpsk::sic_success_prob(s, x11)));
    CHECK(within(stats.m2_w, bpsk::second_moment_w(s, x11)));
    CHECK(within(stats.m2_z, bpsk::second_moment_z(s, x11)));
    // The conditional means are nonzero (negative on the success side
    // never: the success branch keeps more positive noise for X11 > 0).
    CHECK(stats.mean_w.mean > 3.0 * stats.mean_w.stderror);
    CHECK(stats.mean_z.mean < -3.0 * stats.mean_z.stderror);

    // Branch counts account for every sample.
    CHECK(stats.fading_success.total + stats.fading_failure.total == 1'000'000);

    // At extreme SNR every decision succeeds.
    const Scenario shi = build_scenario(0.8, 120.0, 1.0, 1.0);
    const auto hi =
        mc::simulate_bpsk_branch_stats(shi, bpsk_constellation(shi)[3],
                                       quick_cfg(10'000));
    CHECK(hi.p_success.mean == 1.0);
}

TEST_CASE("stderr scales with the sample count") {
    const Scenario s = build_scenario(0.75, 10.0, 1.0, 1.0);
    const auto e1 = mc::simulate_bpsk_outage(s, quick_cfg(250'000, 5));
    const auto e2 = mc::simulate_bpsk_outage(s, quick_cfg(1'000'000, 5));
    CHECK(e2.stderror == doctest::Approx(0.5 * e1.stderror).epsilon(0.2));
}

TEST_CASE("outage simulation") {
    {
        // Deep noise with a hopeless rate: everything is in outage.
        const Scenario s = build_scenario(0.55, -30.0, 1.0, 2.0);
        const auto est = mc::simulate_bpsk_outage(s, quick_cfg(100'000));
        CHECK(est.mean == doctest::Approx(1.0).epsilon(1e-3));
    }
    {
        const Scenario s = build_scenario(0.75, 10.0, 1.0, 1.0);
        const auto est = mc::simulate_bpsk_outage(s, quick_cfg());
        CHECK(within(est, bpsk::outage_total(s)));
    }
}

TEST_CASE("capacity simulation") {
    {
        const Scenario s = build_scenario(0.8, -120.0, 1.0, 1.0);
        const auto est = mc::simulate_bpsk_ec(s, quick_cfg(100'000));
        CHECK(est.mean < 1e-9);
    }
    for (double db : {0.0, 10.0}) {
        const Scenario s = build_scenario(0.8, db, 1.0, 1.0);
        const auto est = mc::simulate_bpsk_ec(s, quick_cfg());
        CHECK(within(est, bpsk::ec_total_exact(s)));
        // Below the single-user bound.
        const double bound = std::exp(1.0 / s.gamma_bar()) *
                             num::exp_integral_e1(1.0 / s.gamma_bar()) / num::ln2;
        CHECK(est.mean < bound);
    }
}

TEST_CASE("qpsk success statistics") {
    const Scenario s = build_scenario(0.75, 0.0, 1.0, 1.0);
    const auto q = qpsk::QuadrantLevels::make(s, +1, +1);
    const auto st = mc::simulate_qpsk_success_stats(s, q, quick_cfg());
    // Equal rails: the closed success probability is exact.
    CHECK(within(st.p_success, qpsk::success_prob(s, q)));
    const double ps = qpsk::success_prob_exact(s, q);
    CHECK(within(st.m2_w, qpsk::second_moment_w(s, q, ps)));
    CHECK(within(st.var_w, qpsk::noise_variance(s, q, ps), 4.0));
}

TEST_CASE("reproducibility is bit exact and thread invariant") {
    const Scenario s = build_scenario(0.75, 10.0, 1.0, 1.0);
    auto cfg = quick_cfg(300'000, 99);
    cfg.chunk = 1u << 16;

    const auto a = mc::simulate_bpsk_outage(s, cfg);
    const auto b = mc::simulate_bpsk_outage(s, cfg);
    CHECK(std::memcmp(&a.mean, &b.mean, sizeof a.mean) == 0);
    CHECK(std::memcmp(&a.stderror, &b.stderror, sizeof a.stderror) == 0);

    auto cfg1 = cfg;
    cfg1.threads = 1;
    auto cfg4 = cfg;
    cfg4.threads = 4;
    const auto t1 = mc::simulate_bpsk_ec(s, cfg1);
    const auto t4 = mc::simulate_bpsk_ec(s, cfg4);
    CHECK(std::memcmp(&t1.mean, &t4.mean, sizeof t1.mean) == 0);
    CHECK(std::memcmp(&t1.stderror, &t4.stderror, sizeof t1.stderror) == 0);

    const auto h1 = mc::simulate_bpsk_branch_stats(s, bpsk_constellation(s)[3], cfg1);
    const auto h4 = mc::simulate_bpsk_branch_stats(s, bpsk_constellation(s)[3], cfg4);
    CHECK(h1.fading_success.counts == h4.fading_success.counts);
    CHECK(h1.noise_failure.counts == h4.noise_failure.counts);
}

TEST_CASE("conditional histograms match the analytic densities") {
    const Scenario s = build_scenario(0.8, 0.0, 1.0, 1.0);
    const auto x11 = bpsk_constellation(s)[3];
    auto cfg = quick_cfg(2'000'000, 21);
    const auto stats = mc::simulate_bpsk_branch_stats(s, x11, cfg);

    const auto curve_fs = bpsk::sample_pdf_curve(s, x11, bpsk::Branch::success,
                                                 bpsk::Variable::fading);
    const auto d_fs = mc::histogram_distance(stats.fading_success, curve_fs);
    CHECK(d_fs.l1 <= 0.02);

    const auto curve_ns = bpsk::sample_pdf_curve(s, x11, bpsk::Branch::success,
                                                 bpsk::Variable::noise);
    CHECK(mc::histogram_distance(stats.noise_success, curve_ns).l1 <= 0.02);

    // Failure-branch noise never lands on the wrong side of zero.
    const auto& hnf = stats.noise_failure;
    for (std::size_t k = 0; k < hnf.counts.size(); ++k)
        if (hnf.edges[k] >= 0.0) CHECK(hnf.counts[k] == 0);

    // Pooled (unconditional) histograms recover the textbook densities.
    auto pooled = stats.fading_success;
    pooled.total += stats.fading_failure.total;
    for (std::size_t k = 0; k < pooled.counts.size(); ++k)
        pooled.counts[k] += stats.fading_failure.counts[k];
    const auto rayleigh = bpsk::sample_pdf_curve(
        s, x11, bpsk::Branch::unconditional, bpsk::Variable::fading);
    CHECK(mc::histogram_distance(pooled, rayleigh).l1 <= 0.02);

    auto pooled_n = stats.noise_success;
    pooled_n.total += stats.noise_failure.total;
    for (std::size_t k = 0; k < pooled_n.counts.size(); ++k)
        pooled_n.counts[k] += stats.noise_failure.counts[k];
    const auto gauss = bpsk::sample_pdf_curve(s, x11, bpsk::Branch::unconditional,
                                              bpsk::Variable::noise);
    CHECK(mc::histogram_distance(pooled_n, gauss).l1 <= 0.02);

    // Support mismatch is an error.
    const auto short_curve = bpsk::sample_pdf_curve(
        s, x11, bpsk::Branch::success, bpsk::Variable::fading, 0.0, 2.0, 256);
    CHECK_THROWS_AS(mc::histogram_distance(stats.fading_success, short_curve),
                    std::invalid_argument);
}

TEST_CASE("histogram sup distance at full depth") {
    // At 1e7 samples the sup distance of every conditional histogram
    // stays below three times the histogram's binomial-bin standard
    // error scale (the truncation boundary shows up in the failure
    // histograms, not as a distance excess).
    const Scenario s = build_scenario(0.8, 0.0, 1.0, 1.0);
    const auto x11 = bpsk_constellation(s)[3];
    auto cfg = quick_cfg(10'000'000, 31);
    const auto stats = mc::simulate_bpsk_branch_stats(s, x11, cfg);

    const auto gate = [&](const mc::ConditionalHistogram& h, bpsk::Branch br,
                          bpsk::Variable va) {
        const auto curve = bpsk::sample_pdf_curve(s, x11, br, va, h.edges.front(),
                                                  h.edges.back(), 8193);
        const auto d = mc::histogram_distance(h, curve);
        double se_scale = 0.0;
        for (std::size_t k = 0; k < h.counts.size(); ++k) {
            const double w = h.edges[k + 1] - h.edges[k];
            const double p =
                static_cast<double>(h.counts[k]) / static_cast<double>(h.total);
            se_scale = std::max(
                se_scale,
                std::sqrt(p * (1.0 - p) / static_cast<double>(h.total)) / w);
        }
        CHECK(d.sup <= 3.0 * se_scale);
        CHECK(d.l1 <= 0.02);
    };
    gate(stats.fading_success, bpsk::Branch::success, bpsk::Variable::fading);
    gate(stats.fading_failure, bpsk::Branch::failure, bpsk::Variable::fading);
    gate(stats.noise_success, bpsk::Branch::success, bpsk::Variable::noise);
    gate(stats.noise_failure, bpsk::Branch::failure, bpsk::Variable::noise);
}
