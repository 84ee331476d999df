#include <cmath>

#include "doctest.h"
#include "noma/capacity.hpp"
#include "noma/numerics.hpp"
#include "oracle.hpp"

using namespace noma;

TEST_CASE("success-branch capacity") {
    {
        // Golden value frozen from direct Simpson quadrature of
        // log2(1 + psi b^2) against the success-branch fading density.
        const Scenario s = build_scenario(0.8, 10.0, 1.0, 1.0);
        const auto x11 = bpsk_constellation(s)[3];
        const double psi = s.alpha2() / bpsk::second_moment_w(s, x11);
        const double quad = oracle::integrate_half_line(
            [&](double b) {
                return std::log2(1.0 + psi * b * b) *
                       bpsk::pdf_beta_success(s, x11, b);
            },
            1e-11);
        CHECK(quad == doctest::Approx(1.4014530837).epsilon(1e-6));
        CHECK(bpsk::ec_given_success_exact(s, x11) ==
              doctest::Approx(quad).epsilon(1e-6));
        CHECK(bpsk::ec_given_success_exact(s, x11) >= 0.0);
    }
    {
        // At extreme SNR the success branch owns everything and matches
        // the zero-residual legacy capacity.
        const Scenario s = build_scenario(0.8, 120.0, 1.0, 1.0);
        const auto x11 = bpsk_constellation(s)[3];
        const double cs = bpsk::ec_given_success_exact(s, x11);
        const double legacy = bpsk::legacy_ec(s, LegacyModel{0.0});
        CHECK(std::fabs(cs - legacy) / legacy <= 1e-3);
    }
}

TEST_CASE("failure-branch capacity") {
    const Scenario s = build_scenario(0.8, 10.0, 1.0, 1.0);
    const auto pts = bpsk_constellation(s);
    const double ceiling = std::log2(1.0 + s.alpha2() / (4.0 * s.alpha1()));
    CHECK(ceiling == doctest::Approx(0.087463).epsilon(1e-5));
    for (int k : {2, 3})
        CHECK(bpsk::ec_given_failure_exact(s, pts[k]) < ceiling);

    for (double db : {-10.0, 0.0, 20.0})
        for (double a : {0.55, 0.95}) {
            const Scenario sg = build_scenario(a, db, 1.0, 1.0);
            const double cap = std::log2(1.0 + sg.alpha2() / (4.0 * sg.alpha1()));
            for (int k : {2, 3})
                CHECK(bpsk::ec_given_failure_exact(sg, bpsk_constellation(sg)[k]) <
                      cap);
        }

    const Scenario slo = build_scenario(0.8, -120.0, 1.0, 1.0);
    CHECK(bpsk::ec_given_failure_exact(slo, bpsk_constellation(slo)[3]) ==
          doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("total capacity") {
    const Scenario s = build_scenario(0.8, 10.0, 1.0, 1.0);
    // Two-point collapse equals the full equiprobable average.
    double full = 0.0;
    for (const auto& x : bpsk_constellation(s))
        full += 0.25 * (bpsk::ec_given_success_exact(s, x) *
                            bpsk::sic_success_prob(s, x) +
                        bpsk::ec_given_failure_exact(s, x) *
                            bpsk::sic_failure_prob(s, x));
    CHECK(bpsk::ec_total_exact(s) == doctest::Approx(full).epsilon(1e-15));
    CHECK(bpsk::ec_total_exact(s) == doctest::Approx(1.3854594).epsilon(1e-6));

    // Nondecreasing in SNR.
    double prev = 0.0;
    for (double db = -10.0; db <= 40.0; db += 2.0) {
        const double c = bpsk::ec_total_exact(build_scenario(0.8, db, 1.0, 1.0));
        CHECK(c >= prev);
        prev = c;
    }

    // The dominance premise of the closed-form approximation.
    for (double db : {-10.0, 0.0, 10.0, 30.0})
        for (double a : {0.55, 0.75, 0.95}) {
            const Scenario sg = build_scenario(a, db, 1.0, 1.0);
            for (int k : {2, 3}) {
                const auto x = bpsk_constellation(sg)[k];
                CHECK(bpsk::ec_given_failure_exact(sg, x) *
                          bpsk::sic_failure_prob(sg, x) <=
                      bpsk::ec_given_success_exact(sg, x) *
                          bpsk::sic_success_prob(sg, x));
            }
        }
}

TEST_CASE("capacity kernel identity") {
    // I(A,B) against Simpson quadrature for randomized parameters.
    std::uint64_t state = 77;
    auto uniform = [&state](double lo, double hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + (hi - lo) * (static_cast<double>(state >> 11) * 0x1.0p-53);
    };
    for (int k = 0; k < 100; ++k) {
        const double a = std::exp(uniform(std::log(0.05), std::log(50.0)));
        const double b = std::exp(uniform(std::log(0.2), std::log(20.0)));
        const double quad = oracle::integrate_half_line(
            [a, b](double t) {
                return t * std::log2(1.0 + a * t * t) * std::exp(-b * t * t);
            },
            1e-12);
        CHECK(bpsk::capacity_kernel(a, b) == doctest::Approx(quad).epsilon(1e-8));
    }
}

TEST_CASE("closed-form approximation") {
    {
        // Average normalized error over 0..30 dB at alpha1 = 0.55.
        double sum = 0.0;
        for (int db = 0; db <= 30; ++db) {
            const Scenario s = build_scenario(0.55, db, 1.0, 1.0);
            sum += bpsk::normalized_error_percent(bpsk::ec_total_exact(s),
                                                  bpsk::ec_closed_form_approx(s));
        }
        CHECK(sum / 31.0 == doctest::Approx(1.11).epsilon(0.45));  // +-0.5pp
    }
    {
        // Asymptotically the approximation matches the exact value.
        const Scenario s = build_scenario(0.8, 60.0, 1.0, 1.0);
        CHECK(bpsk::normalized_error_percent(bpsk::ec_total_exact(s),
                                             bpsk::ec_closed_form_approx(s)) <= 1.0);
    }
}

TEST_CASE("legacy capacity") {
    {
        // Defining-integral check at zeta = 0.
        const Scenario s = build_scenario(0.8, 10.0, 1.0, 1.0);
        const double quad = oracle::integrate_half_line(
            [&](double b) {
                return std::log2(1.0 + s.alpha2() * b * b / s.sigma_n_sq()) *
                       rayleigh_pdf(b, s.omega());
            },
            1e-11);
        CHECK(bpsk::legacy_ec(s, LegacyModel{0.0}) ==
              doctest::Approx(quad).epsilon(1e-6));
        CHECK(bpsk::legacy_ec(s, LegacyModel{0.0}) ==
              doctest::Approx(1.3314786).epsilon(1e-6));
    }
    {
        // Defining-integral check at zeta > 0.
        const Scenario s = build_scenario(0.8, 10.0, 1.0, 1.0);
        const LegacyModel m{0.05};
        const double quad = oracle::integrate_half_line(
            [&](double b) {
                const double b2 = b * b;
                const double sinr = s.alpha2() * b2 /
                                    (m.zeta * s.alpha1() * b2 + s.sigma_n_sq());
                return std::log2(1.0 + sinr) * rayleigh_pdf(b, s.omega());
            },
            1e-11);
        CHECK(bpsk::legacy_ec(s, m) == doctest::Approx(quad).epsilon(1e-6));
    }
    {
        // Very large zeta kills the capacity.
        const Scenario s = build_scenario(0.8, 10.0, 1.0, 1.0);
        CHECK(bpsk::legacy_ec(s, LegacyModel{1e6}) < 1e-3);
    }
}

TEST_CASE("legacy capacity tracks the exact value except at low SNR") {
    // With zeta = 0 the legacy and exact capacities agree closely from
    // moderate SNR up; the visible gap is confined to the low-SNR end.
    const auto gap = [](double db) {
        const Scenario s = build_scenario(0.8, db, 1.0, 1.0);
        return bpsk::normalized_error_percent(bpsk::ec_total_exact(s),
                                              bpsk::legacy_ec(s, LegacyModel{0.0}));
    };
    CHECK(gap(0.0) > 2.0);
    for (double db : {20.0, 30.0, 40.0}) CHECK(gap(db) < 1.0);
}

TEST_CASE("normalized error") {
    CHECK(bpsk::normalized_error_percent(2.0, 2.0) == 0.0);
    CHECK(bpsk::normalized_error_percent(2.0, 0.0) == 100.0);
    CHECK_THROWS_AS(bpsk::normalized_error_percent(0.0, 1.0), std::domain_error);
}
