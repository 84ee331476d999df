#include <cmath>

#include "doctest.h"
#include "noma/numerics.hpp"
#include "oracle.hpp"

using namespace noma;

TEST_CASE("standard normal cdf") {
    CHECK(num::std_normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(num::std_normal_cdf(40.0) == doctest::Approx(1.0).epsilon(1e-15));
    // Frozen from the Simpson oracle of the density over (-inf, 1].
    CHECK(num::std_normal_cdf(1.0) == doctest::Approx(0.8413447461).epsilon(1e-9));
    const double by_quadrature = 1.0 - oracle::q_tail(1.0);
    CHECK(num::std_normal_cdf(1.0) == doctest::Approx(by_quadrature).epsilon(1e-10));

    // Monotone nondecreasing on a sampled grid.
    double prev = 0.0;
    for (double x = -8.0; x <= 8.0; x += 0.25) {
        const double v = num::std_normal_cdf(x);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("q function") {
    CHECK(num::q_function(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    // Frozen oracle value at 2.9261 (tail quadrature).
    CHECK(num::q_function(2.9261) == doctest::Approx(1.7162029e-3).epsilon(1e-6));
    CHECK(num::q_function(2.9261) ==
          doctest::Approx(oracle::q_tail(2.9261)).epsilon(1e-9));

    // Complement identities at machine precision, and tail accuracy
    // against the independent libm implementation.
    for (int k = 0; k <= 10000; ++k) {
        const double x = -8.0 + 16.0 * k / 10000.0;
        CHECK(std::fabs(num::std_normal_cdf(x) + num::std_normal_cdf(-x) - 1.0) <=
              1e-12);
        CHECK(std::fabs(num::q_function(x) - num::std_normal_cdf(-x)) <= 1e-12);
        const double reference = 0.5 * std::erfc(x * 0.7071067811865475244);
        CHECK(num::q_function(x) == doctest::Approx(reference).epsilon(1e-13));
    }
}

TEST_CASE("erf") {
    CHECK(num::erf(0.0) == 0.0);
    // Frozen from the series/quadrature oracle: erf(2.18094) =
    // 0.99795978 (quadrature of 2/sqrt(pi) exp(-t^2)).
    const double by_quadrature = oracle::integrate(
        [](double t) { return 1.1283791670955126 * std::exp(-t * t); }, 0.0,
        2.18094, 1e-13);
    CHECK(by_quadrature == doctest::Approx(0.9979597850).epsilon(1e-9));
    CHECK(num::erf(2.18094) == doctest::Approx(0.9979597850).epsilon(1e-10));

    for (int k = 0; k <= 2000; ++k) {
        const double x = -6.0 + 12.0 * k / 2000.0;
        CHECK(num::erf(-x) == doctest::Approx(-num::erf(x)).epsilon(1e-15));
        CHECK(std::fabs(num::erf(x) - std::erf(x)) <= 1e-13);
        // The identity the outage closed forms rely on.
        CHECK(std::fabs(num::erf(x) -
                        (2.0 * num::std_normal_cdf(x * std::sqrt(2.0)) - 1.0)) <=
              1e-12);
    }
}

TEST_CASE("exponential integral") {
    CHECK_THROWS_AS(num::exp_integral_e1(0.0), std::domain_error);
    CHECK_THROWS_AS(num::exp_integral_e1(-1.0), std::domain_error);

    // Frozen from the oracle: adaptive quadrature of exp(-t)/t on [1,inf).
    const double by_quadrature = oracle::integrate_half_line(
        [](double t) { return std::exp(-(t + 1.0)) / (t + 1.0); }, 1e-13);
    CHECK(by_quadrature == doctest::Approx(0.21938393440).epsilon(1e-9));
    CHECK(num::exp_integral_e1(1.0) == doctest::Approx(0.21938393440).epsilon(1e-10));

    // Asymptotics: e^-x/x upper-bounds E1 and is tight at large x.
    const double e50 = num::exp_integral_e1(50.0);
    CHECK(e50 < std::exp(-50.0) / 50.0 * 1.03);
    CHECK(500.0 * std::exp(500.0) * num::exp_integral_e1(500.0) ==
          doctest::Approx(1.0).epsilon(3e-3));

    // x e^x E1(x) increases monotonically toward 1 from below.
    double prev = 0.0;
    for (double x = 10.0; x <= 200.0; x += 5.0) {
        const double v = x * std::exp(x) * num::exp_integral_e1(x);
        CHECK(v < 1.0);
        CHECK(v > prev);
        prev = v;
    }

    // Relative accuracy across the branch switch, against the oracle.
    for (double x : {1e-8, 1e-4, 0.1, 0.5, 0.999, 1.0, 1.001, 2.0, 10.0, 30.0}) {
        const double ref = oracle::integrate_half_line(
            [x](double t) { return std::exp(-(t + x)) / (t + x); }, 1e-14);
        CHECK(num::exp_integral_e1(x) == doctest::Approx(ref).epsilon(1e-10));
    }
}

TEST_CASE("chiani approximation") {
    CHECK_THROWS_AS(num::chiani_q_approx(-0.1), std::domain_error);
    CHECK(num::chiani_q_approx(0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(num::chiani_q_approx(1.0) == doctest::Approx(0.1788985).epsilon(1e-6));
    // An upper-tail surrogate: sits above Q from x ~ 1 outward.
    for (double x : {1.0, 2.0, 4.0, 6.0})
        CHECK(num::chiani_q_approx(x) > num::q_function(x));
    double prev = 1.0;
    for (double x = 0.0; x <= 6.0; x += 0.1) {
        const double v = num::chiani_q_approx(x);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("inverse normal cdf") {
    CHECK_THROWS_AS(num::inverse_std_normal_cdf(0.0), std::domain_error);
    CHECK_THROWS_AS(num::inverse_std_normal_cdf(1.0), std::domain_error);
    for (double p : {1e-12, 1e-6, 0.01, 0.3, 0.5, 0.7, 0.99, 1.0 - 1e-6}) {
        const double x = num::inverse_std_normal_cdf(p);
        CHECK(num::std_normal_cdf(x) == doctest::Approx(p).epsilon(1e-12));
    }
}

TEST_CASE("gauss-laguerre rule") {
    CHECK_THROWS_AS(num::gauss_laguerre_rule(0), std::invalid_argument);
    for (int order : {4, 16, 64, 96}) {
        const auto rule = num::gauss_laguerre_rule(order);
        REQUIRE(rule.nodes.size() == static_cast<std::size_t>(order));
        double sum = 0.0;
        double prev = 0.0;
        for (int k = 0; k < order; ++k) {
            CHECK(rule.weights[k] > 0.0);
            CHECK(rule.nodes[k] > prev);
            prev = rule.nodes[k];
            sum += rule.weights[k];
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
    // Exactness on polynomials up to degree 2n-1 (spot check at n=16).
    const auto rule = num::gauss_laguerre_rule(16);
    double moment5 = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k)
        moment5 += rule.weights[k] * std::pow(rule.nodes[k], 5);
    CHECK(moment5 == doctest::Approx(120.0).epsilon(1e-12));  // 5!
}

TEST_CASE("semi-infinite integration") {
    const auto r1 =
        num::integrate_semi_infinite([](double t) { return std::exp(-t); }, 1e-10);
    CHECK(r1.value == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r1.error <= 1e-10);

    const auto r2 = num::integrate_semi_infinite(
        [](double t) { return t * std::exp(-t * t); }, 1e-10);
    CHECK(r2.value == doctest::Approx(0.5).epsilon(1e-10));

    // log2(1+t) e^-t = e E1(1) / ln 2.
    const auto r3 = num::integrate_semi_infinite(
        [](double t) { return std::log2(1.0 + t) * std::exp(-t); }, 1e-9);
    const double expected =
        std::exp(1.0) * num::exp_integral_e1(1.0) / num::ln2;
    CHECK(r3.value == doctest::Approx(expected).epsilon(1e-8));

    // A narrow feature the Laguerre nodes miss entirely: the adaptive
    // fallback must still deliver.
    const auto r4 = num::integrate_semi_infinite(
        [](double t) {
            const double d = (t - 0.01) / 0.002;
            return std::exp(-0.5 * d * d);
        },
        1e-9);
    CHECK(r4.value ==
          doctest::Approx(0.002 * std::sqrt(2.0 * num::pi)).epsilon(1e-6));
}

TEST_CASE("adaptive interval integration") {
    CHECK(num::integrate_adaptive([](double) { return 1.0; }, 0.0, 1.0, 1e-12).value ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(num::integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, 1e-12)
              .value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    // Success-branch outage kernel at 10 dB; frozen Simpson oracle value.
    auto kernel = [](double x) {
        return 2.0 * x * num::std_normal_cdf(4.2426 * x) * std::exp(-x * x);
    };
    const double simpson = oracle::integrate(kernel, 0.0, 0.68969, 1e-12);
    CHECK(simpson == doctest::Approx(0.35297312).epsilon(1e-6));
    CHECK(num::integrate_adaptive(kernel, 0.0, 0.68969, 1e-9).value ==
          doctest::Approx(0.35297312).epsilon(1e-6));

    CHECK_THROWS_AS(num::integrate_adaptive([](double) { return 1.0; }, 1.0, 0.0, 1e-9),
                    std::invalid_argument);
    // Non-integrable spike: the error budget cannot be met.
    CHECK_THROWS_AS(num::integrate_adaptive(
                        [](double x) { return 1.0 / std::fabs(x - 0.5); }, 0.0, 1.0,
                        1e-12),
                    num::QuadratureError);
}
