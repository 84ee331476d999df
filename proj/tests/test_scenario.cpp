#include <cmath>
#include <sstream>

#include "doctest.h"
#include "noma/scenario.hpp"
#include "noma/sweep.hpp"
#include "oracle.hpp"

using namespace noma;

TEST_CASE("scenario construction and derived symbols") {
    const Scenario s = build_scenario(0.8, 0.0, 1.0, 1.0);
    CHECK(s.gamma_bar() == doctest::Approx(1.0));
    CHECK(s.sigma_n_sq() == doctest::Approx(1.0));
    CHECK(s.gamma_th() == doctest::Approx(1.0));
    CHECK(s.alpha2() == doctest::Approx(0.2));

    const Scenario s10 = build_scenario(0.8, 10.0, 1.0, 1.0);
    CHECK(s10.sigma_n_sq() == doctest::Approx(0.1).epsilon(1e-14));

    CHECK_THROWS_AS(build_scenario(0.5, 0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_scenario(1.0, 0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_scenario(0.8, 0.0, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_scenario(0.8, 0.0, 1.0, 0.0), std::invalid_argument);

    // The rejection names the offending field.
    try {
        build_scenario(0.4, 0.0, 1.0, 1.0);
        FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("alpha1") != std::string::npos);
    }
}

TEST_CASE("bpsk constellation geometry") {
    const Scenario s = build_scenario(0.8, 0.0, 1.0, 1.0);
    const auto pts = bpsk_constellation(s);
    CHECK(pts[3].value == doctest::Approx(1.34164).epsilon(1e-5));  // X11
    CHECK(pts[2].value == doctest::Approx(0.44721).epsilon(1e-5));  // X10
    CHECK(pts[3].value + pts[0].value == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(pts[2].value + pts[1].value == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::fabs(pts[3].value) > std::fabs(pts[2].value));
    CHECK(std::fabs(pts[2].value) > 0.0);
    double prob = 0.0;
    for (const auto& p : pts) prob += p.prob;
    CHECK(prob == doctest::Approx(1.0));
}

TEST_CASE("rayleigh density normalization and second moment") {
    for (double omega : {0.5, 1.0, 2.0}) {
        const double mass = oracle::integrate_half_line(
            [omega](double b) { return rayleigh_pdf(b, omega); }, 1e-12);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
        const double m2 = oracle::integrate_half_line(
            [omega](double b) { return b * b * rayleigh_pdf(b, omega); }, 1e-12);
        CHECK(m2 == doctest::Approx(omega).epsilon(1e-9));
    }
}

TEST_CASE("legacy model residual factor") {
    const auto m = LegacyModel::from_eta(0.5);
    CHECK(m.zeta == doctest::Approx(0.25));
    CHECK(m.eta().value() == doctest::Approx(0.5));
    CHECK_THROWS_AS(LegacyModel::from_eta(1.5), std::invalid_argument);
    // Sweeps drive zeta directly and may exceed 1; eta is then undefined.
    const LegacyModel wide{1.6};
    CHECK_FALSE(wide.eta().has_value());
}

TEST_CASE("key-value config round trip") {
    RunParams p;
    p.alpha1 = 0.65;
    p.snr_db = 22.5;
    p.omega = 1.25;
    p.rate = 0.5;
    p.zeta = 0.01;
    p.seed = 99;
    p.samples = 123456;
    std::ostringstream os;
    print_kv_config(os, p);
    std::istringstream is(os.str());
    const RunParams q = parse_kv_config(is);
    CHECK(q.alpha1 == p.alpha1);
    CHECK(q.snr_db == p.snr_db);
    CHECK(q.omega == p.omega);
    CHECK(q.rate == p.rate);
    CHECK(q.zeta == p.zeta);
    CHECK(q.seed == p.seed);
    CHECK(q.samples == p.samples);

    std::istringstream bad("alpha_one=0.7\n");
    CHECK_THROWS_AS(parse_kv_config(bad), std::invalid_argument);
    std::istringstream bad2("alpha1=zebra\n");
    CHECK_THROWS_AS(parse_kv_config(bad2), std::invalid_argument);
}
