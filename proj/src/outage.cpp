#include "noma/outage.hpp"

#include <cmath>
#include <limits>

#include "noma/numerics.hpp"

namespace noma::bpsk {

namespace {

double clamp01(double p) { return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p); }

}  // namespace

double outage_given_success(const Scenario& s, const ConstellationPoint& x) {
    const double m2w = second_moment_w(s, x);
    const double eps = std::sqrt(s.gamma_th() * m2w / s.alpha2());
    const double ax = std::fabs(x.value);
    const double xg = ax * ax * s.gamma_bar();
    const double mu = std::sqrt(xg / (xg + 2.0));
    const double ps = sic_success_prob(s, x);
    const double t1 = std::exp(-eps * eps / s.omega()) *
                      num::std_normal_cdf(ax * eps / s.sigma_n());
    const double t2 = 0.5 * mu *
                      num::erf(eps * std::sqrt((xg + 2.0) / (2.0 * s.omega())));
    return clamp01((0.5 - t1 + t2) / ps);
}

double outage_given_failure(const Scenario& s, const ConstellationPoint& x) {
    const double denom = s.alpha2() - 4.0 * s.alpha1() * s.gamma_th();
    if (denom <= 0.0) return 1.0;
    const double m2z = second_moment_z(s, x);
    const double eps = std::sqrt(s.gamma_th() * m2z / denom);
    const double ax = std::fabs(x.value);
    const double xg = ax * ax * s.gamma_bar();
    const double mu = std::sqrt(xg / (xg + 2.0));
    const double pf = sic_failure_prob(s, x);
    const double t1 = std::exp(-eps * eps / s.omega()) *
                      num::q_function(ax * eps / s.sigma_n());
    const double t2 = 0.5 * mu *
                      num::erf(eps * std::sqrt((xg + 2.0) / (2.0 * s.omega())));
    return clamp01((0.5 - t1 - t2) / pf);
}

double outage_total(const Scenario& s) {
    const auto pts = bpsk_constellation(s);
    // All statistics depend on |X| only, so X00/X01 mirror X11/X10.
    const ConstellationPoint& x10 = pts[2];
    const ConstellationPoint& x11 = pts[3];
    const auto term = [&s](const ConstellationPoint& x) {
        return outage_given_success(s, x) * sic_success_prob(s, x) +
               outage_given_failure(s, x) * sic_failure_prob(s, x);
    };
    return 0.5 * (term(x11) + term(x10));
}

double legacy_outage(const Scenario& s, const LegacyModel& m) {
    const double denom = s.alpha2() - m.zeta * s.alpha1() * s.gamma_th();
    if (denom <= 0.0) return 1.0;
    return 1.0 - std::exp(-(s.gamma_th() / s.gamma_bar()) / denom);
}

double legacy_zeta_upper_bound(const Scenario& s) {
    return s.alpha2() / (s.alpha1() * s.gamma_th());
}

OutageBreakdown outage_breakdown(const Scenario& s, const ConstellationPoint& x) {
    OutageBreakdown b;
    b.point = x;
    b.p_s = sic_success_prob(s, x);
    b.p_f = sic_failure_prob(s, x);
    b.po_success = outage_given_success(s, x);
    b.po_failure = outage_given_failure(s, x);
    b.contribution = b.po_success * b.p_s + b.po_failure * b.p_f;
    const double m2w = second_moment_w(s, x);
    b.psi = s.alpha2() / m2w;
    b.eps_success = std::sqrt(s.gamma_th() / b.psi);
    const double denom = s.alpha2() - 4.0 * s.alpha1() * s.gamma_th();
    b.eps_failure = denom > 0.0
                        ? std::sqrt(s.gamma_th() * second_moment_z(s, x) / denom)
                        : std::numeric_limits<double>::infinity();
    return b;
}

}  // namespace noma::bpsk
