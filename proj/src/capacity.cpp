#include "noma/capacity.hpp"

#include <cmath>
#include <stdexcept>

#include "noma/numerics.hpp"

namespace noma::bpsk {

namespace {

double exp_e1(double u) { return std::exp(u) * num::exp_integral_e1(u); }

// Q-weighted part of the success-branch capacity integral,
// int_0^inf b log2(1 + A b^2) Q(|X| b / sigma_n) exp(-b^2/omega) db.
double success_q_integral(const Scenario& s, const ConstellationPoint& x,
                          double a_kernel) {
    const double chi = std::fabs(x.value) / s.sigma_n();
    const double inv_omega = 1.0 / s.omega();
    auto f = [&](double b) {
        return b * std::log2(1.0 + a_kernel * b * b) * num::q_function(chi * b) *
               std::exp(-b * b * inv_omega);
    };
    return num::integrate_semi_infinite(f, 1e-10).value;
}

}  // namespace

double capacity_kernel(double a, double b) {
    const double u = b / a;
    return exp_e1(u) / (2.0 * num::ln2 * b);
}

double ec_given_success_exact(const Scenario& s, const ConstellationPoint& x) {
    const double ps = sic_success_prob(s, x);
    const double m2w = second_moment_w(s, x);
    const double u = m2w / (s.alpha2() * s.omega());
    const double closed = exp_e1(u) / (ps * num::ln2);
    const double qint = success_q_integral(s, x, s.alpha2() / m2w);
    const double c = closed - (2.0 / (s.omega() * ps)) * qint;
    return c > 0.0 ? c : 0.0;
}

double ec_given_failure_exact(const Scenario& s, const ConstellationPoint& x) {
    const double m2z = second_moment_z(s, x);
    const double a1 = s.alpha1();
    const double a2 = s.alpha2();
    auto f = [&](double b) {
        const double b2 = b * b;
        const double sinr = a2 * b2 / (4.0 * a1 * b2 + m2z);
        return std::log2(1.0 + sinr) * pdf_beta_failure(s, x, b);
    };
    const double hi = 10.0 * std::sqrt(s.omega());
    return num::integrate_adaptive(f, 0.0, hi, 1e-10).value;
}

double ec_total_exact(const Scenario& s) {
    const auto pts = bpsk_constellation(s);
    const auto term = [&s](const ConstellationPoint& x) {
        return ec_given_success_exact(s, x) * sic_success_prob(s, x) +
               ec_given_failure_exact(s, x) * sic_failure_prob(s, x);
    };
    return 0.5 * (term(pts[3]) + term(pts[2]));
}

CapacityBreakdown capacity_breakdown(const Scenario& s, const ConstellationPoint& x) {
    CapacityBreakdown cb;
    cb.point = x;
    const double m2w = second_moment_w(s, x);
    const double x2 = x.value * x.value;
    cb.kernel_a = s.alpha2() / m2w;
    cb.kernel_b1 = x2 / (2.0 * s.sigma_n_sq()) + 1.0 / s.omega();
    cb.kernel_b2 = 2.0 * x2 / (3.0 * s.sigma_n_sq()) + 1.0 / s.omega();
    cb.i1 = (s.omega() / (2.0 * num::ln2)) * exp_e1(m2w / (s.alpha2() * s.omega()));
    cb.i2 = 0.25 * (capacity_kernel(cb.kernel_a, cb.kernel_b1) / 3.0 +
                    capacity_kernel(cb.kernel_a, cb.kernel_b2));
    cb.c_approx = (2.0 / s.omega()) * (cb.i1 - cb.i2);
    cb.c_success = ec_given_success_exact(s, x);
    cb.c_failure = ec_given_failure_exact(s, x);
    cb.c_total = cb.c_success * sic_success_prob(s, x) +
                 cb.c_failure * sic_failure_prob(s, x);
    return cb;
}

double ec_closed_form_approx(const Scenario& s) {
    const auto pts = bpsk_constellation(s);
    const auto part = [&s](const ConstellationPoint& x) {
        const double m2w = second_moment_w(s, x);
        const double x2 = x.value * x.value;
        const double a = s.alpha2() / m2w;
        const double b1 = x2 / (2.0 * s.sigma_n_sq()) + 1.0 / s.omega();
        const double b2 = 2.0 * x2 / (3.0 * s.sigma_n_sq()) + 1.0 / s.omega();
        const double i1 =
            (s.omega() / (2.0 * num::ln2)) * exp_e1(m2w / (s.alpha2() * s.omega()));
        const double i2 =
            0.25 * (capacity_kernel(a, b1) / 3.0 + capacity_kernel(a, b2));
        return i1 - i2;
    };
    return (2.0 / s.omega()) * 0.5 * (part(pts[3]) + part(pts[2]));
}

double legacy_ec(const Scenario& s, const LegacyModel& m) {
    const double inv_g = 1.0 / s.gamma_bar();
    const double u1 = inv_g / (m.zeta * s.alpha1() + s.alpha2());
    if (m.zeta == 0.0) return exp_e1(u1) / num::ln2;  // second term vanishes
    const double u2 = inv_g / (m.zeta * s.alpha1());
    return (exp_e1(u1) - exp_e1(u2)) / num::ln2;
}

double normalized_error_percent(double exact, double other) {
    if (exact == 0.0)
        throw std::domain_error("normalized_error_percent: exact value is zero");
    return std::fabs(exact - other) / exact * 100.0;
}

}  // namespace noma::bpsk
