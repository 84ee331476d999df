#include "noma/postsic_qpsk.hpp"

#include <algorithm>
#include <cmath>

#include "noma/numerics.hpp"

namespace noma::qpsk {

namespace {

double gaussian_pdf(double v, double sigma_sq) {
    return std::exp(-0.5 * v * v / sigma_sq) /
           std::sqrt(2.0 * num::pi * sigma_sq);
}

}  // namespace

QuadrantLevels QuadrantLevels::make(const Scenario& s, int sign_i, int sign_j) {
    const double a1 = std::sqrt(s.alpha1());
    const double a2 = std::sqrt(s.alpha2());
    const double inv_sqrt2 = 0.70710678118654752440;
    QuadrantLevels q;
    q.lambda_i = (a1 + sign_i * a2) * inv_sqrt2;
    q.lambda_j = (a1 + sign_j * a2) * inv_sqrt2;
    q.chi_i = q.lambda_i / s.sigma_n();
    q.chi_j = q.lambda_j / s.sigma_n();
    const double gi = q.lambda_i * q.lambda_i * s.gamma_bar();
    const double gj = q.lambda_j * q.lambda_j * s.gamma_bar();
    q.mu_i = std::sqrt(gi / (gi + 2.0));
    q.mu_j = std::sqrt(gj / (gj + 2.0));
    return q;
}

double success_prob_given_beta(const QuadrantLevels& q, double beta) {
    return (1.0 - num::q_function(beta * q.chi_i)) *
           (1.0 - num::q_function(beta * q.chi_j));
}

double rail_success_prob(double mu) {
    // Rayleigh average of (1 - Q)^2: 1 - (1 - mu) + E[Q^2] with
    // E[Q^2(beta chi)] = 1/4 - (mu/pi) atan(1/mu), folded together.
    return 0.25 + 0.5 * mu + (mu / num::pi) * std::atan(mu);
}

double success_prob(const Scenario&, const QuadrantLevels& q) {
    return 0.5 * (rail_success_prob(q.mu_i) + rail_success_prob(q.mu_j));
}

double success_prob_exact(const Scenario& s, const QuadrantLevels& q) {
    if (q.lambda_i == q.lambda_j) return rail_success_prob(q.mu_i);
    const double inv_omega = 1.0 / s.omega();
    auto f = [&](double b) {
        return success_prob_given_beta(q, b) * (2.0 * b * inv_omega) *
               std::exp(-b * b * inv_omega);
    };
    return num::integrate_semi_infinite(f, 1e-11).value;
}

double pdf_beta_success(const Scenario& s, const QuadrantLevels& q, double beta,
                        double p_success) {
    if (beta < 0.0) return 0.0;
    return rayleigh_pdf(beta, s.omega()) * success_prob_given_beta(q, beta) /
           p_success;
}

double pdf_beta_success(const Scenario& s, const QuadrantLevels& q, double beta) {
    return pdf_beta_success(s, q, beta, success_prob_exact(s, q));
}

double joint_noise_pdf(const Scenario& s, const QuadrantLevels& q,
                       const ComplexNoiseSample& w, double p_success) {
    const double tau =
        std::max({0.0, -w.re / q.lambda_i, -w.im / q.lambda_j});
    const double fn = gaussian_pdf(w.re, s.sigma_n_sq()) *
                      gaussian_pdf(w.im, s.sigma_n_sq());
    return fn * std::exp(-tau * tau / s.omega()) / p_success;
}

double joint_noise_pdf(const Scenario& s, const QuadrantLevels& q,
                       const ComplexNoiseSample& w) {
    return joint_noise_pdf(s, q, w, success_prob_exact(s, q));
}

double pdf_noise_real(const Scenario& s, const QuadrantLevels& q, double w_r,
                      double p_success) {
    const double fn = gaussian_pdf(w_r, s.sigma_n_sq());
    if (w_r >= 0.0) return fn * (1.0 + q.mu_j) / (2.0 * p_success);
    const double lam2o = q.lambda_i * q.lambda_i * s.omega();
    const double t1 =
        q.mu_j * num::std_normal_cdf(q.chi_j * w_r / (q.lambda_i * q.mu_j));
    const double t2 = std::exp(-w_r * w_r / lam2o) *
                      num::std_normal_cdf(-q.chi_j * w_r / q.lambda_i);
    return fn * (t1 + t2) / p_success;
}

double pdf_noise_real(const Scenario& s, const QuadrantLevels& q, double w_r) {
    return pdf_noise_real(s, q, w_r, success_prob_exact(s, q));
}

double psi_kernel(double a, double b) {
    if (!(a > 0.0)) throw std::domain_error("psi_kernel: requires a > 0");
    const double ab = a * b;
    return a * a * (0.25 - (ab / (1.0 + ab * ab) + std::atan(ab)) /
                               (2.0 * num::pi));
}

namespace {

QuadrantLevels swap_rails(const QuadrantLevels& q) {
    QuadrantLevels r = q;
    std::swap(r.lambda_i, r.lambda_j);
    std::swap(r.chi_i, r.chi_j);
    std::swap(r.mu_i, r.mu_j);
    return r;
}

}  // namespace

double second_moment_w_real(const Scenario& s, const QuadrantLevels& q,
                            double p_success) {
    const double sn = s.sigma_n();
    const double w1 = q.chi_j / (q.lambda_i * q.mu_j);
    const double w2 = -q.chi_j / q.lambda_i;
    const double bracket = s.sigma_n_sq() * (1.0 + q.mu_j) / 4.0 +
                           q.mu_j * psi_kernel(sn, w1) +
                           q.mu_i * psi_kernel(sn * q.mu_i, w2);
    return bracket / p_success;
}

double second_moment_w(const Scenario& s, const QuadrantLevels& q,
                       double p_success) {
    if (q.lambda_i == q.lambda_j)
        return 2.0 * second_moment_w_real(s, q, p_success);
    return second_moment_w_real(s, q, p_success) +
           second_moment_w_real(s, swap_rails(q), p_success);
}

double second_moment_w(const Scenario& s, const QuadrantLevels& q) {
    return second_moment_w(s, q, success_prob_exact(s, q));
}

double mean_noise_real(const Scenario& s, const QuadrantLevels& q,
                       double p_success) {
    const double span = 10.0 * s.sigma_n();
    auto f = [&](double w) { return w * pdf_noise_real(s, q, w, p_success); };
    return num::integrate_adaptive(f, -span, span, 1e-12 * s.sigma_n_sq()).value;
}

double noise_variance(const Scenario& s, const QuadrantLevels& q,
                      double p_success) {
    const double m2 = second_moment_w(s, q, p_success);
    const double mean_re = mean_noise_real(s, q, p_success);
    // The imaginary marginal is the real one with the rails swapped.
    const double mean_im = mean_noise_real(s, swap_rails(q), p_success);
    return m2 - (mean_re * mean_re + mean_im * mean_im);
}

double outage_given_success(const Scenario& s, const QuadrantLevels& q) {
    const double p_success = success_prob_exact(s, q);
    const double m2 = second_moment_w(s, q, p_success);
    const double eps = std::sqrt(s.gamma_th() * m2 / s.alpha2());
    if (eps <= 0.0) return 0.0;
    auto f = [&](double b) { return pdf_beta_success(s, q, b, p_success); };
    const double p = num::integrate_adaptive(f, 0.0, eps, 1e-11).value;
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace noma::qpsk
