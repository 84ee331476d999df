#pragma once

#include "noma/scenario.hpp"

// Success-branch post-SIC statistics for QPSK. The far-user decision is
// per-rail, so the success event is two-dimensional and couples the real
// and imaginary noise components. Only the top-right far-user quadrant is
// carried; the others follow by constellation symmetry.

namespace noma::qpsk {

/// Per-quadrant rail amplitudes lambda = (sqrt(alpha1) + sign sqrt(alpha2))/sqrt(2)
/// for the real (i) and imaginary (j) rails, with the derived ratios used
/// throughout: chi = lambda/sigma_n and mu = sqrt(lambda^2 gbar/(lambda^2 gbar + 2)).
struct QuadrantLevels {
    double lambda_i = 0.0;
    double lambda_j = 0.0;
    double chi_i = 0.0;
    double chi_j = 0.0;
    double mu_i = 0.0;
    double mu_j = 0.0;

    static QuadrantLevels make(const Scenario& s, int sign_i, int sign_j);
};

struct ComplexNoiseSample {
    double re = 0.0;
    double im = 0.0;
};

/// Success probability conditioned on the fading gain:
/// [1 - Q(beta chi_i)][1 - Q(beta chi_j)].
double success_prob_given_beta(const QuadrantLevels& q, double beta);

/// Rayleigh average of [1 - Q(beta chi)]^2 for a single rail level, in
/// closed form: 1/4 + mu/2 + (mu/pi) atan(mu). Exact; equals the
/// two-rail success probability when both rails share the level.
double rail_success_prob(double mu);

/// Rail-averaged closed form (1/2) p(mu_i) + (1/2) p(mu_j). Exact for
/// equal rails; for unequal rails it is an approximation whose relative
/// error stays below 1% from moderate SNR up.
double success_prob(const Scenario& s, const QuadrantLevels& q);

/// Success probability by quadrature of the conditional success
/// probability against the Rayleigh density (closed form taken directly
/// when the rails coincide). This is the normalizer that makes the
/// conditional PDFs integrate to one.
double success_prob_exact(const Scenario& s, const QuadrantLevels& q);

/// Success-branch fading density
/// (2b/(omega p_s)) exp(-b^2/omega) [1-Q(b chi_i)][1-Q(b chi_j)].
double pdf_beta_success(const Scenario& s, const QuadrantLevels& q, double beta,
                        double p_success);
double pdf_beta_success(const Scenario& s, const QuadrantLevels& q, double beta);

/// Success-branch joint density of the complex noise:
/// (f_N(w)/p_s) exp(-tau(w)^2/omega), tau = max(0, -re/lambda_i, -im/lambda_j).
/// The two components are dependent through tau.
double joint_noise_pdf(const Scenario& s, const QuadrantLevels& q,
                       const ComplexNoiseSample& w, double p_success);
double joint_noise_pdf(const Scenario& s, const QuadrantLevels& q,
                       const ComplexNoiseSample& w);

/// Marginal density of the real noise component, piecewise in sign(w_r):
///   w_r >= 0: f_NR(w_r) (1 + mu_j) / (2 p_s)
///   w_r <  0: (f_NR(w_r)/p_s) [mu_j Phi(chi_j w_r/(lambda_i mu_j))
///                              + exp(-w_r^2/(lambda_i^2 omega)) Phi(-chi_j w_r/lambda_i)]
/// The imaginary marginal is the same with the rails swapped.
double pdf_noise_real(const Scenario& s, const QuadrantLevels& q, double w_r,
                      double p_success);
double pdf_noise_real(const Scenario& s, const QuadrantLevels& q, double w_r);

/// Half-line second moment of a zero-mean Gaussian tilted by a normal CDF:
/// psi_kernel(a, b) = int_{-inf}^0 w^2 N(w; 0, a^2) Phi(b w) dw
///                  = a^2 [ 1/4 - (1/(2 pi)) ( ab/(1 + a^2 b^2) + atan(ab) ) ].
double psi_kernel(double a, double b);

/// Success-branch second moment of the real noise component,
/// E[W_R^2] = (1/p_s) [ sigma_n^2 (1+mu_j)/4 + mu_j psi(sigma_n, w1)
///                      + mu_i psi(sigma_n mu_i, w2) ],
/// w1 = chi_j/(lambda_i mu_j), w2 = -chi_j/lambda_i.
double second_moment_w_real(const Scenario& s, const QuadrantLevels& q,
                            double p_success);

/// Second moment of the complex noise, E|W|^2 = E[W_R^2] + E[W_I^2]
/// (the imaginary part is the real decomposition with the rails
/// swapped). Equals 2 E[W_R^2] when the rails coincide, and with the
/// exact normalizer it equals the defining double integral for any
/// rail pair.
double second_moment_w(const Scenario& s, const QuadrantLevels& q, double p_success);
double second_moment_w(const Scenario& s, const QuadrantLevels& q);

/// Mean of the real noise component on the success branch (quadrature of
/// the marginal; no closed form is carried for it).
double mean_noise_real(const Scenario& s, const QuadrantLevels& q, double p_success);

/// var[W] = E|W|^2 - |E W|^2, the complex mean taken per component.
double noise_variance(const Scenario& s, const QuadrantLevels& q, double p_success);

/// Success-branch outage Pr(alpha2 beta^2 / E|W|^2 < gamma_th), by
/// quadrature of the success-branch fading density up to
/// eps = sqrt(gamma_th E|W|^2 / alpha2).
double outage_given_success(const Scenario& s, const QuadrantLevels& q);

}  // namespace noma::qpsk
