#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

// Special functions and quadrature used by the analytic formulas.
// All functions here are pure and safe to call concurrently.

namespace noma::num {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double ln2 = 0.69314718055994530942;

/// Error function, |error| < 1e-13 on [-6, 6].
double erf(double x);

/// Complementary error function with full relative accuracy in the tail.
double erfc(double x);

/// Standard normal CDF, Phi(x) = erfc(-x/sqrt(2))/2.
double std_normal_cdf(double x);

/// Gaussian tail probability Q(x) = 1 - Phi(x) = erfc(x/sqrt(2))/2.
/// Computed through erfc so the tail keeps relative accuracy.
double q_function(double x);

/// Standard normal density.
double std_normal_pdf(double x);

/// Inverse standard normal CDF (Wichura's PPND16 rational fits).
/// Domain (0,1); used for deterministic Gaussian variate generation.
double inverse_std_normal_cdf(double p);

/// Exponential integral E1(x) = int_x^inf exp(-t)/t dt, x > 0.
/// Power series for x <= 1, continued fraction above.
double exp_integral_e1(double x);

/// Two-exponential upper bound approximation of Q(x), x >= 0:
/// (1/12) exp(-x^2/2) + (1/4) exp(-2 x^2/3).
double chiani_q_approx(double x);

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // achieved absolute error estimate
    long evaluations = 0;
};

enum class RuleKind { gauss_laguerre, adaptive_interval };

/// Nodes/weights for integrating against the exp(-t) weight on (0, inf).
/// Weights are all positive and sum to 1.
struct QuadratureRule {
    RuleKind kind = RuleKind::gauss_laguerre;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Laguerre rule of the given order (Newton iteration on the
/// Laguerre recurrence). Throws std::invalid_argument for order < 1 or
/// order > 192.
QuadratureRule gauss_laguerre_rule(int order);

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b] with an
/// absolute error budget `tol`. Throws QuadratureError if the budget
/// cannot be met within the interval limit.
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b,
                                    double tol = 1e-9);

/// Integral of f over (0, inf). Strategy: Gauss-Laguerre with exp(t)
/// reweighting at two orders (64/96); if the orders disagree by more
/// than `tol`, falls back to adaptive integration on the transformed
/// interval t = u/(1-u).
QuadratureResult integrate_semi_infinite(const Integrand& f, double tol = 1e-9);

}  // namespace noma::num
