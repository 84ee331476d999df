#include "noma/postsic_bpsk.hpp"

#include <cmath>
#include <stdexcept>

#include "noma/numerics.hpp"

namespace noma::bpsk {

namespace {

// mu = sqrt(X^2 gbar / (X^2 gbar + 2)); every branch statistic is a
// rational function of it.
double mu_of(const Scenario& s, const ConstellationPoint& x) {
    const double xg = x.value * x.value * s.gamma_bar();
    return std::sqrt(xg / (xg + 2.0));
}

double gaussian_pdf(double v, double sigma_sq) {
    return std::exp(-0.5 * v * v / sigma_sq) /
           std::sqrt(2.0 * num::pi * sigma_sq);
}

}  // namespace

double sic_success_prob(const Scenario& s, const ConstellationPoint& x) {
    return 0.5 * (1.0 + mu_of(s, x));
}

double sic_failure_prob(const Scenario& s, const ConstellationPoint& x) {
    const double xg = x.value * x.value * s.gamma_bar();
    return 1.0 / ((xg + 2.0) * (1.0 + mu_of(s, x)));
}

double pdf_beta_success(const Scenario& s, const ConstellationPoint& x,
                        double beta) {
    if (beta < 0.0) return 0.0;
    const double phi = num::std_normal_cdf(std::fabs(x.value) * beta / s.sigma_n());
    return rayleigh_pdf(beta, s.omega()) * phi / sic_success_prob(s, x);
}

double pdf_beta_failure(const Scenario& s, const ConstellationPoint& x,
                        double beta) {
    if (beta < 0.0) return 0.0;
    const double q = num::q_function(std::fabs(x.value) * beta / s.sigma_n());
    return rayleigh_pdf(beta, s.omega()) * q / sic_failure_prob(s, x);
}

double pdf_noise_success(const Scenario& s, const ConstellationPoint& x,
                         double w) {
    const double fn = gaussian_pdf(w, s.sigma_n_sq());
    const double ps = sic_success_prob(s, x);
    // Open half-line on the side the symbol pushes the decision away
    // from the threshold; truncated survival factor on the other side.
    const bool open_side = x.value > 0.0 ? (w >= 0.0) : (w <= 0.0);
    if (open_side) return fn / ps;
    const double x2o = x.value * x.value * s.omega();
    return fn * std::exp(-w * w / x2o) / ps;
}

double pdf_noise_failure(const Scenario& s, const ConstellationPoint& x,
                         double z) {
    const bool in_support = x.value > 0.0 ? (z < 0.0) : (z > 0.0);
    if (!in_support) return 0.0;
    const double fn = gaussian_pdf(z, s.sigma_n_sq());
    const double x2o = x.value * x.value * s.omega();
    return fn * (1.0 - std::exp(-z * z / x2o)) / sic_failure_prob(s, x);
}

double joint_pdf(const Scenario& s, const ConstellationPoint& x, Branch branch,
                 double beta, double n) {
    if (beta < 0.0) return 0.0;
    const double base = rayleigh_pdf(beta, s.omega()) * gaussian_pdf(n, s.sigma_n_sq());
    const bool success_region = n >= -x.value * beta;
    switch (branch) {
        case Branch::success:
            return success_region ? base / sic_success_prob(s, x) : 0.0;
        case Branch::failure:
            return success_region ? 0.0 : base / sic_failure_prob(s, x);
        case Branch::unconditional:
            return base;
    }
    return 0.0;
}

double second_moment_w(const Scenario& s, const ConstellationPoint& x) {
    // (sigma_n^2 / (2 p_S)) (1 + mu^3) with p_S = (1 + mu)/2.
    const double mu = mu_of(s, x);
    return s.sigma_n_sq() * (1.0 - mu + mu * mu);
}

double second_moment_z(const Scenario& s, const ConstellationPoint& x) {
    // (sigma_n^2 / (2 p_F)) (1 - mu^3) with p_F = (1 - mu)/2.
    const double mu = mu_of(s, x);
    return s.sigma_n_sq() * (1.0 + mu + mu * mu);
}

ConditionalChannelStats conditional_stats(const Scenario& s,
                                          const ConstellationPoint& x) {
    ConditionalChannelStats st;
    st.point = x;
    st.p_success = sic_success_prob(s, x);
    st.p_failure = sic_failure_prob(s, x);
    st.m2_w = second_moment_w(s, x);
    st.m2_z = second_moment_z(s, x);
    return st;
}

double PdfCurve::trapezoid() const {
    double acc = 0.0;
    for (size_t k = 1; k < grid.size(); ++k)
        acc += 0.5 * (density[k] + density[k - 1]) * (grid[k] - grid[k - 1]);
    return acc;
}

PdfCurve sample_pdf_curve(const Scenario& s, const ConstellationPoint& x,
                          Branch branch, Variable variable, int points) {
    if (variable == Variable::fading)
        return sample_pdf_curve(s, x, branch, variable, 0.0,
                                5.0 * std::sqrt(s.omega()), points);
    const double span = 6.0 * s.sigma_n();
    return sample_pdf_curve(s, x, branch, variable, -span, span, points);
}

PdfCurve sample_pdf_curve(const Scenario& s, const ConstellationPoint& x,
                          Branch branch, Variable variable, double lo, double hi,
                          int points) {
    if (points < 2) throw std::invalid_argument("sample_pdf_curve: points < 2");
    if (!(lo < hi)) throw std::invalid_argument("sample_pdf_curve: lo >= hi");
    PdfCurve curve;
    curve.branch = branch;
    curve.variable = variable;
    curve.grid.resize(points);
    curve.density.resize(points);
    const double h = (hi - lo) / (points - 1);
    for (int k = 0; k < points; ++k) {
        const double v = lo + h * k;
        curve.grid[k] = v;
        if (variable == Variable::fading) {
            curve.density[k] = branch == Branch::success ? pdf_beta_success(s, x, v)
                               : branch == Branch::failure
                                   ? pdf_beta_failure(s, x, v)
                                   : rayleigh_pdf(v, s.omega());
        } else {
            curve.density[k] = branch == Branch::success ? pdf_noise_success(s, x, v)
                               : branch == Branch::failure
                                   ? pdf_noise_failure(s, x, v)
                                   : std::exp(-0.5 * v * v / s.sigma_n_sq()) /
                                         std::sqrt(2.0 * num::pi * s.sigma_n_sq());
        }
    }
    return curve;
}

}  // namespace noma::bpsk
