#include "noma/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "noma/capacity.hpp"
#include "noma/montecarlo.hpp"
#include "noma/numerics.hpp"
#include "noma/outage.hpp"
#include "noma/postsic_bpsk.hpp"
#include "noma/postsic_qpsk.hpp"
#include "noma/scenario.hpp"

namespace noma::reports {

namespace {

Check make_check(std::string name, double value, double target, double tol,
                 std::string detail = {}) {
    Check c;
    c.name = std::move(name);
    c.value = value;
    c.target = target;
    c.tolerance = tol;
    c.pass = std::fabs(value - target) <= tol;
    c.detail = std::move(detail);
    return c;
}

std::string fmt(double v, const char* format = "%.4g") {
    char buf[48];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

}  // namespace

Table3Report reproduce_table3() {
    // Printed reference cells: min/max/avg normalized error (percent) of
    // the closed-form approximation and of the zero-residual legacy
    // formula, per power allocation, over SNR 0..30 dB.
    static const double kAlpha[8] = {0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9};
    static const double kApprRef[8][3] = {
        {0.04, 2.34, 1.11}, {0.04, 2.47, 0.57}, {0.04, 2.71, 0.79},
        {0.02, 2.96, 0.87}, {0.01, 3.17, 0.86}, {0.00, 3.33, 0.81},
        {0.00, 3.41, 0.73}, {0.00, 3.42, 0.64}};
    static const double kLegacyAvgRef[8] = {10.87, 5.24, 2.17, 0.60,
                                            1.25,  2.33, 3.20, 3.95};

    Table3Report rep;
    for (int a = 0; a < 8; ++a) {
        rep.alpha1.push_back(kAlpha[a]);
        double appr_min = 1e300, appr_max = 0.0, appr_sum = 0.0;
        double leg_min = 1e300, leg_max = 0.0, leg_sum = 0.0;
        for (int db = 0; db <= 30; ++db) {
            const Scenario s = build_scenario(kAlpha[a], db, 1.0, 1.0);
            const double exact = bpsk::ec_total_exact(s);
            const double appr = bpsk::ec_closed_form_approx(s);
            const double legacy = bpsk::legacy_ec(s, LegacyModel{0.0});
            const double ea = bpsk::normalized_error_percent(exact, appr);
            const double el = bpsk::normalized_error_percent(exact, legacy);
            appr_min = std::min(appr_min, ea);
            appr_max = std::max(appr_max, ea);
            appr_sum += ea;
            leg_min = std::min(leg_min, el);
            leg_max = std::max(leg_max, el);
            leg_sum += el;
        }
        const std::vector<double> appr{appr_min, appr_max, appr_sum / 31.0};
        const std::vector<double> leg{leg_min, leg_max, leg_sum / 31.0};
        rep.appr_minmaxavg.push_back(appr);
        rep.legacy_minmaxavg.push_back(leg);

        const char* metric[3] = {"min", "max", "avg"};
        for (int m = 0; m < 3; ++m)
            rep.checks.push_back(make_check(
                "table3/appr_" + std::string(metric[m]) + "/alpha1=" + fmt(kAlpha[a]),
                appr[m], kApprRef[a][m], 0.5, "percent, +-0.5pp"));
        rep.checks.push_back(make_check("table3/legacy_avg/alpha1=" + fmt(kAlpha[a]),
                                        leg[2], kLegacyAvgRef[a], 1.5,
                                        "percent, +-1.5pp"));
    }
    return rep;
}

std::string Table3Report::render() const {
    std::ostringstream os;
    os << "Normalized capacity error vs exact, SNR 0..30 dB, zeta=0\n";
    os << "method  metric ";
    for (double a : alpha1) os << fmt(a, "%8.2f");
    os << '\n';
    const char* metric[3] = {"min", "max", "avg"};
    for (int m = 0; m < 3; ++m) {
        os << "appr    " << metric[m] << "    ";
        for (const auto& col : appr_minmaxavg) os << fmt(col[m], "%7.2f") << '%';
        os << '\n';
    }
    for (int m = 0; m < 3; ++m) {
        os << "legacy  " << metric[m] << "    ";
        for (const auto& col : legacy_minmaxavg) os << fmt(col[m], "%7.2f") << '%';
        os << '\n';
    }
    return os.str();
}

namespace {

struct RailPair {
    int sign_i;
    int sign_j;
    const char* label;
};

constexpr RailPair kRails[4] = {
    {+1, +1, "(l1,l1)"}, {-1, -1, "(l-1,l-1)"}, {+1, -1, "(l1,l-1)"},
    {-1, +1, "(l-1,l1)"}};

// Reference theory cells E|W|^2 (as tabulated: the per-component
// decomposition doubled), rails in kRails order, SNR {0,10,20} dB.
constexpr double kTable2TheoryRef[3][4] = {
    {1.53, 1.64, 1.41, 1.65},
    {1.86e-1, 1.50e-1, 1.77e-1, 1.52e-1},
    {1.98e-2, 1.81e-2, 1.97e-2, 1.80e-2}};
constexpr int kTable2SnrDb[3] = {0, 10, 20};

double closed_form_cell(const Scenario& s, const qpsk::QuadrantLevels& q) {
    const double ps = qpsk::success_prob_exact(s, q);
    return 2.0 * qpsk::second_moment_w_real(s, q, ps);
}

}  // namespace

Table2Report reproduce_table2(std::uint64_t samples, std::uint64_t seed) {
    Table2Report rep;
    rep.fit_alphas = {0.6, 0.7, 0.75, 0.8, 0.9};

    // Fit the (unstated) power allocation: mean relative deviation of
    // the twelve theory cells from the reference values.
    for (double a : rep.fit_alphas) {
        double dev = 0.0;
        for (int t = 0; t < 3; ++t) {
            const Scenario s = build_scenario(a, kTable2SnrDb[t], 1.0, 1.0);
            for (int r = 0; r < 4; ++r) {
                const auto q =
                    qpsk::QuadrantLevels::make(s, kRails[r].sign_i, kRails[r].sign_j);
                const double cell = closed_form_cell(s, q);
                dev += std::fabs(cell - kTable2TheoryRef[t][r]) /
                       kTable2TheoryRef[t][r];
            }
        }
        rep.fit_deviation.push_back(dev / 12.0);
    }
    const auto best = std::min_element(rep.fit_deviation.begin(),
                                       rep.fit_deviation.end());
    rep.best_alpha1 =
        rep.fit_alphas[static_cast<std::size_t>(best - rep.fit_deviation.begin())];

    mc::McConfig cfg;
    cfg.samples = samples;
    cfg.seed = seed;

    for (int t = 0; t < 3; ++t) {
        const Scenario s = build_scenario(rep.best_alpha1, kTable2SnrDb[t], 1.0, 1.0);
        rep.two_sigma_sq[t] = 2.0 * s.sigma_n_sq();
        for (int r = 0; r < 4; ++r) {
            const auto q =
                qpsk::QuadrantLevels::make(s, kRails[r].sign_i, kRails[r].sign_j);
            const double ps = qpsk::success_prob_exact(s, q);
            rep.theory[t][r] = closed_form_cell(s, q);
            rep.variance[t][r] = qpsk::noise_variance(s, q, ps);
            const auto est = mc::simulate_qpsk_success_stats(s, q, cfg);
            rep.mc_mean[t][r] = est.m2_w.mean;
            rep.mc_stderr[t][r] = est.m2_w.stderror;
        }
    }

    // Gates. Equal-rail (l1,l1) theory against the printed reference
    // within 3% relative; theory against the artifact's own simulation
    // (2% equal rails, 6% for the mixed-rail average, which is the
    // physical second moment).
    for (int t = 0; t < 3; ++t) {
        const double ref = kTable2TheoryRef[t][0];
        rep.checks.push_back(make_check(
            "table2/theory_vs_ref/(l1,l1)/" + std::to_string(kTable2SnrDb[t]) + "dB",
            rep.theory[t][0] / ref, 1.0, 0.03, "relative, +-3%"));
    }
    for (int t = 0; t < 3; ++t) {
        for (int r = 0; r < 2; ++r) {
            const double mc_v = rep.mc_mean[t][r];
            rep.checks.push_back(make_check(
                "table2/theory_vs_mc/" + std::string(kRails[r].label) + "/" +
                    std::to_string(kTable2SnrDb[t]) + "dB",
                rep.theory[t][r] / mc_v, 1.0, 0.02, "relative, +-2%"));
        }
        const double avg_theory = 0.5 * (rep.theory[t][2] + rep.theory[t][3]);
        const double avg_mc = 0.5 * (rep.mc_mean[t][2] + rep.mc_mean[t][3]);
        rep.checks.push_back(make_check(
            "table2/mixed_avg_theory_vs_mc/" + std::to_string(kTable2SnrDb[t]) + "dB",
            avg_theory / avg_mc, 1.0, 0.06,
            "relative, +-6%; per-ordering split reported, not gated"));
        // Simulation against the exact per-rail second moment (the
        // mixed-rail physical value equals the two-ordering average).
        for (int r = 0; r < 4; ++r) {
            const double exact = r < 2 ? rep.theory[t][r] : avg_theory;
            rep.checks.push_back(make_check(
                "table2/mc_vs_exact/" + std::string(kRails[r].label) + "/" +
                    std::to_string(kTable2SnrDb[t]) + "dB",
                rep.mc_mean[t][r], exact, 3.0 * rep.mc_stderr[t][r],
                "3 stderr band"));
        }
    }
    return rep;
}

std::string Table2Report::render() const {
    std::ostringstream os;
    os << "Success-branch complex-noise power, top-right quadrant\n";
    os << "fitted alpha1 = " << fmt(best_alpha1) << " (candidates:";
    for (std::size_t k = 0; k < fit_alphas.size(); ++k)
        os << ' ' << fmt(fit_alphas[k]) << "->" << fmt(100.0 * fit_deviation[k], "%.2f")
           << '%';
    os << ")\n";
    os << "SNR  metric      ";
    for (const auto& r : kRails) os << r.label << "   ";
    os << '\n';
    for (int t = 0; t < 3; ++t) {
        os << kTable2SnrDb[t] << " dB:\n";
        os << "  2*sigma_n^2   ";
        for (int r = 0; r < 4; ++r) os << fmt(two_sigma_sq[t], "%11.4g");
        os << '\n';
        os << "  var[W]        ";
        for (int r = 0; r < 4; ++r) os << fmt(variance[t][r], "%11.4g");
        os << '\n';
        os << "  E|W|^2 theory ";
        for (int r = 0; r < 4; ++r) os << fmt(theory[t][r], "%11.4g");
        os << '\n';
        os << "  E|W|^2 sim    ";
        for (int r = 0; r < 4; ++r) os << fmt(mc_mean[t][r], "%11.4g");
        os << '\n';
    }
    return os.str();
}

std::vector<Check> figure_gates() {
    std::vector<Check> checks;

    // Interior outage minimum over alpha1 at 30 dB.
    const auto argmin_alpha = [](double rate) {
        double best_a = 0.0, best_po = 1e300;
        for (double a = 0.55; a <= 0.951; a += 0.005) {
            const Scenario s = build_scenario(a, 30.0, 1.0, rate);
            const double po = bpsk::outage_total(s);
            if (po < best_po) {
                best_po = po;
                best_a = a;
            }
        }
        return best_a;
    };
    checks.push_back(make_check("figures/outage_vs_alpha_min/rate=1", argmin_alpha(1.0),
                                0.75, 0.05, "argmin alpha1 at 30 dB"));
    checks.push_back(make_check("figures/outage_vs_alpha_min/rate=3", argmin_alpha(3.0),
                                0.65, 0.05, "argmin alpha1 at 30 dB"));

    // Legacy residual-factor range endpoint.
    const Scenario s_zeta = build_scenario(0.6, 30.0, 1.0, 0.5);
    checks.push_back(make_check("figures/zeta_upper_bound/alpha1=0.6,rate=0.5",
                                bpsk::legacy_zeta_upper_bound(s_zeta), 1.6095, 1e-3));

    // Legacy/exact capacity crossing for a small residual factor.
    {
        bool crossed = false;
        double prev = 0.0;
        bool have_prev = false;
        for (int db = 0; db <= 40; db += 2) {
            const Scenario s = build_scenario(0.55, db, 1.0, 1.0);
            const double diff =
                bpsk::legacy_ec(s, LegacyModel{0.01}) - bpsk::ec_total_exact(s);
            if (have_prev && ((prev > 0) != (diff > 0))) crossed = true;
            prev = diff;
            have_prev = true;
        }
        checks.push_back(make_check("figures/legacy_exact_ec_crossing/alpha1=0.55",
                                    crossed ? 1.0 : 0.0, 1.0, 0.0,
                                    "sign change over 0..40 dB, zeta=0.01"));
    }
    return checks;
}

std::vector<Check> mc_agreement_checks(std::uint64_t samples, std::uint64_t seed) {
    struct Spot {
        double alpha1, rate, snr_db;
    };
    // Covers the saturated failure branch (alpha2 <= 4 alpha1 gamma_th)
    // and the unsaturated regime (alpha1=0.55, rate=0.25).
    static const Spot kSpots[12] = {
        {0.55, 0.25, 0.0}, {0.55, 0.25, 10.0}, {0.55, 0.25, 20.0},
        {0.75, 1.0, 0.0},  {0.75, 1.0, 10.0},  {0.75, 1.0, 20.0},
        {0.9, 2.0, 10.0},  {0.9, 2.0, 25.0},   {0.8, 0.5, 5.0},
        {0.8, 0.5, 15.0},  {0.65, 3.0, 15.0},  {0.65, 3.0, 25.0}};

    std::vector<Check> checks;
    for (const auto& spot : kSpots) {
        const Scenario s = build_scenario(spot.alpha1, spot.snr_db, 1.0, spot.rate);
        mc::McConfig cfg;
        cfg.samples = samples;
        cfg.seed = seed;
        const std::string tag = "alpha1=" + fmt(spot.alpha1) +
                                ",R=" + fmt(spot.rate) + "," + fmt(spot.snr_db) + "dB";
        const auto po = mc::simulate_bpsk_outage(s, cfg);
        checks.push_back(make_check("mc/outage/" + tag, po.mean,
                                    bpsk::outage_total(s), 3.0 * po.stderror,
                                    "3 stderr band"));
        const auto ec = mc::simulate_bpsk_ec(s, cfg);
        checks.push_back(make_check("mc/ec/" + tag, ec.mean, bpsk::ec_total_exact(s),
                                    3.0 * ec.stderror, "3 stderr band"));
    }
    return checks;
}

std::vector<Check> identity_checks(int scenarios, std::uint64_t seed) {
    // Small deterministic linear-congruential stream; the identities hold
    // for every input, the randomization just spreads the coverage.
    std::uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    auto uniform = [&state](double lo, double hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        const double u = static_cast<double>(state >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    };

    double worst_fading = 0.0, worst_noise = 0.0, worst_moment = 0.0;
    for (int k = 0; k < scenarios; ++k) {
        const Scenario s = build_scenario(uniform(0.551, 0.949), uniform(-10.0, 40.0),
                                          uniform(0.5, 2.0), uniform(0.25, 4.0));
        const auto pts = bpsk_constellation(s);
        const auto& x = pts[k % 4];
        const double ps = bpsk::sic_success_prob(s, x);
        const double pf = bpsk::sic_failure_prob(s, x);

        const double beta = uniform(0.0, 3.0 * std::sqrt(s.omega()));
        const double mix_f = ps * bpsk::pdf_beta_success(s, x, beta) +
                             pf * bpsk::pdf_beta_failure(s, x, beta);
        worst_fading =
            std::max(worst_fading, std::fabs(mix_f - rayleigh_pdf(beta, s.omega())));

        const double w = uniform(-4.0 * s.sigma_n(), 4.0 * s.sigma_n());
        const double fn = std::exp(-0.5 * w * w / s.sigma_n_sq()) /
                          std::sqrt(2.0 * num::pi * s.sigma_n_sq());
        const double mix_n = ps * bpsk::pdf_noise_success(s, x, w) +
                             pf * bpsk::pdf_noise_failure(s, x, w);
        // Normalize by the density scale so the precision bar does not
        // depend on sigma_n.
        worst_noise = std::max(worst_noise, std::fabs(mix_n - fn) * s.sigma_n());

        const double moment = ps * bpsk::second_moment_w(s, x) +
                              pf * bpsk::second_moment_z(s, x);
        worst_moment = std::max(
            worst_moment, std::fabs(moment - s.sigma_n_sq()) / s.sigma_n_sq());
    }

    std::vector<Check> checks;
    checks.push_back(make_check("identity/fading_mixture_sup", worst_fading, 0.0,
                                1e-12, std::to_string(scenarios) + " scenarios"));
    checks.push_back(make_check("identity/noise_mixture_sup", worst_noise, 0.0, 1e-12,
                                "scaled by sigma_n"));
    checks.push_back(make_check("identity/moment_identity_sup", worst_moment, 0.0,
                                1e-12, "relative to sigma_n^2"));
    return checks;
}

std::vector<Check> closed_form_vs_quadrature_checks() {
    static const double kSnrDb[6] = {-10, 0, 10, 20, 30, 40};
    static const double kAlpha[5] = {0.55, 0.65, 0.75, 0.85, 0.95};
    static const double kRate[6] = {0.25, 0.5, 1, 2, 3, 4};

    double worst_ps = 0.0, worst_m2w = 0.0, worst_m2z = 0.0;
    double worst_pos = 0.0, worst_pof = 0.0, worst_i1 = 0.0;
    for (double db : kSnrDb) {
        for (double a : kAlpha) {
            for (double rate : kRate) {
                const Scenario s = build_scenario(a, db, 1.0, rate);
                const auto pts = bpsk_constellation(s);
                for (int k : {2, 3}) {  // X10, X11; the mirrored pair is identical
                    const auto& x = pts[k];
                    const double sn = s.sigma_n();
                    const double chi = std::fabs(x.value) / sn;
                    const double inv_omega = 1.0 / s.omega();

                    // Success probability against its defining average.
                    const double ps_quad =
                        num::integrate_semi_infinite(
                            [&](double b) {
                                return rayleigh_pdf(b, s.omega()) *
                                       num::std_normal_cdf(chi * b);
                            },
                            1e-10)
                            .value;
                    worst_ps = std::max(
                        worst_ps,
                        std::fabs(ps_quad - bpsk::sic_success_prob(s, x)));

                    // Conditional noise moments against their integrals,
                    // in units of sigma_n (v = w/sigma_n).
                    const double x2o = x.value * x.value * s.omega();
                    const double ps = bpsk::sic_success_prob(s, x);
                    const double pf = bpsk::sic_failure_prob(s, x);
                    const double m2w_quad =
                        s.sigma_n_sq() *
                        num::integrate_adaptive(
                            [&](double v) {
                                const double w = v * sn;
                                const double damp =
                                    w < 0.0 ? std::exp(-w * w / x2o) : 1.0;
                                return v * v * num::std_normal_pdf(v) * damp;
                            },
                            -10.0, 10.0, 1e-12)
                            .value /
                        ps;
                    worst_m2w = std::max(
                        worst_m2w,
                        std::fabs(m2w_quad - bpsk::second_moment_w(s, x)) /
                            s.sigma_n_sq());
                    const double m2z_quad =
                        s.sigma_n_sq() *
                        num::integrate_adaptive(
                            [&](double v) {
                                const double w = v * sn;
                                return v * v * num::std_normal_pdf(v) *
                                       (1.0 - std::exp(-w * w / x2o));
                            },
                            -10.0, 0.0, 1e-12)
                            .value /
                        pf;
                    worst_m2z = std::max(
                        worst_m2z,
                        std::fabs(m2z_quad - bpsk::second_moment_z(s, x)) /
                            s.sigma_n_sq());

                    // Branch outages against the fading-CDF integrals.
                    const double eps_s = std::sqrt(
                        s.gamma_th() * bpsk::second_moment_w(s, x) / s.alpha2());
                    const double pos_quad =
                        num::integrate_adaptive(
                            [&](double b) { return bpsk::pdf_beta_success(s, x, b); },
                            0.0, eps_s, 1e-10)
                            .value;
                    worst_pos = std::max(
                        worst_pos,
                        std::fabs(pos_quad - bpsk::outage_given_success(s, x)));

                    const double denom = s.alpha2() - 4.0 * s.alpha1() * s.gamma_th();
                    if (denom > 0.0) {
                        const double eps_f = std::sqrt(
                            s.gamma_th() * bpsk::second_moment_z(s, x) / denom);
                        const double pof_quad =
                            num::integrate_adaptive(
                                [&](double b) {
                                    return bpsk::pdf_beta_failure(s, x, b);
                                },
                                0.0, eps_f, 1e-10)
                                .value;
                        worst_pof = std::max(
                            worst_pof,
                            std::fabs(pof_quad - bpsk::outage_given_failure(s, x)));
                    }

                    // Closed first capacity term against its integral
                    // (log2(1 + psi t) exp(-t/omega) substitution form).
                    const double m2w = bpsk::second_moment_w(s, x);
                    const double psi = s.alpha2() / m2w;
                    const double i1_quad =
                        num::integrate_semi_infinite(
                            [&](double b) {
                                return b * std::log2(1.0 + psi * b * b) *
                                       std::exp(-b * b * inv_omega);
                            },
                            1e-10)
                            .value;
                    const double i1_closed =
                        (s.omega() / (2.0 * num::ln2)) *
                        std::exp(m2w / (s.alpha2() * s.omega())) *
                        num::exp_integral_e1(m2w / (s.alpha2() * s.omega()));
                    worst_i1 =
                        std::max(worst_i1, std::fabs(i1_quad - i1_closed) /
                                               std::fabs(i1_closed));
                }
            }
        }
    }

    std::vector<Check> checks;
    checks.push_back(make_check("oracle/sic_success_prob_sup", worst_ps, 0.0, 1e-6));
    checks.push_back(
        make_check("oracle/second_moment_w_sup", worst_m2w, 0.0, 1e-6,
                   "relative to sigma_n^2"));
    checks.push_back(
        make_check("oracle/second_moment_z_sup", worst_m2z, 0.0, 1e-6,
                   "relative to sigma_n^2"));
    checks.push_back(make_check("oracle/outage_success_sup", worst_pos, 0.0, 1e-6));
    checks.push_back(make_check("oracle/outage_failure_sup", worst_pof, 0.0, 1e-6));
    checks.push_back(make_check("oracle/capacity_i1_sup", worst_i1, 0.0, 1e-9,
                                "relative"));

    // Half-line Gaussian kernel against its defining integral.
    double worst_psi = 0.0;
    std::uint64_t state = 7;
    auto uniform = [&state](double lo, double hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + (hi - lo) * (static_cast<double>(state >> 11) * 0x1.0p-53);
    };
    for (int k = 0; k < 200; ++k) {
        const double a = uniform(0.05, 2.0);
        const double b = uniform(-8.0, 8.0);
        const double quad =
            a * a *
            num::integrate_adaptive(
                [&](double v) {
                    return v * v * num::std_normal_pdf(v) *
                           num::std_normal_cdf(b * a * v);
                },
                -12.0, 0.0, 1e-13)
                .value;
        worst_psi = std::max(worst_psi, std::fabs(quad - qpsk::psi_kernel(a, b)) /
                                            std::max(1e-30, std::fabs(quad)));
    }
    checks.push_back(
        make_check("oracle/psi_kernel_sup", worst_psi, 0.0, 1e-8, "relative"));

    // Complex-noise second moment against a defining-integral route that
    // does not share the kernel decomposition: conditional Gaussian
    // moments averaged over the fading density.
    double worst_t2 = 0.0;
    for (double db : {0.0, 10.0, 20.0}) {
        for (double a : {0.55, 0.75, 0.95}) {
            for (auto rails : {std::pair{+1, +1}, {-1, -1}, {+1, -1}}) {
                const Scenario s = build_scenario(a, db, 1.0, 1.0);
                const auto q = qpsk::QuadrantLevels::make(s, rails.first, rails.second);
                const double ps = qpsk::success_prob_exact(s, q);
                auto m2_tail = [](double t) {
                    return num::std_normal_cdf(t) - t * num::std_normal_pdf(t);
                };
                const double quad =
                    s.sigma_n_sq() *
                    num::integrate_semi_infinite(
                        [&](double b) {
                            const double ti = b * q.chi_i, tj = b * q.chi_j;
                            return rayleigh_pdf(b, s.omega()) *
                                   (m2_tail(ti) * num::std_normal_cdf(tj) +
                                    num::std_normal_cdf(ti) * m2_tail(tj));
                        },
                        1e-11)
                        .value /
                    ps;
                const double closed = qpsk::second_moment_w(s, q, ps);
                worst_t2 = std::max(worst_t2, std::fabs(quad - closed) / quad);
            }
        }
    }
    checks.push_back(
        make_check("oracle/qpsk_second_moment_sup", worst_t2, 0.0, 1e-4, "relative"));
    return checks;
}

std::vector<std::string> known_issue_notes() {
    return {
        "known, handled: the published closed form for the success-branch outage "
        "is inconsistent with its own defining integral (it gives 0.847 where the "
        "integral gives 0.362 at alpha1=0.8, 10 dB, R=1); the re-derived form is "
        "used and is gated against quadrature.",
        "known, handled: the published residual-factor range endpoint '6.036' for "
        "alpha1=0.8, R=0.5 is a misprint of alpha2/(alpha1*(2^R-1)) = 0.6036.",
        "known, handled: the published half-line Gaussian kernel and the "
        "squared-tail average used by the QPSK success probability fail their "
        "defining integrals; re-derived forms are used (gated against quadrature), "
        "and the equal-rail success probability is exact.",
        "known, handled: the closed-form capacity approximation subtracts its "
        "second kernel term (the published rendering shows a sum); the sign "
        "follows from the tail-split of the success-branch density and is "
        "arbitrated by the normalized-error reproduction.",
    };
}

std::string checks_as_json_lines(const std::vector<Check>& checks) {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << "{\"check\":\"" << c.name << "\",\"status\":\""
           << (c.pass ? "pass" : "fail") << "\",\"value\":" << fmt(c.value, "%.10g")
           << ",\"target\":" << fmt(c.target, "%.10g")
           << ",\"tolerance\":" << fmt(c.tolerance, "%.10g");
        if (!c.detail.empty()) os << ",\"detail\":\"" << c.detail << "\"";
        os << "}\n";
    }
    return os.str();
}

}  // namespace noma::reports
