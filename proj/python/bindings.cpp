// Python bindings for the core analysis: scenario construction, the
// post-SIC conditional statistics, outage/capacity closed forms, the
// QPSK success-branch kernels, and the link simulator.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "noma/capacity.hpp"
#include "noma/montecarlo.hpp"
#include "noma/numerics.hpp"
#include "noma/outage.hpp"
#include "noma/postsic_bpsk.hpp"
#include "noma/postsic_qpsk.hpp"
#include "noma/scenario.hpp"
#include "noma/sweep.hpp"

namespace py = pybind11;
using namespace noma;

namespace {

py::dict estimate_dict(const mc::McEstimate& e) {
    py::dict d;
    d["mean"] = e.mean;
    d["stderr"] = e.stderror;
    d["n"] = e.n;
    return d;
}

mc::McConfig config_from(std::uint64_t samples, std::uint64_t seed, int threads) {
    mc::McConfig cfg;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.threads = threads;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_nomasic, m) {
    m.doc() =
        "Exact near-user outage and ergodic capacity for two-user downlink "
        "NOMA with hard-decision SIC over Rayleigh fading";

    py::class_<Scenario>(m, "Scenario")
        .def_property_readonly("alpha1", &Scenario::alpha1)
        .def_property_readonly("alpha2", &Scenario::alpha2)
        .def_property_readonly("omega", &Scenario::omega)
        .def_property_readonly("gamma_bar", &Scenario::gamma_bar)
        .def_property_readonly("rate", &Scenario::rate)
        .def_property_readonly("sigma_n_sq", &Scenario::sigma_n_sq)
        .def_property_readonly("gamma_th", &Scenario::gamma_th)
        .def("__repr__", [](const Scenario& s) {
            return "Scenario(alpha1=" + format_double(s.alpha1()) +
                   ", gamma_bar=" + format_double(s.gamma_bar()) +
                   ", omega=" + format_double(s.omega()) +
                   ", rate=" + format_double(s.rate()) + ")";
        });

    m.def("build_scenario", &build_scenario, py::arg("alpha1"), py::arg("snr_db"),
          py::arg("omega") = 1.0, py::arg("rate") = 1.0,
          "Scenario from an SNR in dB; alpha1 must lie in (0.5, 1)");

    py::class_<ConstellationPoint>(m, "ConstellationPoint")
        .def_readonly("i", &ConstellationPoint::i)
        .def_readonly("j", &ConstellationPoint::j)
        .def_readonly("value", &ConstellationPoint::value)
        .def_readonly("prob", &ConstellationPoint::prob)
        .def("__repr__", [](const ConstellationPoint& p) {
            return "X" + std::to_string(p.i) + std::to_string(p.j) + "=" +
                   format_double(p.value);
        });

    m.def("bpsk_constellation", [](const Scenario& s) {
        const auto pts = bpsk_constellation(s);
        return std::vector<ConstellationPoint>(pts.begin(), pts.end());
    });
    m.def("rayleigh_pdf", &rayleigh_pdf, py::arg("beta"), py::arg("omega"));

    py::class_<LegacyModel>(m, "LegacyModel")
        .def(py::init([](double zeta) { return LegacyModel{zeta}; }),
             py::arg("zeta"))
        .def_static("from_eta", &LegacyModel::from_eta, py::arg("eta"))
        .def_readonly("zeta", &LegacyModel::zeta)
        .def_property_readonly("eta",
                               [](const LegacyModel& mdl) { return mdl.eta(); });

    // Special functions.
    m.def("std_normal_cdf", &num::std_normal_cdf);
    m.def("q_function", &num::q_function);
    m.def("erf", &num::erf);
    m.def("exp_integral_e1", &num::exp_integral_e1);
    m.def("chiani_q_approx", &num::chiani_q_approx);

    // Post-SIC conditional statistics (BPSK).
    m.def("sic_success_prob", &bpsk::sic_success_prob);
    m.def("sic_failure_prob", &bpsk::sic_failure_prob);
    m.def("pdf_beta_success", &bpsk::pdf_beta_success);
    m.def("pdf_beta_failure", &bpsk::pdf_beta_failure);
    m.def("pdf_noise_success", &bpsk::pdf_noise_success);
    m.def("pdf_noise_failure", &bpsk::pdf_noise_failure);
    m.def("second_moment_w", &bpsk::second_moment_w);
    m.def("second_moment_z", &bpsk::second_moment_z);

    // Outage and capacity.
    m.def("outage_given_success", &bpsk::outage_given_success);
    m.def("outage_given_failure", &bpsk::outage_given_failure);
    m.def("outage_total", &bpsk::outage_total);
    m.def("legacy_outage", &bpsk::legacy_outage);
    m.def("legacy_zeta_upper_bound", &bpsk::legacy_zeta_upper_bound);
    m.def("ec_given_success_exact", &bpsk::ec_given_success_exact);
    m.def("ec_given_failure_exact", &bpsk::ec_given_failure_exact);
    m.def("ec_total_exact", &bpsk::ec_total_exact);
    m.def("ec_closed_form_approx", &bpsk::ec_closed_form_approx);
    m.def("legacy_ec", &bpsk::legacy_ec);
    m.def("normalized_error_percent", &bpsk::normalized_error_percent);

    // QPSK success branch.
    py::class_<qpsk::QuadrantLevels>(m, "QuadrantLevels")
        .def_readonly("lambda_i", &qpsk::QuadrantLevels::lambda_i)
        .def_readonly("lambda_j", &qpsk::QuadrantLevels::lambda_j)
        .def_readonly("mu_i", &qpsk::QuadrantLevels::mu_i)
        .def_readonly("mu_j", &qpsk::QuadrantLevels::mu_j);
    m.def(
        "quadrant_levels",
        [](const Scenario& s, int sign_i, int sign_j) {
            return qpsk::QuadrantLevels::make(s, sign_i, sign_j);
        },
        py::arg("scenario"), py::arg("sign_i"), py::arg("sign_j"));
    m.def("qpsk_success_prob", &qpsk::success_prob);
    m.def("qpsk_success_prob_exact", &qpsk::success_prob_exact);
    m.def("psi_kernel", &qpsk::psi_kernel);
    m.def("qpsk_second_moment_w",
          py::overload_cast<const Scenario&, const qpsk::QuadrantLevels&>(
              &qpsk::second_moment_w));
    m.def("qpsk_outage_given_success", &qpsk::outage_given_success);

    // Link simulator.
    m.def(
        "simulate_bpsk_outage",
        [](const Scenario& s, std::uint64_t samples, std::uint64_t seed,
           int threads) {
            return estimate_dict(
                mc::simulate_bpsk_outage(s, config_from(samples, seed, threads)));
        },
        py::arg("scenario"), py::arg("samples") = 1'000'000, py::arg("seed") = 1,
        py::arg("threads") = 0);
    m.def(
        "simulate_bpsk_ec",
        [](const Scenario& s, std::uint64_t samples, std::uint64_t seed,
           int threads) {
            return estimate_dict(
                mc::simulate_bpsk_ec(s, config_from(samples, seed, threads)));
        },
        py::arg("scenario"), py::arg("samples") = 1'000'000, py::arg("seed") = 1,
        py::arg("threads") = 0);
    m.def(
        "simulate_qpsk_success_stats",
        [](const Scenario& s, const qpsk::QuadrantLevels& q, std::uint64_t samples,
           std::uint64_t seed, int threads) {
            const auto st = mc::simulate_qpsk_success_stats(
                s, q, config_from(samples, seed, threads));
            py::dict d;
            d["p_success"] = estimate_dict(st.p_success);
            d["m2_w"] = estimate_dict(st.m2_w);
            d["var_w"] = estimate_dict(st.var_w);
            return d;
        },
        py::arg("scenario"), py::arg("levels"), py::arg("samples") = 1'000'000,
        py::arg("seed") = 1, py::arg("threads") = 0);

    // Sweeps.
    m.def(
        "op_sweep",
        [](const Scenario& s, const std::string& axis, double start, double step,
           double stop, double zeta) {
            RunParams p;
            p.alpha1 = s.alpha1();
            p.snr_db = 10.0 * std::log10(s.gamma_bar());
            p.omega = s.omega();
            p.rate = s.rate();
            p.zeta = zeta;
            const SweepAxis ax = axis == "snr"      ? SweepAxis::snr_db
                                 : axis == "alpha1" ? SweepAxis::alpha1
                                                    : SweepAxis::zeta;
            const auto t = op_sweep(p, ax, SweepGrid{start, step, stop}.values());
            py::dict d;
            d["x_name"] = t.x_name;
            d["columns"] = t.columns;
            d["rows"] = t.rows;
            return d;
        },
        py::arg("scenario"), py::arg("axis"), py::arg("start"), py::arg("step"),
        py::arg("stop"), py::arg("zeta") = 0.0);

    m.attr("__version__") = "0.1.0";
}
