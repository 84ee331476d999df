#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Reference-table reproduction and the invariant/validation suites.
// Shared by the CLI `reproduce`/`validate` commands and the acceptance
// test binary: every check carries its own name, value, target and
// tolerance so callers can render or gate on it.

namespace noma::reports {

struct Check {
    std::string name;
    bool pass = false;
    double value = 0.0;
    double target = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

inline bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

/// Normalized-error comparison of the closed-form capacity approximation
/// and the zero-residual legacy formula against the exact capacity, over
/// SNR 0..30 dB (1 dB steps) for eight power allocations.
struct Table3Report {
    std::vector<double> alpha1;                    // 8 columns
    std::vector<std::vector<double>> appr_minmaxavg;  // per column: {min,max,avg} %
    std::vector<std::vector<double>> legacy_minmaxavg;
    std::vector<Check> checks;

    std::string render() const;
};
Table3Report reproduce_table3();

/// Success-branch complex-noise power for the four rail pairs of the
/// top-right quadrant at 0/10/20 dB: closed-form theory (per-component
/// decomposition doubled, as the reference table tabulates it), the
/// variance by quadrature, and the artifact's own simulation. The power
/// allocation is not part of the reference table, so it is fitted from
/// a candidate set and reported.
struct Table2Report {
    double best_alpha1 = 0.0;
    std::vector<double> fit_alphas;
    std::vector<double> fit_deviation;  // mean relative deviation per candidate
    // cells[snr][rail]: snr in {0,10,20} dB order, rails in order
    // (+,+), (-,-), (+,-), (-,+).
    double two_sigma_sq[3] = {};
    double theory[3][4] = {};
    double variance[3][4] = {};
    double mc_mean[3][4] = {};
    double mc_stderr[3][4] = {};
    std::vector<Check> checks;

    std::string render() const;
};
Table2Report reproduce_table2(std::uint64_t samples, std::uint64_t seed);

/// Qualitative figure-level gates: the outage-vs-alpha1 interior minima,
/// the legacy zeta range endpoint, and the legacy/exact capacity
/// crossing under a small residual factor.
std::vector<Check> figure_gates();

/// Monte Carlo agreement of the analytic outage and capacity with the
/// link simulator at the given sample count, over spot scenarios that
/// cover both the saturated and unsaturated failure-branch regimes.
std::vector<Check> mc_agreement_checks(std::uint64_t samples, std::uint64_t seed);

/// Analytic identity suite (mixture/moment identities at machine
/// precision over randomized scenarios) plus closed-form-vs-quadrature
/// cross checks on a parameter grid.
std::vector<Check> identity_checks(int scenarios, std::uint64_t seed);
std::vector<Check> closed_form_vs_quadrature_checks();

/// Known upstream inconsistencies that the implementation documents and
/// arbitrates by quadrature; reported as fixed content.
std::vector<std::string> known_issue_notes();

/// Renders checks as JSON lines (one object per check).
std::string checks_as_json_lines(const std::vector<Check>& checks);

}  // namespace noma::reports
