#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "noma/postsic_bpsk.hpp"
#include "noma/scenario.hpp"

// Parameter sweeps and the flat CSV / key-value surfaces consumed by the
// CLI. All emitted numbers use shortest round-trip formatting with '.'
// decimal separator, independent of locale, so identical inputs produce
// byte-identical output.

namespace noma {

/// Shortest round-trip decimal representation of v.
std::string format_double(double v);

/// Run parameters: a Scenario plus the sweep-facing extras. Mirrors the
/// flat key-value config schema (keys: alpha1, snr_db, omega, rate,
/// zeta, seed, samples).
struct RunParams {
    double alpha1 = 0.8;
    double snr_db = 10.0;
    double omega = 1.0;
    double rate = 1.0;
    double zeta = 0.0;
    std::uint64_t seed = 1;
    std::uint64_t samples = 10'000'000;

    Scenario scenario() const;
};

/// Parses `key = value` / `key=value` lines (# comments allowed).
/// Unknown keys are rejected so typos fail loudly.
RunParams parse_kv_config(std::istream& in, const RunParams& defaults = {});

/// Emits the flat key-value form; parse_kv_config(print) round-trips.
void print_kv_config(std::ostream& out, const RunParams& p);

enum class SweepAxis { snr_db, alpha1, zeta };

/// "start:step:stop" inclusive grid.
struct SweepGrid {
    double start = 0.0;
    double step = 1.0;
    double stop = 0.0;

    static SweepGrid parse(const std::string& text);
    std::vector<double> values() const;
};

/// One fixed-schema table: the independent variable first, then the
/// named columns, no missing cells.
struct SweepTable {
    std::string x_name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;  // each row: x followed by columns

    void write_csv(std::ostream& out) const;
};

struct McRequest {
    std::uint64_t samples = 10'000'000;
    std::uint64_t seed = 1;
};

/// Outage sweep: po_exact, po_legacy (at params.zeta) and, when
/// requested, po_mc / mc_stderr columns. For the zeta axis the grid is
/// clamped to the legacy validity range [0, alpha2/(alpha1 gamma_th)].
SweepTable op_sweep(const RunParams& params, SweepAxis axis,
                    const std::vector<double>& grid,
                    const std::optional<McRequest>& mc = std::nullopt);

/// Capacity sweep: ec_exact, ec_approx, ec_legacy (at params.zeta) and
/// optional ec_mc / mc_stderr.
SweepTable ec_sweep(const RunParams& params, SweepAxis axis,
                    const std::vector<double>& grid,
                    const std::optional<McRequest>& mc = std::nullopt);

/// Writes a sampled PDF curve as two-column CSV with a comment header
/// naming branch, variable and parameters.
void write_pdf_curve_csv(std::ostream& out, const bpsk::PdfCurve& curve,
                         const RunParams& params, const std::string& symbol);

const char* to_string(SweepAxis axis);
const char* to_string(bpsk::Branch branch);
const char* to_string(bpsk::Variable variable);

}  // namespace noma
