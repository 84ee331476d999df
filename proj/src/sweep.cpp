#include "noma/sweep.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "noma/capacity.hpp"
#include "noma/montecarlo.hpp"
#include "noma/outage.hpp"

namespace noma {

std::string format_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

Scenario RunParams::scenario() const {
    return build_scenario(alpha1, snr_db, omega, rate);
}

RunParams parse_kv_config(std::istream& in, const RunParams& defaults) {
    RunParams p = defaults;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": expected key=value");
            continue;
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const bool known = key == "alpha1" || key == "snr_db" || key == "omega" ||
                           key == "rate" || key == "zeta" || key == "seed" ||
                           key == "samples";
        if (!known)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        try {
            if (key == "alpha1")
                p.alpha1 = std::stod(value);
            else if (key == "snr_db")
                p.snr_db = std::stod(value);
            else if (key == "omega")
                p.omega = std::stod(value);
            else if (key == "rate")
                p.rate = std::stod(value);
            else if (key == "zeta")
                p.zeta = std::stod(value);
            else if (key == "seed")
                p.seed = std::stoull(value);
            else
                p.samples = std::stoull(value);
        } catch (const std::exception&) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": bad value '" + key + "=" + value + "'");
        }
    }
    return p;
}

void print_kv_config(std::ostream& out, const RunParams& p) {
    out << "alpha1=" << format_double(p.alpha1) << '\n'
        << "snr_db=" << format_double(p.snr_db) << '\n'
        << "omega=" << format_double(p.omega) << '\n'
        << "rate=" << format_double(p.rate) << '\n'
        << "zeta=" << format_double(p.zeta) << '\n'
        << "seed=" << p.seed << '\n'
        << "samples=" << p.samples << '\n';
}

SweepGrid SweepGrid::parse(const std::string& text) {
    SweepGrid g;
    std::istringstream is(text);
    char c1 = 0, c2 = 0;
    if (!(is >> g.start >> c1 >> g.step >> c2 >> g.stop) || c1 != ':' || c2 != ':')
        throw std::invalid_argument("grid: expected start:step:stop, got '" + text +
                                    "'");
    if (!(g.step > 0.0)) throw std::invalid_argument("grid: step must be positive");
    if (g.stop < g.start) throw std::invalid_argument("grid: stop < start");
    return g;
}

std::vector<double> SweepGrid::values() const {
    std::vector<double> v;
    const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    v.reserve(n + 1);
    for (long k = 0; k <= n; ++k) v.push_back(start + step * k);
    return v;
}

void SweepTable::write_csv(std::ostream& out) const {
    out << x_name;
    for (const auto& c : columns) out << ',' << c;
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) out << ',';
            out << format_double(row[k]);
        }
        out << '\n';
    }
}

namespace {

RunParams at_axis_value(const RunParams& base, SweepAxis axis, double v) {
    RunParams p = base;
    switch (axis) {
        case SweepAxis::snr_db: p.snr_db = v; break;
        case SweepAxis::alpha1: p.alpha1 = v; break;
        case SweepAxis::zeta: p.zeta = v; break;
    }
    return p;
}

}  // namespace

SweepTable op_sweep(const RunParams& params, SweepAxis axis,
                    const std::vector<double>& grid,
                    const std::optional<McRequest>& mc) {
    SweepTable t;
    t.x_name = to_string(axis);
    t.columns = {"po_exact", "po_legacy"};
    if (mc) {
        t.columns.push_back("po_mc");
        t.columns.push_back("mc_stderr");
    }
    for (double v : grid) {
        const RunParams p = at_axis_value(params, axis, v);
        const Scenario s = p.scenario();
        if (axis == SweepAxis::zeta && v > bpsk::legacy_zeta_upper_bound(s)) break;
        std::vector<double> row{v, bpsk::outage_total(s),
                                bpsk::legacy_outage(s, LegacyModel{p.zeta})};
        if (mc) {
            mc::McConfig cfg;
            cfg.samples = mc->samples;
            cfg.seed = mc->seed;
            const auto est = mc::simulate_bpsk_outage(s, cfg);
            row.push_back(est.mean);
            row.push_back(est.stderror);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

SweepTable ec_sweep(const RunParams& params, SweepAxis axis,
                    const std::vector<double>& grid,
                    const std::optional<McRequest>& mc) {
    SweepTable t;
    t.x_name = to_string(axis);
    t.columns = {"ec_exact", "ec_approx", "ec_legacy"};
    if (mc) {
        t.columns.push_back("ec_mc");
        t.columns.push_back("mc_stderr");
    }
    for (double v : grid) {
        const RunParams p = at_axis_value(params, axis, v);
        const Scenario s = p.scenario();
        std::vector<double> row{v, bpsk::ec_total_exact(s),
                                bpsk::ec_closed_form_approx(s),
                                bpsk::legacy_ec(s, LegacyModel{p.zeta})};
        if (mc) {
            mc::McConfig cfg;
            cfg.samples = mc->samples;
            cfg.seed = mc->seed;
            const auto est = mc::simulate_bpsk_ec(s, cfg);
            row.push_back(est.mean);
            row.push_back(est.stderror);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

void write_pdf_curve_csv(std::ostream& out, const bpsk::PdfCurve& curve,
                         const RunParams& params, const std::string& symbol) {
    out << "# branch=" << to_string(curve.branch)
        << " variable=" << to_string(curve.variable) << " symbol=" << symbol
        << " alpha1=" << format_double(params.alpha1)
        << " snr_db=" << format_double(params.snr_db)
        << " omega=" << format_double(params.omega)
        << " rate=" << format_double(params.rate) << '\n';
    out << "abscissa,density\n";
    for (std::size_t k = 0; k < curve.grid.size(); ++k)
        out << format_double(curve.grid[k]) << ',' << format_double(curve.density[k])
            << '\n';
}

const char* to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::snr_db: return "snr_db";
        case SweepAxis::alpha1: return "alpha1";
        case SweepAxis::zeta: return "zeta";
    }
    return "?";
}

const char* to_string(bpsk::Branch branch) {
    switch (branch) {
        case bpsk::Branch::success: return "success";
        case bpsk::Branch::failure: return "failure";
        case bpsk::Branch::unconditional: return "unconditional";
    }
    return "?";
}

const char* to_string(bpsk::Variable variable) {
    return variable == bpsk::Variable::fading ? "fading" : "noise";
}

}  // namespace noma
