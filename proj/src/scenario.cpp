#include "noma/scenario.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace noma {

namespace {

[[noreturn]] void reject(const char* field, const char* constraint, double got) {
    std::ostringstream os;
    os << field << ": " << constraint << " (got " << got << ")";
    throw std::invalid_argument(os.str());
}

}  // namespace

Scenario::Scenario(double alpha1, double gamma_bar, double omega, double rate)
    : alpha1_(alpha1), omega_(omega), gamma_bar_(gamma_bar), rate_(rate) {
    if (!(alpha1 > 0.5) || !(alpha1 < 1.0))
        reject("alpha1", "must satisfy 0.5 < alpha1 < 1", alpha1);
    if (!(gamma_bar > 0.0) || !std::isfinite(gamma_bar))
        reject("gamma_bar", "must be positive and finite", gamma_bar);
    if (!(omega > 0.0) || !std::isfinite(omega))
        reject("omega", "must be positive and finite", omega);
    if (!(rate > 0.0) || !std::isfinite(rate))
        reject("rate", "must be positive and finite", rate);
}

Scenario build_scenario(double alpha1, double gamma_bar_db, double omega,
                        double rate) {
    if (!std::isfinite(gamma_bar_db))
        reject("snr_db", "must be finite", gamma_bar_db);
    return Scenario(alpha1, std::pow(10.0, gamma_bar_db / 10.0), omega, rate);
}

std::array<ConstellationPoint, 4> bpsk_constellation(const Scenario& s) {
    const double a1 = std::sqrt(s.alpha1());
    const double a2 = std::sqrt(s.alpha2());
    std::array<ConstellationPoint, 4> pts;
    int k = 0;
    for (int i = 0; i <= 1; ++i) {
        for (int j = 0; j <= 1; ++j) {
            const double bi = 2.0 * i - 1.0;
            const double bj = 2.0 * j - 1.0;
            pts[k++] = ConstellationPoint{i, j, bi * a1 + bj * a2, 0.25};
        }
    }
    return pts;
}

double rayleigh_pdf(double beta, double omega) {
    if (beta < 0.0) return 0.0;
    return (2.0 * beta / omega) * std::exp(-beta * beta / omega);
}

LegacyModel LegacyModel::from_eta(double eta) {
    if (!(eta >= 0.0) || !(eta <= 1.0))
        throw std::invalid_argument("eta: must be in [0,1]");
    return LegacyModel{eta * eta};
}

std::optional<double> LegacyModel::eta() const {
    if (zeta < 0.0 || zeta > 1.0) return std::nullopt;
    return std::sqrt(zeta);
}

}  // namespace noma
