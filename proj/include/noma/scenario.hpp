#pragma once

#include <array>
#include <cmath>
#include <optional>

// System parameters and the superposed constellation geometry. A Scenario
// is the single source of every derived symbol (noise power, linear SNR,
// outage threshold) used by the analysis. Immutable value types,
// freely shareable across threads.

namespace noma {

class Scenario {
  public:
    /// alpha1 in (0.5, 1): far-user power fraction; the near user gets
    /// 1 - alpha1. gamma_bar is the average SNR in linear units.
    Scenario(double alpha1, double gamma_bar, double omega, double rate);

    double alpha1() const { return alpha1_; }
    double alpha2() const { return 1.0 - alpha1_; }
    double omega() const { return omega_; }
    double gamma_bar() const { return gamma_bar_; }
    double rate() const { return rate_; }

    double sigma_n_sq() const { return omega_ / gamma_bar_; }
    double sigma_n() const { return std::sqrt(omega_ / gamma_bar_); }
    double gamma_th() const { return std::exp2(rate_) - 1.0; }

  private:
    double alpha1_;
    double omega_;
    double gamma_bar_;
    double rate_;
};

/// Builds a Scenario from an SNR given in dB. The dB -> linear conversion
/// happens here and nowhere else. Throws std::invalid_argument naming the
/// offending field on an invariant violation.
Scenario build_scenario(double alpha1, double gamma_bar_db, double omega = 1.0,
                        double rate = 1.0);

/// One superposed BPSK symbol X_ij = (2i-1) sqrt(alpha1) + (2j-1) sqrt(alpha2),
/// i the far-user bit, j the near-user bit. All four symbols equiprobable.
struct ConstellationPoint {
    int i = 0;
    int j = 0;
    double value = 0.0;
    double prob = 0.25;
};

/// The four superposed symbols {X00, X01, X10, X11}, in (i,j) index order.
/// X11 = -X00 and X10 = -X01; |X11| > |X10| > 0 for alpha1 > 0.5.
std::array<ConstellationPoint, 4> bpsk_constellation(const Scenario& s);

/// Rayleigh fading density f_beta(b) = (2b/omega) exp(-b^2/omega), b >= 0.
double rayleigh_pdf(double beta, double omega);

/// Conventional residual-interference model: zeta = eta^2 scales the
/// leaked far-user power. Sweeps use zeta directly and may exceed 1.
struct LegacyModel {
    double zeta = 0.0;

    static LegacyModel from_eta(double eta);

    /// Amplitude factor, defined only while zeta <= 1.
    std::optional<double> eta() const;
};

}  // namespace noma
