#pragma once

#include <cstdint>

#include "qillum/bounds.hpp"
#include "qillum/gaussian_core.hpp"

namespace qillum {

enum class Hypothesis { absent = 0, present = 1 };

// ---------------------------------------------------------------------------
// Coherent-state transmitter with homodyne detection of the return mode.
// ---------------------------------------------------------------------------

struct HomodyneModel {
  double mean_absent = 0.0;   // per-mode quadrature mean under H0
  double mean_present = 0.0;  // 2 sqrt(kappa N_s)
  double variance = 1.0;      // 2 N_B + 1
  std::uint64_t m = 0;
  double w0 = 0.5;
  double w1 = 0.5;

  static HomodyneModel from(const IlluminationScenario& scenario);

  /// Bayes threshold on the summed quadrature Q = q_1 + ... + q_M. Reduces
  /// to M sqrt(kappa N_s) for equal priors.
  double threshold() const;
};

struct HomodyneError {
  double p_e = 0.5;            // exact, (1/2) erfc(sqrt(kappa N_s M / (4 N_B + 2))) at equal priors
  double exponent = 0.0;       // xi_hom = kappa N_s / (4 N_B + 2)
  double asymptotic_p_e = 0.5; // exp(-M xi) / (2 sqrt(pi M xi))
};

HomodyneError homodyne_error_probability(const HomodyneModel& model);

// ---------------------------------------------------------------------------
// Optical parametric amplifier receiver: amplify (return, idler) with gain
// G = 1 + eps^2 and count photons in the amplified idler.
// ---------------------------------------------------------------------------

struct OpaModel {
  double gain = 1.0;
  double n0 = 0.0;        // mean photons per mode, H0
  double n1 = 0.0;        // mean photons per mode, H1
  double delta_n = 0.0;   // n1 - n0, computed without cancellation
  double var0 = 0.0;      // n0 (n0 + 1)
  double var1 = 0.0;
  std::uint64_t m = 0;
  double threshold = 0.0; // on the total count; decide H1 only above it
  // Scenario snapshot for the closed-form exponent.
  double n_s = 0.0;
  double n_b = 0.0;
  double kappa = 0.0;
  // Priors only drive the per-trial hypothesis draw; the threshold is the
  // equal-prior Gaussian-approximation value.
  double w0 = 0.5;
  double w1 = 0.5;

  double mean_per_mode(Hypothesis h) const { return h == Hypothesis::absent ? n0 : n1; }
};

/// Throws std::domain_error for gain < 1.
OpaModel opa_model(const IlluminationScenario& scenario, double gain);

/// G = 1 + N_s / sqrt(N_B), the low-gain rule of thumb.
double rule_of_thumb_opa_gain(const IlluminationScenario& scenario);

/// Gain maximising the exact per-copy Bhattacharyya exponent -log Q_B.
double optimal_opa_gain(const IlluminationScenario& scenario);

/// Negative-binomial pmf of the total count n over M modes with per-mode
/// thermal mean N, evaluated in log space.
double opa_count_log_pmf(double mean_per_mode, std::uint64_t m, std::uint64_t n);
double opa_count_pmf(double mean_per_mode, std::uint64_t m, std::uint64_t n);
double opa_count_pmf(const OpaModel& model, Hypothesis h, std::uint64_t n);

struct OpaBound {
  BoundResult bound;          // (1/2) Q_B^M, exponent -log Q_B
  double q_b = 1.0;
  double xi_b = 0.0;          // low-gain closed form
  double xi_b_ceiling = 0.0;  // kappa N_s / (2 N_B)
};

OpaBound opa_error_bound(const OpaModel& model);

/// Low-gain closed form of the OPA Bhattacharyya exponent as a function of eps^2.
double opa_xi_b(double eps2, double n_s, double n_b, double kappa);

// ---------------------------------------------------------------------------
// FF-SFG receiver, approximated by discriminating the vacuum from the
// coherent state |sqrt(snr)>.
// ---------------------------------------------------------------------------

class FfsfgModel {
 public:
  explicit FfsfgModel(double snr);
  static FfsfgModel from(const IlluminationScenario& scenario);

  double snr() const { return snr_; }
  /// 1 - |<0|sqrt(snr)>|^2 = 1 - exp(-snr).
  double h() const;
  /// |<0|sqrt(snr)>| = exp(-snr / 2).
  double overlap() const;

 private:
  double snr_;
};

}  // namespace qillum
