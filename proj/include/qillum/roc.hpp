#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qillum/gaussian_core.hpp"
#include "qillum/receivers.hpp"

namespace qillum {

enum class RocGenerator { ci_homodyne, qi_opa, qi_ffsfg };

const char* to_string(RocGenerator g);

struct RocPoint {
  double p_f = 0.0;
  double p_d = 0.0;
};

struct RocCurve {
  std::vector<RocPoint> points;  // p_f strictly increasing
  RocGenerator generator = RocGenerator::ci_homodyne;
  std::optional<IlluminationScenario> params;
  bool degenerate = false;   // identical hypotheses, p_d == p_f
  bool clt_warning = false;  // Gaussian approximation used below the CLT gate

  /// Linear interpolation in (log p_f, p_d); clamps outside the sampled range.
  double p_d_at(double p_f) const;

  /// p_f strictly increasing, p_d non-decreasing and p_d >= p_f - slack.
  bool satisfies_invariants(double slack = 1e-9) const;
};

inline constexpr int kRocGridPoints = 512;
inline constexpr double kRocGridMin = 1e-7;
inline constexpr std::uint64_t kDefaultCltGate = 1000;

/// 512 false-alarm probabilities, log-spaced over [1e-7, 1 - 1e-7].
std::vector<double> roc_pf_grid(int points = kRocGridPoints);

/// Separation d = 2 sqrt(M kappa N_s) / sqrt(2 N_B + 1).
double ci_separation(const IlluminationScenario& scenario);

/// Operating point of the equal-variance Gaussian likelihood test at
/// threshold log(lambda). Requires d > 0.
RocPoint ci_operating_point(double d, double log_lambda);

/// p_d of the equal-variance test at false-alarm p_f: Q(Q^-1(p_f) - d).
double ci_detection_probability(double d, double p_f);

RocCurve roc_ci_homodyne(const IlluminationScenario& scenario);

/// Threshold sweep on the Gaussian (CLT) form of the total-count statistic.
/// Each grid p_f fixes a threshold t; p_d follows from the H1 Gaussian.
RocCurve roc_opa(const OpaModel& model, std::uint64_t clt_gate = kDefaultCltGate);

/// Pure-state ROC between states with 1 - |<psi0|psi1>|^2 = h.
double pure_state_detection_probability(double h, double p_f);
RocCurve roc_pure_state(double h);

struct NpEigensystem {
  double eta1 = 0.0;  // positive eigenvalue
  double eta0 = 0.0;  // negative eigenvalue
  double p_f = 0.0;
  double p_d = 0.0;
};

/// Eigen-decomposition of |psi1><psi1| - lambda |psi0><psi0| and the resulting
/// operating point. Throws std::domain_error unless 0 < h < 1 and lambda >= 0.
NpEigensystem np_eigensystem(double h, double lambda);

enum class SnrCurve { ci_homodyne, qi_ffsfg };

/// Detection probability at fixed false-alarm probability as a function of
/// SNR = M kappa N_s / N_B (linear, not dB).
double pd_at_snr(SnrCurve curve, double p_f, double snr);
std::vector<double> pd_vs_snr(SnrCurve curve, double p_f, std::span<const double> snr_grid);

/// Smallest SNR reaching p_d_target at false-alarm p_f (bisection).
/// Throws std::range_error if the target is unreachable below snr_max.
double snr_for_detection(SnrCurve curve, double p_f, double p_d_target, double snr_max = 1e6);

/// 10 log10(SNR_CI / SNR_QI) needed to reach p_d_target at false-alarm p_f.
double advantage_db(double p_f, double p_d_target);

}  // namespace qillum
