#pragma once

#include <string>
#include <vector>

#include "qillum/gaussian_core.hpp"

namespace qillum {

enum class BoundKind { chernoff_upper, bhattacharyya_upper, lower };

const char* to_string(BoundKind kind);

/// One asymptotic assumption behind a closed-form bound and whether the
/// scenario satisfies it.
struct ValidityFlag {
  std::string assumption;
  bool holds = false;
};

/// An error-probability bound of the form prefactor * exp(-M * exponent)
/// (upper bounds) or (1/2)(1 - sqrt(1 - exp(-M * exponent))) (lower bound).
struct BoundResult {
  BoundKind kind = BoundKind::chernoff_upper;
  double exponent = 0.0;   // per-copy error exponent
  double prefactor = 0.5;
  double p_e = 0.5;        // evaluated at the scenario's M
  std::vector<ValidityFlag> validity;

  /// Bound evaluated at an arbitrary (real) number of copies, clipped to [0, 1/2].
  double p_e_at(double m) const;
  bool assumptions_hold() const;
};

/// Two scalar Gaussian densities p0 = N(mean0, var0), p1 = N(mean1, var1).
struct ScalarGaussianPair {
  double mean0 = 0.0;
  double mean1 = 0.0;
  double var0 = 1.0;
  double var1 = 1.0;

  void validate() const;
};

/// log of the Chernoff coefficient, log int p0^s p1^(1-s) dR, in closed form.
double log_chernoff_coefficient(const ScalarGaussianPair& pair, double s);

struct ChernoffResult {
  double s_star = 0.5;
  double exponent = 0.0;
};

/// Minimises the Chernoff coefficient over s in [0, 1].
ChernoffResult chernoff_exponent_gaussian(const ScalarGaussianPair& pair);

/// -log int sqrt(p0 p1) dR.
double bhattacharyya_exponent_gaussian(const ScalarGaussianPair& pair);

/// Coherent-state (classical illumination) Chernoff bound, which coincides
/// with the Bhattacharyya bound. `approx_exponent` is the large-background form.
struct CsBound {
  BoundResult bound;
  double approx_exponent = 0.0;
  bool approximation_off = false;  // exact and approximate differ by > 5 %
};
CsBound cs_chernoff_bound(const IlluminationScenario& scenario);

/// Lower bound on the error probability of any classical transmitter.
struct ClassicalLowerBound {
  BoundResult bound;
  double large_m_p_e = 0.0;  // (1/4) exp(-M xi)
};
ClassicalLowerBound classical_lower_bound(const IlluminationScenario& scenario);

/// Small-signal, large-background quantum illumination upper bound.
BoundResult qi_upper_bound(const IlluminationScenario& scenario);

/// (1/2)(1 - sqrt(1 - exp(-M xi_QB))).
double quantum_lower_from_bhattacharyya(double xi_qb, double m);

/// Exact CS exponent kappa N_s (sqrt(N_B + 1) - sqrt(N_B))^2.
double cs_exponent(const IlluminationScenario& scenario);
/// kappa N_s / N_B.
double qi_exponent(const IlluminationScenario& scenario);

/// Validity thresholds: "<<" and ">>" mean one order of magnitude.
inline constexpr double kSmallSignalLimit = 0.1;
inline constexpr double kLargeBackgroundLimit = 10.0;
inline constexpr double kSmallTransmissivityLimit = 0.1;

}  // namespace qillum
