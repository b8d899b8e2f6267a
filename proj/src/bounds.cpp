#include "qillum/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qillum/optimize.hpp"

namespace qillum {

namespace {

double clip_half(double p) { return std::clamp(p, 0.0, 0.5); }

// (1/2)(1 - sqrt(1 - x)) written as (1/2) x / (1 + sqrt(1 - x)) so it keeps
// full relative precision for tiny x.
double half_one_minus_sqrt_one_minus(double x) {
  return 0.5 * x / (1.0 + std::sqrt(1.0 - x));
}

std::vector<ValidityFlag> small_signal_flags(const IlluminationScenario& s) {
  return {
      {"n_s << 1", s.n_s() < kSmallSignalLimit},
      {"n_b >> 1", s.n_b() > kLargeBackgroundLimit},
      {"kappa << 1", s.kappa() < kSmallTransmissivityLimit},
  };
}

}  // namespace

const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::chernoff_upper:
      return "chernoff_upper";
    case BoundKind::bhattacharyya_upper:
      return "bhattacharyya_upper";
    case BoundKind::lower:
      return "lower";
  }
  return "unknown";
}

double BoundResult::p_e_at(double m) const {
  const double x = std::exp(-m * exponent);
  if (kind == BoundKind::lower) {
    return clip_half(half_one_minus_sqrt_one_minus(x));
  }
  return clip_half(prefactor * x);
}

bool BoundResult::assumptions_hold() const {
  return std::all_of(validity.begin(), validity.end(), [](const ValidityFlag& f) { return f.holds; });
}

void ScalarGaussianPair::validate() const {
  if (!(var0 > 0.0) || !(var1 > 0.0)) {
    throw std::invalid_argument("ScalarGaussianPair: variances must be positive");
  }
  if (!std::isfinite(mean0) || !std::isfinite(mean1) || !std::isfinite(var0) || !std::isfinite(var1)) {
    throw std::invalid_argument("ScalarGaussianPair: parameters must be finite");
  }
}

double log_chernoff_coefficient(const ScalarGaussianPair& pair, double s) {
  pair.validate();
  if (s < 0.0 || s > 1.0) throw std::domain_error("Chernoff parameter s must lie in [0, 1]");
  const double dm = pair.mean1 - pair.mean0;
  const double mixed = s * pair.var1 + (1.0 - s) * pair.var0;
  const double shift = -0.5 * s * (1.0 - s) * dm * dm / mixed;
  const double spread =
      -0.5 * (std::log(mixed) - (1.0 - s) * std::log(pair.var0) - s * std::log(pair.var1));
  return shift + spread;
}

ChernoffResult chernoff_exponent_gaussian(const ScalarGaussianPair& pair) {
  pair.validate();
  const auto best =
      golden_section_minimize([&](double s) { return log_chernoff_coefficient(pair, s); }, 0.0, 1.0);
  return {best.x, std::max(0.0, -best.value)};
}

double bhattacharyya_exponent_gaussian(const ScalarGaussianPair& pair) {
  return std::max(0.0, -log_chernoff_coefficient(pair, 0.5));
}

double cs_exponent(const IlluminationScenario& scenario) {
  // (sqrt(n+1) - sqrt(n))^2 = 1 / (sqrt(n+1) + sqrt(n))^2
  const double root_sum = std::sqrt(scenario.n_b() + 1.0) + std::sqrt(scenario.n_b());
  return scenario.kappa() * scenario.n_s() / (root_sum * root_sum);
}

double qi_exponent(const IlluminationScenario& scenario) {
  if (!(scenario.n_b() > 0.0)) throw std::domain_error("qi_exponent: n_b must be positive");
  return scenario.kappa() * scenario.n_s() / scenario.n_b();
}

CsBound cs_chernoff_bound(const IlluminationScenario& scenario) {
  CsBound out;
  out.bound.kind = BoundKind::chernoff_upper;
  out.bound.exponent = cs_exponent(scenario);
  out.bound.prefactor = 0.5;
  out.bound.p_e = out.bound.p_e_at(static_cast<double>(scenario.m()));
  out.bound.validity = {{"n_b >> 1", scenario.n_b() > kLargeBackgroundLimit}};
  out.approx_exponent = scenario.kappa() * scenario.n_s() / (4.0 * scenario.n_b());
  if (out.bound.exponent > 0.0) {
    out.approximation_off = std::abs(out.approx_exponent - out.bound.exponent) > 0.05 * out.bound.exponent;
  }
  return out;
}

ClassicalLowerBound classical_lower_bound(const IlluminationScenario& scenario) {
  ClassicalLowerBound out;
  out.bound.kind = BoundKind::lower;
  out.bound.exponent = cs_exponent(scenario);
  out.bound.prefactor = 0.25;
  const auto m = static_cast<double>(scenario.m());
  out.bound.p_e = out.bound.p_e_at(m);
  out.bound.validity = {{"n_b >> 1", scenario.n_b() > kLargeBackgroundLimit}};
  out.large_m_p_e = 0.25 * std::exp(-m * out.bound.exponent);
  return out;
}

BoundResult qi_upper_bound(const IlluminationScenario& scenario) {
  BoundResult out;
  out.kind = BoundKind::chernoff_upper;
  out.exponent = qi_exponent(scenario);
  out.prefactor = 0.5;
  out.p_e = out.p_e_at(static_cast<double>(scenario.m()));
  out.validity = small_signal_flags(scenario);
  return out;
}

double quantum_lower_from_bhattacharyya(double xi_qb, double m) {
  if (!(xi_qb >= 0.0)) throw std::domain_error("xi_qb must be non-negative");
  if (!(m >= 0.0)) throw std::domain_error("number of copies must be non-negative");
  return half_one_minus_sqrt_one_minus(std::exp(-m * xi_qb));
}

}  // namespace qillum
