#include "qillum/feasibility.hpp"

#include <cmath>
#include <stdexcept>

#include "qillum/constants.hpp"

namespace qillum {

void FeasibilityParams::validate() const {
  if (!(signal_frequency_hz > 0.0)) throw std::domain_error("signal frequency must be positive");
  if (!(bandwidth_hz > 0.0)) throw std::domain_error("bandwidth must be positive");
  if (!(pulse_duration_s > 0.0)) throw std::domain_error("pulse duration must be positive");
  if (!(n_s >= 0.0)) throw std::domain_error("n_s must be non-negative");
  if (!(kappa_i > 0.0 && kappa_i <= 1.0)) throw std::domain_error("kappa_i must lie in (0, 1]");
  if (!(kappa_m > 0.0 && kappa_m <= 1.0)) throw std::domain_error("kappa_m must lie in (0, 1]");
}

double time_bandwidth(const FeasibilityParams& params) {
  if (!(params.pulse_duration_s > 0.0) || !(params.bandwidth_hz > 0.0)) {
    throw std::domain_error("time_bandwidth: T and W must be positive");
  }
  return params.pulse_duration_s * params.bandwidth_hz;
}

double pulse_duration_for(double modes, double bandwidth_hz) {
  if (!(modes > 0.0) || !(bandwidth_hz > 0.0)) {
    throw std::domain_error("pulse_duration_for: modes and bandwidth must be positive");
  }
  return modes / bandwidth_hz;
}

double pulse_power(const FeasibilityParams& params) {
  params.validate();
  const double omega = 2.0 * constants::pi * params.signal_frequency_hz;
  return constants::reduced_planck * omega * params.n_s * params.bandwidth_hz;
}

double pulse_power_frequency_as_omega(const FeasibilityParams& params) {
  params.validate();
  return constants::reduced_planck * params.signal_frequency_hz * params.n_s * params.bandwidth_hz;
}

double power_ratio_to_mw_db(double power_w) {
  if (!(power_w > 0.0)) throw std::domain_error("power must be positive");
  return 10.0 * std::log10(power_w / 1e-3);
}

double orders_below(double power_w, double reference_w) {
  if (!(power_w > 0.0) || !(reference_w > 0.0)) throw std::domain_error("powers must be positive");
  return std::log10(reference_w / power_w);
}

double effective_exponent(double base, const FeasibilityParams& params) {
  if (!(base >= 0.0)) throw std::domain_error("effective_exponent: base exponent must be non-negative");
  if (!(params.kappa_i > 0.0 && params.kappa_i <= 1.0) || !(params.kappa_m > 0.0 && params.kappa_m <= 1.0)) {
    throw std::domain_error("effective_exponent: kappa_i and kappa_m must lie in (0, 1]");
  }
  return base * params.kappa_i * params.kappa_m;
}

}  // namespace qillum
