#include "qillum/receivers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qillum/constants.hpp"
#include "qillum/optimize.hpp"
#include "qillum/special.hpp"

namespace qillum {

HomodyneModel HomodyneModel::from(const IlluminationScenario& scenario) {
  HomodyneModel model;
  model.mean_absent = 0.0;
  model.mean_present = 2.0 * std::sqrt(scenario.kappa() * scenario.n_s());
  model.variance = 2.0 * scenario.n_b() + 1.0;
  model.m = scenario.m();
  model.w0 = scenario.w0();
  model.w1 = scenario.w1();
  return model;
}

double HomodyneModel::threshold() const {
  const auto mm = static_cast<double>(m);
  const double midpoint = 0.5 * mm * (mean_absent + mean_present);
  if (w0 == w1) return midpoint;
  const double separation = mean_present - mean_absent;
  if (separation == 0.0 || w0 == 0.0 || w1 == 0.0) {
    // Observation carries no information (or one prior is certain): follow the prior.
    return w0 > w1 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
  }
  return midpoint + variance * std::log(w0 / w1) / separation;
}

HomodyneError homodyne_error_probability(const HomodyneModel& model) {
  HomodyneError out;
  const auto mm = static_cast<double>(model.m);
  const double dm = model.mean_present - model.mean_absent;
  // mean_present = 2 sqrt(kappa N_s), variance = 2 N_B + 1, so
  // dm^2 / (8 variance) = kappa N_s / (4 N_B + 2).
  out.exponent = dm * dm / (8.0 * model.variance);

  if (model.m == 0) {
    out.p_e = std::min(model.w0, model.w1);
  } else if (model.w0 == model.w1) {
    out.p_e = 0.5 * special::erfc(std::sqrt(mm * out.exponent));
  } else {
    const double t = model.threshold();
    const double sd = std::sqrt(mm * model.variance);
    const double p_f = special::gaussian_tail((t - mm * model.mean_absent) / sd);
    const double p_m = special::gaussian_tail((mm * model.mean_present - t) / sd);
    out.p_e = model.w0 * p_f + model.w1 * p_m;
  }

  const double mx = mm * out.exponent;
  out.asymptotic_p_e = mx > 0.0 ? std::exp(-mx) / (2.0 * std::sqrt(constants::pi * mx)) : 0.5;
  return out;
}

OpaModel opa_model(const IlluminationScenario& scenario, double gain) {
  if (!(gain >= 1.0) || !std::isfinite(gain)) {
    throw std::domain_error("opa_model: gain must be >= 1");
  }
  const double ns = scenario.n_s();
  const double nb = scenario.n_b();
  const double kappa = scenario.kappa();
  const double eps2 = gain - 1.0;

  OpaModel model;
  model.gain = gain;
  model.n_s = ns;
  model.n_b = nb;
  model.kappa = kappa;
  model.m = scenario.m();
  model.w0 = scenario.w0();
  model.w1 = scenario.w1();
  model.n0 = gain * ns + eps2 * (1.0 + nb);
  model.delta_n = eps2 * kappa * ns + 2.0 * std::sqrt(gain * eps2) * std::sqrt(kappa * ns * (ns + 1.0));
  model.n1 = model.n0 + model.delta_n;
  model.var0 = model.n0 * (model.n0 + 1.0);
  model.var1 = model.n1 * (model.n1 + 1.0);

  const double s0 = std::sqrt(model.var0);
  const double s1 = std::sqrt(model.var1);
  model.threshold = static_cast<double>(model.m) * (s1 * model.n0 + s0 * model.n1) / (s0 + s1);
  return model;
}

double rule_of_thumb_opa_gain(const IlluminationScenario& scenario) {
  return 1.0 + scenario.n_s() / std::sqrt(scenario.n_b());
}

namespace {

// -log Q_B with Q_B = 1 / (sqrt((1+N1)(1+N0)) - sqrt(N0 N1)). Writing
// N = sinh^2(a) turns the denominator into cosh(a1 - a0).
double exact_opa_exponent(double n0, double n1, double delta_n) {
  const double denom = std::sqrt(n1) * std::sqrt(1.0 + n0) + std::sqrt(n0) * std::sqrt(1.0 + n1);
  if (denom == 0.0) return 0.0;
  const double delta = std::asinh(delta_n / denom);
  const double half = std::sinh(0.5 * delta);
  return std::log1p(2.0 * half * half);
}

}  // namespace

double optimal_opa_gain(const IlluminationScenario& scenario) {
  if (scenario.kappa() == 0.0) return rule_of_thumb_opa_gain(scenario);
  const auto exponent_at = [&](double log10_eps2) {
    const auto model = opa_model(scenario, 1.0 + std::pow(10.0, log10_eps2));
    return -exact_opa_exponent(model.n0, model.n1, model.delta_n);
  };
  // Coarse scan to bracket the peak, then golden section inside the bracket.
  constexpr double lo = -16.0;
  constexpr double hi = 4.0;
  constexpr int steps = 400;
  int best = 0;
  double best_value = exponent_at(lo);
  for (int i = 1; i <= steps; ++i) {
    const double v = exponent_at(lo + (hi - lo) * i / steps);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  const double step = (hi - lo) / steps;
  const double a = lo + step * std::max(0, best - 1);
  const double b = lo + step * std::min(steps, best + 1);
  const auto refined = golden_section_minimize(exponent_at, a, b, 1e-10);
  return 1.0 + std::pow(10.0, refined.x);
}

double opa_count_log_pmf(double mean_per_mode, std::uint64_t m, std::uint64_t n) {
  if (!(mean_per_mode >= 0.0)) throw std::domain_error("opa_count_pmf: mean must be non-negative");
  if (m == 0 || mean_per_mode == 0.0) {
    return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  const auto nn = static_cast<double>(n);
  const auto mm = static_cast<double>(m);
  const double log_binom = std::lgamma(nn + mm) - std::lgamma(nn + 1.0) - std::lgamma(mm);
  return log_binom + nn * std::log(mean_per_mode) - (nn + mm) * std::log1p(mean_per_mode);
}

double opa_count_pmf(double mean_per_mode, std::uint64_t m, std::uint64_t n) {
  return std::exp(opa_count_log_pmf(mean_per_mode, m, n));
}

double opa_count_pmf(const OpaModel& model, Hypothesis h, std::uint64_t n) {
  return opa_count_pmf(model.mean_per_mode(h), model.m, n);
}

double opa_xi_b(double eps2, double n_s, double n_b, double kappa) {
  const double num = eps2 * kappa * n_s * (n_s + 1.0);
  const double den = 2.0 * n_s * (n_s + 1.0) + 2.0 * eps2 * (2.0 * n_s + 1.0) * (n_b + n_s + 1.0);
  return num / den;
}

OpaBound opa_error_bound(const OpaModel& model) {
  OpaBound out;
  out.bound.kind = BoundKind::bhattacharyya_upper;
  out.bound.exponent = exact_opa_exponent(model.n0, model.n1, model.delta_n);
  out.bound.prefactor = 0.5;
  out.bound.p_e = out.bound.p_e_at(static_cast<double>(model.m));
  out.bound.validity = {
      {"n_s << 1", model.n_s < kSmallSignalLimit},
      {"n_b >> 1", model.n_b > kLargeBackgroundLimit},
      {"kappa << 1", model.kappa < kSmallTransmissivityLimit},
  };
  out.q_b = std::exp(-out.bound.exponent);
  out.xi_b = opa_xi_b(model.gain - 1.0, model.n_s, model.n_b, model.kappa);
  out.xi_b_ceiling = model.kappa * model.n_s / (2.0 * model.n_b);
  return out;
}

FfsfgModel::FfsfgModel(double snr) : snr_(snr) {
  if (!(snr >= 0.0) || !std::isfinite(snr)) throw std::domain_error("FfsfgModel: snr must be >= 0");
}

FfsfgModel FfsfgModel::from(const IlluminationScenario& scenario) { return FfsfgModel(scenario.snr()); }

double FfsfgModel::h() const { return -std::expm1(-snr_); }

double FfsfgModel::overlap() const { return std::exp(-0.5 * snr_); }

}  // namespace qillum
