#include "qillum/roc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qillum/special.hpp"

namespace qillum {

using special::gaussian_tail;
using special::inverse_gaussian_tail;

const char* to_string(RocGenerator g) {
  switch (g) {
    case RocGenerator::ci_homodyne:
      return "ci_homodyne";
    case RocGenerator::qi_opa:
      return "qi_opa";
    case RocGenerator::qi_ffsfg:
      return "qi_ffsfg";
  }
  return "unknown";
}

double RocCurve::p_d_at(double p_f) const {
  if (points.empty()) throw std::logic_error("RocCurve::p_d_at on an empty curve");
  if (p_f <= points.front().p_f) return points.front().p_d;
  if (p_f >= points.back().p_f) return points.back().p_d;
  const auto it = std::lower_bound(points.begin(), points.end(), p_f,
                                   [](const RocPoint& p, double x) { return p.p_f < x; });
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double t = (std::log(p_f) - std::log(lo.p_f)) / (std::log(hi.p_f) - std::log(lo.p_f));
  return lo.p_d + t * (hi.p_d - lo.p_d);
}

bool RocCurve::satisfies_invariants(double slack) const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (p.p_f < 0.0 || p.p_f > 1.0 || p.p_d < 0.0 || p.p_d > 1.0) return false;
    if (p.p_d < p.p_f - slack) return false;
    if (i > 0) {
      if (!(p.p_f > points[i - 1].p_f)) return false;
      if (p.p_d < points[i - 1].p_d - slack) return false;
    }
  }
  return true;
}

std::vector<double> roc_pf_grid(int points) {
  if (points < 2) throw std::invalid_argument("roc_pf_grid: need at least two points");
  const double lo = std::log10(kRocGridMin);
  const double hi = std::log10(1.0 - kRocGridMin);
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] = std::pow(10.0, lo + (hi - lo) * i / (points - 1));
  }
  grid.back() = 1.0 - kRocGridMin;
  return grid;
}

double ci_separation(const IlluminationScenario& scenario) {
  const double signal = static_cast<double>(scenario.m()) * scenario.kappa() * scenario.n_s();
  return 2.0 * std::sqrt(signal) / std::sqrt(2.0 * scenario.n_b() + 1.0);
}

RocPoint ci_operating_point(double d, double log_lambda) {
  if (!(d > 0.0)) throw std::domain_error("ci_operating_point: separation must be positive");
  // (1/2) erfc(x / sqrt 2) == Q(x)
  return {gaussian_tail(log_lambda / d + 0.5 * d), gaussian_tail(log_lambda / d - 0.5 * d)};
}

double ci_detection_probability(double d, double p_f) {
  if (d == 0.0) return p_f;
  return gaussian_tail(inverse_gaussian_tail(p_f) - d);
}

RocCurve roc_ci_homodyne(const IlluminationScenario& scenario) {
  RocCurve curve;
  curve.generator = RocGenerator::ci_homodyne;
  curve.params = scenario;
  const double d = ci_separation(scenario);
  curve.degenerate = d == 0.0;
  for (double pf : roc_pf_grid()) {
    curve.points.push_back({pf, ci_detection_probability(d, pf)});
  }
  return curve;
}

RocCurve roc_opa(const OpaModel& model, std::uint64_t clt_gate) {
  RocCurve curve;
  curve.generator = RocGenerator::qi_opa;
  curve.clt_warning = model.m < clt_gate;
  curve.degenerate = model.m == 0 || model.delta_n == 0.0;
  const auto mm = static_cast<double>(model.m);
  const double sd0 = std::sqrt(mm * model.var0);
  const double sd1 = std::sqrt(mm * model.var1);
  for (double pf : roc_pf_grid()) {
    if (curve.degenerate) {
      curve.points.push_back({pf, pf});
      continue;
    }
    const double t = mm * model.n0 + sd0 * inverse_gaussian_tail(pf);
    curve.points.push_back({pf, gaussian_tail((t - mm * model.n1) / sd1)});
  }
  return curve;
}

double pure_state_detection_probability(double h, double p_f) {
  if (!(h >= 0.0 && h <= 1.0)) throw std::domain_error("pure-state ROC: h must lie in [0, 1]");
  if (!(p_f >= 0.0 && p_f <= 1.0)) throw std::domain_error("pure-state ROC: p_f must lie in [0, 1]");
  if (p_f >= 1.0 - h) return 1.0;
  const double root = std::sqrt(p_f * (1.0 - h)) + std::sqrt((1.0 - p_f) * h);
  return std::min(1.0, root * root);
}

// Note: the coherent-state approximation gives p_d -> h (not 0) as p_f -> 0.
// That limit is a known shortcoming of the approximation and is kept as is.
RocCurve roc_pure_state(double h) {
  if (!(h >= 0.0 && h <= 1.0)) throw std::domain_error("roc_pure_state: h must lie in [0, 1]");
  RocCurve curve;
  curve.generator = RocGenerator::qi_ffsfg;
  curve.degenerate = h == 0.0;
  for (double pf : roc_pf_grid()) {
    curve.points.push_back({pf, pure_state_detection_probability(h, pf)});
  }
  return curve;
}

NpEigensystem np_eigensystem(double h, double lambda) {
  if (!(h > 0.0 && h < 1.0)) throw std::domain_error("np_eigensystem: h must lie strictly in (0, 1)");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::domain_error("np_eigensystem: lambda must be finite and non-negative");
  }
  const double half = 0.5 * (1.0 - lambda);
  const double r = std::sqrt(half * half + lambda * h);
  NpEigensystem out;
  // eta1 * eta0 = -lambda h; pick the cancellation-free form for each root.
  if (half >= 0.0) {
    out.eta1 = half + r;
    out.eta0 = -lambda * h / out.eta1;
  } else {
    out.eta0 = half - r;
    out.eta1 = -lambda * h / out.eta0;
  }
  double eta1_minus_h = out.eta1 - h;
  if (lambda > 1.0) {
    // eta1 - h = lambda h (1 - h) / [((lambda + 1)/2 + R) (R + (lambda - 1)/2)]
    eta1_minus_h = lambda * h * (1.0 - h) / ((0.5 * (lambda + 1.0) + r) * (r - half));
  }
  out.p_f = eta1_minus_h / (2.0 * r);
  out.p_d = (out.eta1 + lambda * h) / (2.0 * r);
  return out;
}

double pd_at_snr(SnrCurve curve, double p_f, double snr) {
  if (!(p_f > 0.0 && p_f < 1.0)) throw std::domain_error("pd_at_snr: p_f must lie in (0, 1)");
  if (!(snr >= 0.0)) throw std::domain_error("pd_at_snr: snr must be non-negative");
  switch (curve) {
    case SnrCurve::ci_homodyne:
      // d^2 = 4 M kappa N_s / (2 N_B + 1) -> 2 SNR for N_B >> 1
      return ci_detection_probability(std::sqrt(2.0 * snr), p_f);
    case SnrCurve::qi_ffsfg:
      return pure_state_detection_probability(-std::expm1(-snr), p_f);
  }
  return p_f;
}

std::vector<double> pd_vs_snr(SnrCurve curve, double p_f, std::span<const double> snr_grid) {
  std::vector<double> out;
  out.reserve(snr_grid.size());
  for (double snr : snr_grid) out.push_back(pd_at_snr(curve, p_f, snr));
  return out;
}

double snr_for_detection(SnrCurve curve, double p_f, double p_d_target, double snr_max) {
  if (!(p_f > 0.0 && p_f < 1.0)) throw std::domain_error("snr_for_detection: p_f must lie in (0, 1)");
  if (!(p_d_target > p_f && p_d_target < 1.0)) {
    throw std::domain_error("snr_for_detection: target must lie in (p_f, 1)");
  }
  double lo = 0.0;
  double hi = 1.0;
  while (pd_at_snr(curve, p_f, hi) < p_d_target) {
    lo = hi;
    hi *= 2.0;
    if (hi > snr_max) throw std::range_error("snr_for_detection: target detection probability unreachable");
  }
  constexpr int kMaxIterations = 200;
  for (int it = 0; it < kMaxIterations && (hi - lo) > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (pd_at_snr(curve, p_f, mid) < p_d_target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double advantage_db(double p_f, double p_d_target) {
  const double ci = snr_for_detection(SnrCurve::ci_homodyne, p_f, p_d_target);
  const double qi = snr_for_detection(SnrCurve::qi_ffsfg, p_f, p_d_target);
  return 10.0 * std::log10(ci / qi);
}

}  // namespace qillum
