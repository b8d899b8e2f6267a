#pragma once

#include <cmath>
#include <stdexcept>

namespace qillum {

struct Minimum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for the minimum of a unimodal function on [lo, hi].
/// The endpoints are evaluated as well, so a monotone function returns its
/// boundary minimum.
template <class F>
Minimum golden_section_minimize(F&& f, double lo, double hi, double tol = 1e-12,
                                int max_iter = 500) {
  if (!(lo < hi)) throw std::invalid_argument("golden_section_minimize: empty bracket");
  constexpr double kInvPhi = 0.61803398874989484820;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  Minimum best{0.5 * (a + b), f(0.5 * (a + b))};
  for (double edge : {lo, hi}) {
    const double fe = f(edge);
    if (fe < best.value) best = {edge, fe};
  }
  return best;
}

}  // namespace qillum
