#include "qillum/special.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qillum/constants.hpp"

namespace qillum::special {

namespace {
constexpr double kSqrt2 = 1.41421356237309504880;
// Beyond this point the asymptotic series is accurate to double precision
// and std::erfc is close to underflow.
constexpr double kAsymptoticStart = 25.0;
}  // namespace

double erfc(double x) { return std::erfc(x); }

double log_erfc(double x) {
  if (x < kAsymptoticStart) {
    return std::log(std::erfc(x));
  }
  // erfc(x) ~ exp(-x^2) / (x sqrt(pi)) * sum_k (-1)^k (2k-1)!! / (2x^2)^k
  const double inv2x2 = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double series = 1.0;
  for (int k = 1; k < 8; ++k) {
    term *= -(2.0 * k - 1.0) * inv2x2;
    series += term;
  }
  return -x * x - std::log(x * std::sqrt(constants::pi)) + std::log(series);
}

double gaussian_tail(double z) { return 0.5 * std::erfc(z / kSqrt2); }

double inverse_gaussian_tail(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("inverse_gaussian_tail: probability must lie in (0, 1)");
  }
  return kSqrt2 * boost::math::erfc_inv(2.0 * p);
}

double gaussian_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * constants::pi);
}

}  // namespace qillum::special
