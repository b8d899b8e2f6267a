#pragma once

namespace qillum::special {

/// Complementary error function. Underflows to 0 above x ~ 26.5; use
/// log_erfc() when the exponent itself is needed.
double erfc(double x);

/// log(erfc(x)), finite for all x.
double log_erfc(double x);

/// Upper tail of the standard normal, Q(z) = P(Z > z) = erfc(z / sqrt 2) / 2.
double gaussian_tail(double z);

/// Inverse of gaussian_tail on (0, 1). Throws std::domain_error outside.
double inverse_gaussian_tail(double p);

/// Standard normal density.
double gaussian_pdf(double z);

}  // namespace qillum::special
