#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "qillum/gaussian_core.hpp"

namespace qillum {

/// Locale-independent shortest %g-style rendering with `digits` significant digits.
std::string format_number(double value, int digits);

/// Comma-separated rows with a header line; '.' decimal point regardless of locale.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header, int digits);
  CsvWriter(std::ostream& out, std::span<const std::string> header, int digits);

  void row(std::initializer_list<double> values);
  void row(std::span<const double> values);

 private:
  std::ostream& out_;
  std::size_t columns_;
  int digits_;
};

inline constexpr int kCurveDigits = 9;
inline constexpr int kWignerDigits = 6;

/// Writes a square grid of a two-dimensional quadrature marginal as long-form
/// CSV `<x_name>,<y_name>,w`, `points` samples per axis over [-extent, extent]
/// around the marginal mean.
void write_wigner_grid(std::ostream& out, const QuadratureMarginal& marginal, std::string_view x_name,
                       std::string_view y_name, double extent, int points);

}  // namespace qillum
