#include "qillum/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace qillum {

std::string format_number(double value, int digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, digits);
  if (res.ec != std::errc()) throw std::runtime_error("format_number: conversion failed");
  return {buf.data(), res.ptr};
}

CsvWriter::CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header, int digits)
    : out_(out), columns_(header.size()), digits_(digits) {
  bool first = true;
  for (auto h : header) {
    if (!first) out_ << ',';
    out_ << h;
    first = false;
  }
  out_ << '\n';
}

CsvWriter::CsvWriter(std::ostream& out, std::span<const std::string> header, int digits)
    : out_(out), columns_(header.size()), digits_(digits) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << header[i];
  }
  out_ << '\n';
}

void CsvWriter::row(std::span<const double> values) {
  if (values.size() != columns_) throw std::invalid_argument("CsvWriter: column count mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << format_number(values[i], digits_);
  }
  out_ << '\n';
}

void CsvWriter::row(std::initializer_list<double> values) {
  row(std::span<const double>(values.begin(), values.size()));
}

void write_wigner_grid(std::ostream& out, const QuadratureMarginal& marginal, std::string_view x_name,
                       std::string_view y_name, double extent, int points) {
  if (marginal.dimension() != 2) throw std::invalid_argument("write_wigner_grid: marginal must be two-dimensional");
  if (points < 2 || !(extent > 0.0)) throw std::invalid_argument("write_wigner_grid: bad grid");
  CsvWriter csv(out, {x_name, y_name, "w"}, kWignerDigits);
  Vector point(2);
  for (int i = 0; i < points; ++i) {
    const double x = marginal.mean(0) - extent + 2.0 * extent * i / (points - 1);
    for (int j = 0; j < points; ++j) {
      const double y = marginal.mean(1) - extent + 2.0 * extent * j / (points - 1);
      point << x, y;
      csv.row({x, y, marginal.density(point)});
    }
  }
}

}  // namespace qillum
