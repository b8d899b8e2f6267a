#include "catch_amalgamated.hpp"

#include <cmath>
#include <stdexcept>

#include "qillum/bounds.hpp"
#include "qillum/feasibility.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace qillum;

namespace {

FeasibilityParams microwave() {
  FeasibilityParams p;
  p.signal_frequency_hz = 10e9;
  p.bandwidth_hz = 1e8;
  p.pulse_duration_s = pulse_duration_for(1e6, 1e8);
  p.n_s = 0.01;
  return p;
}

}  // namespace

TEST_CASE("pulse duration for a million modes", "[feasibility]") {
  CHECK_THAT(pulse_duration_for(1e6, 1e8), WithinRel(10e-3, 1e-15));
  CHECK_THAT(pulse_duration_for(1e6, 1e12), WithinRel(1e-6, 1e-15));
  CHECK_THROWS_AS(pulse_duration_for(1e6, 0.0), std::domain_error);
}

TEST_CASE("time-bandwidth round trip", "[feasibility][property]") {
  for (double w : {1e6, 1e8, 3.3e10, 1e12}) {
    for (double m : {1.0, 1e3, 1e6, 7.7e8}) {
      FeasibilityParams p = microwave();
      p.bandwidth_hz = w;
      p.pulse_duration_s = pulse_duration_for(m, w);
      CHECK_THAT(time_bandwidth(p), WithinRel(m, 1e-12));
    }
  }
  FeasibilityParams zero = microwave();
  zero.pulse_duration_s = 0.0;
  CHECK_THROWS_AS(time_bandwidth(zero), std::domain_error);
}

TEST_CASE("microwave pulse power", "[feasibility]") {
  const auto p = microwave();
  // hbar * 2 pi * 1e10 * 0.01 * 1e8 = h * 1e16
  CHECK_THAT(pulse_power(p), WithinRel(6.62607015e-18, 1e-9));
  CHECK(pulse_power(p) / 1e-17 < 2.0);
  CHECK(pulse_power(p) / 1e-17 > 0.5);
  CHECK_THAT(pulse_power_frequency_as_omega(p), WithinRel(1.054571817e-18, 1e-15));
  FeasibilityParams wide = p;
  wide.bandwidth_hz *= 2.0;
  CHECK_THAT(pulse_power(wide), WithinRel(2.0 * pulse_power(p), 1e-15));
}

TEST_CASE("gap to classical radar powers", "[feasibility]") {
  const double power = pulse_power(microwave());
  CHECK_THAT(power_ratio_to_mw_db(power), WithinAbs(-141.7874397, 1e-6));
  const double to_mw = orders_below(power, 1e-3);
  const double to_megawatt = orders_below(power, 1e6);
  CHECK_THAT(to_mw, WithinAbs(14.1787, 1e-4));
  CHECK_THAT(to_megawatt, WithinAbs(23.1787, 1e-4));
  // mW-to-MW radar span brackets the quoted 16-20 orders
  CHECK(to_mw <= 16.0);
  CHECK(to_megawatt >= 20.0);
  CHECK_THROWS_AS(power_ratio_to_mw_db(0.0), std::domain_error);
}

TEST_CASE("idler storage loss erases the quantum advantage", "[feasibility]") {
  FeasibilityParams p = microwave();
  CHECK(effective_exponent(3.0, p) == 3.0);
  const IlluminationScenario sc(1e-3, 1e4, 1e-3, 1);
  p.kappa_i = 0.25;  // 6 dB
  CHECK_THAT(effective_exponent(qi_exponent(sc), p), WithinRel(cs_exponent(sc), 1e-3));
}

TEST_CASE("loss factors compose multiplicatively and never raise the exponent", "[feasibility][property]") {
  for (double k : {1e-3, 0.1, 0.5, 0.9, 1.0}) {
    FeasibilityParams full = microwave();
    full.kappa_i = k;
    FeasibilityParams half = microwave();
    half.kappa_i = std::sqrt(k);
    INFO("kappa " << k);
    CHECK_THAT(effective_exponent(effective_exponent(2.0, half), half), WithinRel(effective_exponent(2.0, full), 1e-14));
    full.kappa_m = 0.7;
    CHECK(effective_exponent(2.0, full) <= 2.0);
  }
  FeasibilityParams bad = microwave();
  bad.kappa_m = 0.0;
  CHECK_THROWS_AS(effective_exponent(1.0, bad), std::domain_error);
  CHECK_THROWS_AS(effective_exponent(-1.0, microwave()), std::domain_error);
}

TEST_CASE("parameter validation", "[feasibility]") {
  FeasibilityParams p = microwave();
  p.kappa_i = 1.5;
  CHECK_THROWS_AS(p.validate(), std::domain_error);
  p = microwave();
  p.signal_frequency_hz = -1.0;
  CHECK_THROWS_AS(pulse_power(p), std::domain_error);
}
