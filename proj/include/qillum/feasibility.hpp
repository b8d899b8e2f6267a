#pragma once

namespace qillum {

/// Pulse and storage parameters of a quantum-illumination transmitter.
/// Frequencies are ordinary frequencies in Hz.
struct FeasibilityParams {
  double signal_frequency_hz = 0.0;
  double bandwidth_hz = 0.0;      // phase-matching bandwidth W
  double pulse_duration_s = 0.0;  // T
  double n_s = 0.0;               // photons per mode
  double kappa_i = 1.0;           // idler storage transmissivity
  double kappa_m = 1.0;           // temporal-mismatch overlap

  void validate() const;
};

/// Number of signal-idler mode pairs M = T W.
double time_bandwidth(const FeasibilityParams& params);

/// Pulse duration needed for `modes` mode pairs at bandwidth W, T = M / W.
double pulse_duration_for(double modes, double bandwidth_hz);

/// P = hbar omega_s N_s W with omega_s = 2 pi f (angular convention).
double pulse_power(const FeasibilityParams& params);

/// Same expression with the quoted frequency used directly as omega_s.
double pulse_power_frequency_as_omega(const FeasibilityParams& params);

/// 10 log10(power / 1 mW).
double power_ratio_to_mw_db(double power_w);

/// log10(reference / power): orders of magnitude below a reference power.
double orders_below(double power_w, double reference_w);

/// Error exponent after idler-storage loss and mismatch, base kappa_I kappa_m.
double effective_exponent(double base, const FeasibilityParams& params);

}  // namespace qillum
