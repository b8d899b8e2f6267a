#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <span>
#include <utility>

namespace qillum {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Quadrature convention: q = a + a^dag, p = i(a^dag - a). Phase-space vectors
// are ordered (q1, p1, q2, p2, ...) and the vacuum covariance is the identity.

/// Mean vector and covariance matrix of an N-mode Gaussian state.
///
/// Construction checks shape and symmetry only; physicality is a separate
/// question answered by uncertainty_check().
class GaussianState {
 public:
  GaussianState(Vector mean, Matrix cov);

  int num_modes() const { return static_cast<int>(mean_.size() / 2); }
  const Vector& mean() const { return mean_; }
  const Matrix& cov() const { return cov_; }

 private:
  Vector mean_;
  Matrix cov_;
};

/// Block-diagonal direct sum of omega = [[0, 1], [-1, 0]].
Matrix symplectic_form(int num_modes);

/// Two-mode covariance with the structure
///   [[A, 0, C, 0], [0, A, 0, -C], [C, 0, B, 0], [0, -C, 0, B]].
struct TwoModeCovariance {
  double a_diag = 1.0;
  double b_diag = 1.0;
  double c_offdiag = 0.0;

  Matrix matrix() const;
};

/// Parameters of one detection problem. Priors default to 1/2 each; w1 is
/// always stored as 1 - w0.
class IlluminationScenario {
 public:
  IlluminationScenario(double n_s, double n_b, double kappa, std::uint64_t m,
                       double w0 = 0.5);

  double n_s() const { return n_s_; }
  double n_b() const { return n_b_; }
  double kappa() const { return kappa_; }
  std::uint64_t m() const { return m_; }
  double w0() const { return w0_; }
  double w1() const { return w1_; }

  /// Received signal photons over background photons, M kappa N_s / N_B.
  double snr() const;

  IlluminationScenario with_m(std::uint64_t m) const;
  IlluminationScenario with_kappa(double kappa) const;

 private:
  double n_s_;
  double n_b_;
  double kappa_;
  std::uint64_t m_;
  double w0_;
  double w1_;
};

/// Bose-Einstein mean photon number of a mode at `frequency_hz` (ordinary
/// frequency, converted to angular internally) and `temperature_k`.
double thermal_occupation(double frequency_hz, double temperature_k);

GaussianState coherent_state(std::complex<double> alpha);
GaussianState thermal_state(double n_t);
GaussianState tmsv_state(double n_s);

struct ReturnIdlerStates {
  GaussianState absent;   // H0
  GaussianState present;  // H1
};

/// Return/idler covariances of Gaussian quantum illumination under both
/// hypotheses. Mode order: (return, idler).
ReturnIdlerStates return_idler_states(const IlluminationScenario& scenario);

/// The A, B, C parameters of the target-present return/idler covariance.
TwoModeCovariance return_idler_covariance(const IlluminationScenario& scenario);

struct UncertaintyReport {
  bool physical = false;
  double min_eigenvalue = 0.0;
};

inline constexpr double kUncertaintyTolerance = 1e-9;

/// Checks V + i Omega >= 0 through the smallest eigenvalue of that Hermitian
/// matrix.
UncertaintyReport uncertainty_check(const GaussianState& state);
/// Throws std::invalid_argument unless `cov` is square with even dimension.
UncertaintyReport uncertainty_check(const Matrix& cov);

/// Duan-Simon separability test, C > sqrt((A - 1)(B - 1)).
/// Throws std::domain_error when the covariance is unphysical.
bool entanglement_check(const TwoModeCovariance& cov);

/// Wigner function of a Gaussian state. Throws std::runtime_error when the
/// covariance is singular.
double wigner_eval(const GaussianState& state, const Vector& point);

/// Gaussian distribution over a subset of quadratures.
struct QuadratureMarginal {
  Vector mean;
  Matrix cov;

  int dimension() const { return static_cast<int>(mean.size()); }
  double density(const Vector& point) const;
};

/// Marginal over the quadratures at `indices` (0-based positions in the
/// phase-space vector). Throws std::out_of_range for bad indices.
QuadratureMarginal marginal(const GaussianState& state, std::span<const int> indices);

/// Reduced state of the listed modes (0-based mode indices).
GaussianState reduce_modes(const GaussianState& state, std::span<const int> modes);

}  // namespace qillum
