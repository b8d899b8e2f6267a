#include "qillum/gaussian_core.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <string>

#include "qillum/constants.hpp"

namespace qillum {

namespace {

constexpr double kSymmetryTolerance = 1e-12;

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw std::domain_error(std::string(what) + " must be finite");
  }
}

double gaussian_density(const Vector& mean, const Matrix& cov, const Vector& point) {
  if (point.size() != mean.size()) {
    throw std::invalid_argument("point dimension does not match the distribution");
  }
  Eigen::LDLT<Matrix> ldlt(cov);
  const double det = cov.determinant();
  if (ldlt.info() != Eigen::Success || !(det > 0.0)) {
    throw std::runtime_error("covariance matrix is singular");
  }
  const Vector diff = point - mean;
  const double quad = diff.dot(ldlt.solve(diff));
  const double dim = static_cast<double>(mean.size());
  return std::exp(-0.5 * quad) / (std::pow(2.0 * constants::pi, 0.5 * dim) * std::sqrt(det));
}

}  // namespace

GaussianState::GaussianState(Vector mean, Matrix cov) : mean_(std::move(mean)), cov_(std::move(cov)) {
  if (mean_.size() == 0 || mean_.size() % 2 != 0) {
    throw std::invalid_argument("mean vector must have length 2N with N >= 1");
  }
  if (cov_.rows() != mean_.size() || cov_.cols() != mean_.size()) {
    throw std::invalid_argument("covariance must be 2N x 2N to match the mean vector");
  }
  const double scale = std::max(1.0, cov_.cwiseAbs().maxCoeff());
  if ((cov_ - cov_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance * scale) {
    throw std::invalid_argument("covariance matrix is not symmetric");
  }
}

Matrix symplectic_form(int num_modes) {
  if (num_modes < 1) {
    throw std::invalid_argument("symplectic_form: num_modes must be positive");
  }
  Matrix omega = Matrix::Zero(2 * num_modes, 2 * num_modes);
  for (int k = 0; k < num_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

Matrix TwoModeCovariance::matrix() const {
  Matrix v = Matrix::Zero(4, 4);
  v(0, 0) = v(1, 1) = a_diag;
  v(2, 2) = v(3, 3) = b_diag;
  v(0, 2) = v(2, 0) = c_offdiag;
  v(1, 3) = v(3, 1) = -c_offdiag;
  return v;
}

IlluminationScenario::IlluminationScenario(double n_s, double n_b, double kappa, std::uint64_t m,
                                           double w0)
    : n_s_(n_s), n_b_(n_b), kappa_(kappa), m_(m), w0_(w0), w1_(1.0 - w0) {
  require_finite(n_s, "n_s");
  require_finite(n_b, "n_b");
  require_finite(kappa, "kappa");
  if (!(n_s > 0.0)) throw std::domain_error("n_s must be positive");
  if (!(n_b > 0.0)) throw std::domain_error("n_b must be positive");
  if (!(kappa >= 0.0 && kappa <= 1.0)) throw std::domain_error("kappa must lie in [0, 1]");
  if (!(w0 >= 0.0 && w0 <= 1.0)) throw std::domain_error("prior w0 must lie in [0, 1]");
}

double IlluminationScenario::snr() const {
  return static_cast<double>(m_) * kappa_ * n_s_ / n_b_;
}

IlluminationScenario IlluminationScenario::with_m(std::uint64_t m) const {
  return {n_s_, n_b_, kappa_, m, w0_};
}

IlluminationScenario IlluminationScenario::with_kappa(double kappa) const {
  return {n_s_, n_b_, kappa, m_, w0_};
}

double thermal_occupation(double frequency_hz, double temperature_k) {
  if (!(frequency_hz > 0.0) || !(temperature_k > 0.0)) {
    throw std::domain_error("thermal_occupation: frequency and temperature must be positive");
  }
  const double omega = 2.0 * constants::pi * frequency_hz;
  const double x = constants::reduced_planck * omega / (constants::boltzmann * temperature_k);
  return 1.0 / std::expm1(x);
}

GaussianState coherent_state(std::complex<double> alpha) {
  Vector mean(2);
  mean << 2.0 * alpha.real(), 2.0 * alpha.imag();
  return {mean, Matrix::Identity(2, 2)};
}

GaussianState thermal_state(double n_t) {
  if (!(n_t >= 0.0)) throw std::domain_error("thermal_state: n_t must be non-negative");
  return {Vector::Zero(2), (2.0 * n_t + 1.0) * Matrix::Identity(2, 2)};
}

GaussianState tmsv_state(double n_s) {
  if (!(n_s >= 0.0)) throw std::domain_error("tmsv_state: n_s must be non-negative");
  const double s = 2.0 * n_s + 1.0;
  const TwoModeCovariance cov{s, s, 2.0 * std::sqrt(n_s * (n_s + 1.0))};
  return {Vector::Zero(4), cov.matrix()};
}

TwoModeCovariance return_idler_covariance(const IlluminationScenario& scenario) {
  const double ns = scenario.n_s();
  const double kappa = scenario.kappa();
  const double b = 2.0 * scenario.n_b() + 1.0;
  const double s = 2.0 * ns + 1.0;
  const double cq = 2.0 * std::sqrt(ns * (ns + 1.0));
  return {2.0 * kappa * ns + b, s, std::sqrt(kappa) * cq};
}

ReturnIdlerStates return_idler_states(const IlluminationScenario& scenario) {
  const double b = 2.0 * scenario.n_b() + 1.0;
  const double s = 2.0 * scenario.n_s() + 1.0;
  Matrix v0 = Matrix::Zero(4, 4);
  v0.diagonal() << b, b, s, s;
  if (scenario.kappa() == 0.0) {
    return {GaussianState(Vector::Zero(4), v0), GaussianState(Vector::Zero(4), v0)};
  }
  return {GaussianState(Vector::Zero(4), v0),
          GaussianState(Vector::Zero(4), return_idler_covariance(scenario).matrix())};
}

UncertaintyReport uncertainty_check(const Matrix& cov) {
  if (cov.rows() != cov.cols() || cov.rows() == 0 || cov.rows() % 2 != 0) {
    throw std::invalid_argument("uncertainty_check: covariance must be square with even dimension");
  }
  const int modes = static_cast<int>(cov.rows() / 2);
  const Eigen::MatrixXcd hermitian =
      cov.cast<std::complex<double>>() +
      std::complex<double>(0.0, 1.0) * symplectic_form(modes).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  return {min_eig >= -kUncertaintyTolerance, min_eig};
}

UncertaintyReport uncertainty_check(const GaussianState& state) {
  return uncertainty_check(state.cov());
}

bool entanglement_check(const TwoModeCovariance& cov) {
  if (!uncertainty_check(cov.matrix()).physical) {
    throw std::domain_error("entanglement_check: covariance violates the uncertainty relation");
  }
  const double product = (cov.a_diag - 1.0) * (cov.b_diag - 1.0);
  return cov.c_offdiag > std::sqrt(std::max(0.0, product));
}

double wigner_eval(const GaussianState& state, const Vector& point) {
  return gaussian_density(state.mean(), state.cov(), point);
}

double QuadratureMarginal::density(const Vector& point) const {
  return gaussian_density(mean, cov, point);
}

QuadratureMarginal marginal(const GaussianState& state, std::span<const int> indices) {
  const auto dim = static_cast<int>(state.mean().size());
  const auto n = static_cast<Eigen::Index>(indices.size());
  if (n == 0) throw std::out_of_range("marginal: no indices selected");
  QuadratureMarginal out{Vector(n), Matrix(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    const int ii = indices[static_cast<std::size_t>(i)];
    if (ii < 0 || ii >= dim) throw std::out_of_range("marginal: quadrature index out of range");
    out.mean(i) = state.mean()(ii);
    for (Eigen::Index j = 0; j < n; ++j) {
      const int jj = indices[static_cast<std::size_t>(j)];
      if (jj < 0 || jj >= dim) throw std::out_of_range("marginal: quadrature index out of range");
      out.cov(i, j) = state.cov()(ii, jj);
    }
  }
  return out;
}

GaussianState reduce_modes(const GaussianState& state, std::span<const int> modes) {
  std::vector<int> quads;
  quads.reserve(2 * modes.size());
  for (int m : modes) {
    if (m < 0 || m >= state.num_modes()) throw std::out_of_range("reduce_modes: mode index out of range");
    quads.push_back(2 * m);
    quads.push_back(2 * m + 1);
  }
  auto m = marginal(state, quads);
  return {std::move(m.mean), std::move(m.cov)};
}

}  // namespace qillum
