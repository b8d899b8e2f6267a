#include "catch_amalgamated.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qillum/gaussian_core.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace qillum;

namespace {

// Elementary symplectic maps used to build random physical states.
Matrix squeezer(int modes, int k, double r) {
  Matrix s = Matrix::Identity(2 * modes, 2 * modes);
  s(2 * k, 2 * k) = std::exp(r);
  s(2 * k + 1, 2 * k + 1) = std::exp(-r);
  return s;
}

Matrix rotation(int modes, int k, double phi) {
  Matrix s = Matrix::Identity(2 * modes, 2 * modes);
  s(2 * k, 2 * k) = std::cos(phi);
  s(2 * k, 2 * k + 1) = std::sin(phi);
  s(2 * k + 1, 2 * k) = -std::sin(phi);
  s(2 * k + 1, 2 * k + 1) = std::cos(phi);
  return s;
}

Matrix beam_splitter(double theta) {
  Matrix s = Matrix::Zero(4, 4);
  const double c = std::cos(theta);
  const double t = std::sin(theta);
  for (int i = 0; i < 2; ++i) {
    s(i, i) = c;
    s(i, 2 + i) = t;
    s(2 + i, i) = -t;
    s(2 + i, 2 + i) = c;
  }
  return s;
}

Matrix random_symplectic(int modes, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> squeeze(-1.5, 1.5);
  Matrix s = Matrix::Identity(2 * modes, 2 * modes);
  for (int layer = 0; layer < 3; ++layer) {
    for (int k = 0; k < modes; ++k) s = rotation(modes, k, angle(rng)) * squeezer(modes, k, squeeze(rng)) * s;
    if (modes == 2) s = beam_splitter(angle(rng)) * s;
  }
  return s;
}

// V = S diag(nu) S^T with symplectic eigenvalues nu.
Matrix covariance_with_symplectic_eigenvalues(const Matrix& s, const std::vector<double>& nu) {
  Matrix d = Matrix::Zero(s.rows(), s.cols());
  for (std::size_t k = 0; k < nu.size(); ++k) d(2 * k, 2 * k) = d(2 * k + 1, 2 * k + 1) = nu[k];
  Matrix v = s * d * s.transpose();
  return 0.5 * (v + v.transpose());
}

// Trapezoid rule of the Wigner function on a grid aligned with the principal
// axes of the covariance, y in [-8, 8] standard deviations per axis.
double integrate_wigner(const GaussianState& state, int n) {
  const int dim = 2 * state.num_modes();
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(state.cov());
  const Matrix axes = eig.eigenvectors() * eig.eigenvalues().cwiseSqrt().asDiagonal();
  const double jacobian = eig.eigenvalues().cwiseSqrt().prod();
  const double half_width = 8.0;
  const double h = 2.0 * half_width / (n - 1);
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  Vector y(dim);
  double total = 0.0;
  while (true) {
    double weight = 1.0;
    for (int d = 0; d < dim; ++d) {
      y(d) = -half_width + h * idx[static_cast<std::size_t>(d)];
      if (idx[static_cast<std::size_t>(d)] == 0 || idx[static_cast<std::size_t>(d)] == n - 1) weight *= 0.5;
    }
    total += weight * wigner_eval(state, state.mean() + axes * y);
    int d = 0;
    while (d < dim && ++idx[static_cast<std::size_t>(d)] == n) idx[static_cast<std::size_t>(d++)] = 0;
    if (d == dim) break;
  }
  return total * jacobian * std::pow(h, dim);
}

}  // namespace

TEST_CASE("thermal occupation at microwave and optical frequencies", "[gaussian_core]") {
  // 1 / expm1(h f / k T), mpmath reference
  CHECK_THAT(thermal_occupation(10e9, 290.0), WithinRel(603.7620928560199, 1e-12));
  // hbar carries ~1e-10 relative rounding; x ~ 83 here amplifies it in exp(x)
  CHECK_THAT(thermal_occupation(500e12, 290.0), WithinRel(1.158925308305968e-36, 1e-7));
  CHECK_THROWS_AS(thermal_occupation(0.0, 290.0), std::domain_error);
  CHECK_THROWS_AS(thermal_occupation(1e9, -1.0), std::domain_error);
}

TEST_CASE("coherent state mean and covariance", "[gaussian_core]") {
  const auto s = coherent_state({0.3, -1.25});
  REQUIRE(s.num_modes() == 1);
  CHECK(s.mean()(0) == 0.6);
  CHECK(s.mean()(1) == -2.5);
  CHECK(s.cov().isApprox(Matrix::Identity(2, 2)));
}

TEST_CASE("thermal and TMSV covariances", "[gaussian_core]") {
  CHECK(thermal_state(2.5).cov().isApprox(6.0 * Matrix::Identity(2, 2)));
  const auto t = tmsv_state(3.0);
  CHECK_THAT(t.cov()(0, 0), WithinRel(7.0, 1e-15));
  CHECK_THAT(t.cov()(0, 2), WithinRel(6.928203230275509, 1e-14));
  CHECK_THAT(t.cov()(1, 3), WithinRel(-6.928203230275509, 1e-14));
  CHECK(t.cov()(0, 1) == 0.0);
}

TEST_CASE("return-idler covariance entries", "[gaussian_core]") {
  const IlluminationScenario sc(0.01, 20.0, 0.01, 1);
  const auto c = return_idler_covariance(sc);
  CHECK_THAT(c.a_diag, WithinRel(41.0002, 1e-14));
  CHECK_THAT(c.b_diag, WithinRel(1.02, 1e-14));
  CHECK_THAT(c.c_offdiag, WithinRel(0.02009975124224178, 1e-14));

  const auto states = return_idler_states(sc);
  CHECK(states.absent.cov().isDiagonal());
  CHECK_THAT(states.absent.cov()(0, 0), WithinRel(41.0, 1e-15));
  CHECK(states.present.cov().isApprox(c.matrix()));

  SECTION("zero transmissivity makes the hypotheses identical") {
    const auto same = return_idler_states(sc.with_kappa(0.0));
    CHECK(same.present.cov() == same.absent.cov());
  }
}

TEST_CASE("scenario validation", "[gaussian_core]") {
  CHECK_THROWS_AS(IlluminationScenario(0.0, 1.0, 0.5, 1), std::domain_error);
  CHECK_THROWS_AS(IlluminationScenario(1.0, -1.0, 0.5, 1), std::domain_error);
  CHECK_THROWS_AS(IlluminationScenario(1.0, 1.0, 1.5, 1), std::domain_error);
  CHECK_THROWS_AS(IlluminationScenario(1.0, 1.0, 0.5, 1, 1.2), std::domain_error);
  const IlluminationScenario sc(0.01, 20.0, 0.01, 1000, 0.3);
  CHECK_THAT(sc.w1(), WithinRel(0.7, 1e-15));
  CHECK_THAT(sc.snr(), WithinRel(1000 * 0.01 * 0.01 / 20.0, 1e-15));
}

TEST_CASE("state construction rejects bad shapes", "[gaussian_core]") {
  CHECK_THROWS_AS(GaussianState(Vector::Zero(3), Matrix::Identity(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(GaussianState(Vector::Zero(2), Matrix::Identity(4, 4)), std::invalid_argument);
  Matrix asym = Matrix::Identity(2, 2);
  asym(0, 1) = 0.1;
  CHECK_THROWS_AS(GaussianState(Vector::Zero(2), asym), std::invalid_argument);
  CHECK_THROWS_AS(uncertainty_check(Matrix::Identity(3, 3)), std::invalid_argument);
}

TEST_CASE("symplectic form", "[gaussian_core]") {
  const Matrix om = symplectic_form(2);
  CHECK(om(0, 1) == 1.0);
  CHECK(om(1, 0) == -1.0);
  CHECK(om(2, 3) == 1.0);
  CHECK((om * om).isApprox(-Matrix::Identity(4, 4)));
}

TEST_CASE("random physical states pass the uncertainty check", "[gaussian_core][property]") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> excess(0.0, 5.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int modes = 1 + trial % 2;
    const Matrix s = random_symplectic(modes, rng);
    std::vector<double> nu;
    for (int k = 0; k < modes; ++k) nu.push_back(1.0 + (trial % 10 == 0 ? 0.0 : excess(rng)));
    const auto report = uncertainty_check(covariance_with_symplectic_eigenvalues(s, nu));
    INFO("trial " << trial << " min eigenvalue " << report.min_eigenvalue);
    REQUIRE(report.physical);
  }
}

TEST_CASE("states with a symplectic eigenvalue below one are rejected", "[gaussian_core][property]") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> low(0.05, 0.9);
  for (int trial = 0; trial < 200; ++trial) {
    const int modes = 1 + trial % 2;
    const Matrix s = random_symplectic(modes, rng);
    std::vector<double> nu(static_cast<std::size_t>(modes), 1.0);
    nu[static_cast<std::size_t>(trial % modes)] = low(rng);
    INFO("trial " << trial);
    REQUIRE_FALSE(uncertainty_check(covariance_with_symplectic_eigenvalues(s, nu)).physical);
  }
  CHECK_FALSE(uncertainty_check(0.5 * Matrix::Identity(2, 2)).physical);
}

TEST_CASE("vacuum, thermal, TMSV and return-idler states are physical", "[gaussian_core]") {
  CHECK(uncertainty_check(coherent_state({1.0, 2.0})).physical);
  CHECK(uncertainty_check(thermal_state(0.0)).physical);
  CHECK(uncertainty_check(tmsv_state(10.0)).physical);
  for (double kappa : {0.0, 0.001, 0.5, 1.0}) {
    const auto st = return_idler_states(IlluminationScenario(0.3, 0.2, kappa, 1));
    CHECK(uncertainty_check(st.present).physical);
    CHECK(uncertainty_check(st.absent).physical);
  }
}

TEST_CASE("TMSV saturates the correlation bound", "[gaussian_core][property]") {
  for (double n : {1e-6, 1e-3, 0.01, 0.5, 1.0, 3.0, 100.0}) {
    const auto cov = tmsv_state(n).cov();
    const double s = cov(0, 0);
    INFO("n_s = " << n);
    CHECK_THAT(cov(0, 2), WithinAbs(std::sqrt(s * s - 1.0), 1e-12 * std::max(1.0, s)));
    // pure state: minimum eigenvalue of V + i Omega is 0
    CHECK_THAT(uncertainty_check(tmsv_state(n)).min_eigenvalue, WithinAbs(0.0, 1e-9 * std::max(1.0, s)));
  }
}

TEST_CASE("return-idler entanglement switches off at kappa = n_b", "[gaussian_core][property]") {
  for (double nb : {0.05, 0.2, 0.7}) {
    for (double ns : {0.01, 1.0, 5.0}) {
      INFO("n_b = " << nb << ", n_s = " << ns);
      CHECK(entanglement_check(return_idler_covariance(IlluminationScenario(ns, nb, nb * 1.01, 1))));
      CHECK_FALSE(entanglement_check(return_idler_covariance(IlluminationScenario(ns, nb, nb * 0.99, 1))));
    }
  }
  CHECK(entanglement_check(TwoModeCovariance{3.0, 3.0, std::sqrt(8.0)}));
  CHECK_THROWS_AS(entanglement_check(TwoModeCovariance{1.0, 1.0, 1.0}), std::domain_error);
}

TEST_CASE("Wigner function integrates to one", "[gaussian_core][property]") {
  CHECK_THAT(integrate_wigner(coherent_state({0.7, -0.2}), 65), WithinAbs(1.0, 1e-4));
  for (double n : {0.0, 1.0, 5.0}) {
    INFO("thermal n = " << n);
    CHECK_THAT(integrate_wigner(thermal_state(n), 65), WithinAbs(1.0, 1e-4));
  }
  for (double n : {0.5, 2.0, 5.0}) {
    INFO("TMSV n = " << n);
    CHECK_THAT(integrate_wigner(tmsv_state(n), 33), WithinAbs(1.0, 1e-4));
  }
  const auto ri = return_idler_states(IlluminationScenario(1.0, 0.5, 0.8, 1));
  CHECK_THAT(integrate_wigner(ri.present, 33), WithinAbs(1.0, 1e-4));
}

TEST_CASE("Wigner function matches the closed form", "[gaussian_core]") {
  const auto s = coherent_state({0.5, 0.0});
  Vector x(2);
  x << 1.0, 0.5;
  // exp(-(x - mean)^2 / 2) / (2 pi) with mean (1, 0)
  CHECK_THAT(wigner_eval(s, x), WithinRel(std::exp(-0.125) / (2.0 * 3.141592653589793), 1e-14));
  Matrix singular = Matrix::Zero(2, 2);
  singular(0, 0) = 1.0;
  CHECK_THROWS_AS(wigner_eval(GaussianState(Vector::Zero(2), singular), x), std::runtime_error);
  CHECK_THROWS_AS(wigner_eval(s, Vector::Zero(3)), std::invalid_argument);
}

TEST_CASE("TMSV reduces to a thermal state", "[gaussian_core][property]") {
  for (double n : {0.01, 1.0, 7.5}) {
    const auto t = tmsv_state(n);
    const std::array<int, 1> first{0};
    const std::array<int, 1> second{1};
    CHECK(reduce_modes(t, first).cov() == thermal_state(n).cov());
    CHECK(reduce_modes(t, second).cov() == thermal_state(n).cov());
  }
}

TEST_CASE("quadrature marginals", "[gaussian_core]") {
  const auto t = tmsv_state(1.0);
  const std::array<int, 2> q1q2{0, 2};
  const auto m = marginal(t, q1q2);
  REQUIRE(m.dimension() == 2);
  CHECK(m.cov(0, 1) == t.cov()(0, 2));
  const std::array<int, 2> bad{0, 4};
  CHECK_THROWS_AS(marginal(t, bad), std::out_of_range);
  const std::array<int, 1> bad_mode{2};
  CHECK_THROWS_AS(reduce_modes(t, bad_mode), std::out_of_range);
}
