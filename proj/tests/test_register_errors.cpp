#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spindeph/register_errors.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace spindeph;
using cd = std::complex<double>;
using std::numbers::pi;

namespace {

// Oracle: U built from Pauli matrices rather than the explicit entries.
Eigen::Matrix2cd pauli_unitary(const ErrorVector& e) {
  Eigen::Matrix2cd sx, sy, sz;
  sx << 0, 1, 1, 0;
  sy << 0, cd(0, -1), cd(0, 1), 0;
  sz << 1, 0, 0, -1;
  const Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity() + cd(0, 1) * (e.x * sx + e.y * sy + e.z * sz);
  return m / std::sqrt(1 + e.norm_squared());
}

double max_abs(const Eigen::Matrix2cd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("error_unitary") {
  CHECK(max_abs(error_unitary({}) - Eigen::Matrix2cd::Identity()) == 0.0);
  const auto u = error_unitary({1, 0, 0});
  CHECK(max_abs(u - pauli_unitary({1, 0, 0})) < 1e-16);
  CHECK(max_abs(u.adjoint() * u - Eigen::Matrix2cd::Identity()) < 1e-15);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  double worst = 0.0, worst_oracle = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const ErrorVector e{d(rng), d(rng), d(rng)};
    const auto m = error_unitary(e);
    worst = std::max(worst, max_abs(m.adjoint() * m - Eigen::Matrix2cd::Identity()));
    worst_oracle = std::max(worst_oracle, max_abs(m - pauli_unitary(e)));
  }
  CHECK(worst < 1e-12);
  CHECK(worst_oracle < 1e-15);
}

TEST_CASE("perturbed ground state examples") {
  const auto g = perturbed_ground_state({});
  CHECK(std::abs(g(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(g(1, 1)) < 1e-15);

  const auto flip = perturbed_ground_state({1, 0, 0});
  CHECK(std::abs(flip(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs(flip(0, 1) - cd(0, -0.5)) < 1e-15);
  CHECK(std::abs(flip(1, 0) - cd(0, 0.5)) < 1e-15);
  CHECK(flip.bloch().y == doctest::Approx(1.0));
  CHECK(error_probability({1, 0, 0}) == 0.5);

  const ErrorVector e{0.1, 0.2, 0.3};
  const auto rho = perturbed_ground_state(e);
  const double p = 0.05 / 1.14;
  CHECK(p == doctest::Approx(0.043860).epsilon(1e-5));
  CHECK(rho(1, 1).real() == doctest::Approx(p).epsilon(1e-14));
  CHECK(rho(0, 0).real() == doctest::Approx(1 - p).epsilon(1e-14));
  CHECK(error_probability(e) == doctest::Approx(p).epsilon(1e-14));
  CHECK(ground_fidelity(e) == doctest::Approx(0.956140).epsilon(1e-6));
  CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-12));

  // Direct matrix oracle.
  const Eigen::Matrix2cd u = pauli_unitary(e);
  Eigen::Matrix2cd ground = Eigen::Matrix2cd::Zero();
  ground(0, 0) = 1;
  CHECK(max_abs(rho.matrix() - u * ground * u.adjoint()) < 1e-15);
}

TEST_CASE("error probability") {
  for (double z : {0.0, 0.5, 3.0, -7.0}) CHECK(error_probability({0, 0, z}) == 0.0);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const ErrorVector e{d(rng), d(rng), d(rng)};
    const double p = error_probability(e);
    CHECK(p >= 0.0);
    CHECK(p < 1.0);
    worst = std::max(worst, std::abs(ground_fidelity(e) + p - 1.0));
    const auto rho = perturbed_ground_state(e);
    CHECK(std::abs(rho(1, 1).real() - p) < 1e-12);
    CHECK(std::abs(transverse_bloch_magnitude(e) - 2 * std::abs(rho(0, 1))) < 1e-12);
    // Closed-form phase equals arg(2 rho_10).
    if (std::abs(rho(1, 0)) > 1e-9) {
      const double diff = std::remainder(bloch_phase(e) - std::arg(rho(1, 0)), 2 * pi);
      CHECK(std::abs(diff) < 1e-12);
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("error phase tangent form") {
  CHECK(error_phase({0, 0, 1}) == doctest::Approx(pi / 2));
  CHECK(error_phase({0, 1, 0}) == doctest::Approx(pi));
  CHECK(error_phase({1, 0, 0}) == 0.0);
  CHECK(error_phase({}) == 0.0);
  // arg(rho_10) for the x flip is pi/2 (P_y = 1), which the tangent form misses.
  CHECK(bloch_phase({1, 0, 0}) == doctest::Approx(pi / 2));
  CHECK(bloch_phase({0, 1, 0}) == doctest::Approx(pi));
  CHECK(bloch_phase({0, 0, 1}) == 0.0);
  // The two agree when ex = 0 and ez = 0.
  for (double y : {-1.5, -0.2, 0.3, 2.0}) CHECK(error_phase({0, y, 0}) == doctest::Approx(bloch_phase({0, y, 0})));
}

TEST_CASE("ensemble average") {
  const auto none = ensemble_average_state({0, 0, 0, 1}, 100);
  CHECK(none.mean_p == 0.0);
  CHECK(none.state(0, 0).real() == 1.0);
  CHECK(none.state(1, 1).real() == 0.0);

  const std::size_t n = 10000;
  for (double s : {0.01, 0.03, 0.05}) {
    const ErrorSampler sampler{s, s, s, 42};
    const auto avg = ensemble_average_state(sampler, n);
    CHECK(avg.n == n);
    // Leading order 2 s^2; the next order -(2 s^2)(4 s^2) is well inside 3 sigma.
    CHECK(std::abs(avg.mean_p - 2 * s * s) < 3 * avg.stderr_p + 8 * s * s * s * s);
    CHECK(avg.offdiag_magnitude <= 5.0 / std::sqrt(static_cast<double>(n)));
    CHECK(avg.state(1, 1).real() == doctest::Approx(avg.mean_p).epsilon(1e-12));
    const auto sp = eigenvalues(avg.state);
    CHECK(sp.low >= -1e-12);
  }
}

TEST_CASE("ensemble average is deterministic") {
  const ErrorSampler sampler{0.2, 0.1, 0.3, 9};
  const auto ref = ensemble_average_state(sampler, 5000, ExecutionPolicy::serial());
  for (int t : {1, 2, 4}) {
    const auto par = ensemble_average_state(sampler, 5000, ExecutionPolicy::openmp(t));
    CHECK(par.mean_p == ref.mean_p);
    CHECK(par.stderr_p == ref.stderr_p);
    CHECK(par.offdiag_magnitude == ref.offdiag_magnitude);
    CHECK(par.state.matrix() == ref.state.matrix());
  }
  const auto a = sampler.sample(17), b = sampler.sample(17);
  CHECK(a.x == b.x);
  CHECK(a.z == b.z);
}
