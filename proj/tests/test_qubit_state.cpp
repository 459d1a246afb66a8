#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spindeph/qubit_state.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <random>

using namespace spindeph;
using cd = std::complex<double>;

namespace {

BlochState random_unit_bloch(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  const double x = n(rng), y = n(rng), z = n(rng);
  const double r = std::sqrt(x * x + y * y + z * z);
  return {x / r, y / r, z / r};
}

// Oracle: Eigen's self-adjoint solver, eigenvalues sorted ascending.
Spectrum reference_eigenvalues(const Eigen::Matrix2cd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(m, Eigen::EigenvaluesOnly);
  return {es.eigenvalues()(1), es.eigenvalues()(0)};
}

}  // namespace

TEST_CASE("density_from_bloch") {
  const auto g = density_from_bloch({0, 0, 1});
  CHECK(g(0, 0) == cd(1, 0));
  CHECK(g(1, 1) == cd(0, 0));
  CHECK(std::abs(g(0, 1)) == 0.0);

  const auto eq = density_from_bloch({1, 0, 0});
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) CHECK(std::abs(eq(r, c) - cd(0.5, 0)) < 1e-15);

  const auto tilted = density_from_bloch({0.6, 0, 0.8}, std::numbers::pi / 2);
  CHECK(std::abs(tilted(0, 1) - cd(0, 0.3)) < 1e-15);
  CHECK(std::abs(tilted(1, 0) - cd(0, -0.3)) < 1e-15);
  CHECK(tilted(0, 0).real() == doctest::Approx(0.9));

  const auto b = density_from_bloch({0.3, -0.4, 0.5}).bloch();
  CHECK(b.x == doctest::Approx(0.3));
  CHECK(b.y == doctest::Approx(-0.4));
  CHECK(b.z == doctest::Approx(0.5));
  CHECK_THROWS_AS(density_from_bloch({1, 1, 0}), std::domain_error);
}

TEST_CASE("DensityMatrix validation") {
  Eigen::Matrix2cd m;
  m << 0.5, cd(0.1, 0.2), cd(0.1, 0.2), 0.5;  // not Hermitian
  CHECK_THROWS_AS(DensityMatrix{m}, std::domain_error);
  m << 0.6, 0, 0, 0.6;  // trace 1.2
  CHECK_THROWS_AS(DensityMatrix{m}, std::domain_error);
  m << 1.2, 0, 0, -0.2;  // negative eigenvalue
  CHECK_THROWS_AS(DensityMatrix{m}, std::domain_error);
  m << 0.5, 0.5, 0.5, 0.5;
  CHECK(DensityMatrix{m}.purity() == doctest::Approx(1.0));
}

TEST_CASE("apply_dephasing") {
  const BlochState s{0.6, 0, 0.8};
  CHECK(apply_dephasing(s, 0.0).matrix().isApprox(density_from_bloch(s).matrix(), 1e-15));

  const auto mixed = apply_dephasing(BlochState{1, 0, 0}, 800.0);
  CHECK(mixed.matrix().isApprox(Eigen::Matrix2cd::Identity() * 0.5, 1e-15));
  const auto half = apply_dephasing(BlochState{1, 0, 0}, std::log(2.0));
  CHECK(std::abs(half(0, 1) - cd(0.25, 0)) < 1e-15);
  CHECK(half(0, 0).real() == 0.5);

  // Composition on the off-diagonals.
  const auto rho = density_from_bloch({0.3, 0.4, std::sqrt(0.75)}, 0.7);
  const auto twice = apply_dephasing(apply_dephasing(rho, 0.4), 1.1);
  const auto once = apply_dephasing(rho, 1.5);
  CHECK(std::abs(twice(0, 1) - once(0, 1)) < 1e-12);
  CHECK(std::abs(twice(1, 0) - once(1, 0)) < 1e-12);
  CHECK_THROWS_AS(apply_dephasing(s, -0.1), std::domain_error);
}

TEST_CASE("dephased_eigenvalues examples") {
  const auto pure = dephased_eigenvalues({0, 0, 1}, 0.0);
  CHECK(pure.high == doctest::Approx(1.0));
  CHECK(pure.low == doctest::Approx(0.0));
  const auto eq = dephased_eigenvalues({1, 0, 0}, 1e3);
  CHECK(eq.high == doctest::Approx(0.5));
  CHECK(eq.low == doctest::Approx(0.5));

  const double gamma = std::log(2.0);  // e^{-2 Gamma} = 0.25
  const auto sp = dephased_eigenvalues({0.6, 0, 0.8}, gamma);
  const auto ref = reference_eigenvalues(apply_dephasing(BlochState{0.6, 0, 0.8}, gamma).matrix());
  CHECK(sp.high == doctest::Approx(0.9272).epsilon(1e-4));
  CHECK(sp.low == doctest::Approx(0.0728).epsilon(1e-3));
  CHECK(std::abs(sp.high - ref.high) < 1e-12);
  CHECK(std::abs(sp.low - ref.low) < 1e-12);

  CHECK_THROWS_AS(dephased_eigenvalues({0.5, 0, 0.5}, 0.1), std::domain_error);
}

TEST_CASE("dephased_eigenvalues against a 2x2 eigensolver") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> g(0.0, 10.0);
  std::uniform_real_distribution<double> ph(-std::numbers::pi, std::numbers::pi);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto s = random_unit_bloch(rng);
    const double gamma = g(rng);
    const auto rho = apply_dephasing(density_from_bloch(s, ph(rng)), gamma);
    const auto sp = dephased_eigenvalues(s, gamma);
    const auto ref = reference_eigenvalues(rho.matrix());
    worst = std::max({worst, std::abs(sp.high - ref.high), std::abs(sp.low - ref.low)});
    CHECK(rho.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(rho(0, 1) - std::conj(rho(1, 0))) == 0.0);
    CHECK(sp.low >= -1e-12);
    CHECK(sp.high <= 1.0 + 1e-12);
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("generic eigenvalues") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    BlochState s{u(rng), u(rng), u(rng)};
    const double r = std::sqrt(s.norm_squared());
    if (r > 1.0) s = {s.x / r * 0.99, s.y / r * 0.99, s.z / r * 0.99};
    const auto rho = density_from_bloch(s);
    const auto sp = eigenvalues(rho);
    const auto ref = reference_eigenvalues(rho.matrix());
    CHECK(std::abs(sp.high - ref.high) < 1e-12);
    CHECK(std::abs(sp.low - ref.low) < 1e-12);
  }
}

TEST_CASE("limiting_populations") {
  auto p = limiting_populations({0, 0, 1});
  CHECK(p.high == 1.0);
  CHECK(p.low == 0.0);
  p = limiting_populations({1, 0, 0});
  CHECK(p.high == 0.5);
  CHECK(p.low == 0.5);
  p = limiting_populations({0.6, 0, 0.8});
  CHECK(p.high == doctest::Approx(0.9));
  CHECK(p.low == doctest::Approx(0.1));
  // Fully dephased eigenvalues approach the populations.
  const auto sp = dephased_eigenvalues({0.6, 0, 0.8}, 50.0);
  CHECK(sp.high == doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("fidelity") {
  const auto up = density_from_bloch({0, 0, 1});
  const auto down = density_from_bloch({0, 0, -1});
  const auto mixed = density_from_bloch({0, 0, 0});
  const auto tilted = density_from_bloch({0.6, 0, 0.8}, 0.3);
  CHECK(fidelity(tilted, tilted) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fidelity(up, down) == 0.0);
  CHECK(fidelity(up, mixed) == doctest::Approx(0.5));
  CHECK(fidelity(tilted, up) == fidelity(up, tilted));
  CHECK(fidelity(tilted, mixed) == doctest::Approx(fidelity(mixed, tilted)).epsilon(1e-15));
}
