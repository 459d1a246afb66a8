#include "spindeph/register_errors.hpp"

#include <omp.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

namespace spindeph {

namespace {

using cd = std::complex<double>;

// Entries of U|0> (unnormalized) and the squared norm.
struct GroundImage {
  cd up;
  cd down;
  double norm2;
};

GroundImage ground_image(const ErrorVector& e) {
  return {cd{1.0, e.z}, cd{-e.y, e.x}, 1.0 + e.norm_squared()};
}

double atan2_or_zero(double y, double x) { return (y == 0.0 && x == 0.0) ? 0.0 : std::atan2(y, x); }

}  // namespace

Eigen::Matrix2cd error_unitary(const ErrorVector& e) {
  const double scale = 1.0 / std::sqrt(1.0 + e.norm_squared());
  Eigen::Matrix2cd u;
  u << cd{1.0, e.z}, cd{e.y, e.x},
       cd{-e.y, e.x}, cd{1.0, -e.z};
  return scale * u;
}

DensityMatrix perturbed_ground_state(const ErrorVector& e) {
  const Eigen::Matrix2cd u = error_unitary(e);
  Eigen::Matrix2cd ground = Eigen::Matrix2cd::Zero();
  ground(0, 0) = 1.0;
  return DensityMatrix{u * ground * u.adjoint()};
}

double error_probability(const ErrorVector& e) {
  return (e.x * e.x + e.y * e.y) / (1.0 + e.norm_squared());
}

double error_phase(const ErrorVector& e) { return atan2_or_zero(e.x * e.y + e.z, e.x * e.z - e.y); }

double bloch_phase(const ErrorVector& e) {
  // rho_10 = (i ex - ey)(1 - i ez) / (1 + |eps|^2)
  return atan2_or_zero(e.x + e.y * e.z, e.x * e.z - e.y);
}

double transverse_bloch_magnitude(const ErrorVector& e) {
  return 2.0 * std::sqrt((1.0 + e.z * e.z) * (e.x * e.x + e.y * e.y)) / (1.0 + e.norm_squared());
}

double ground_fidelity(const ErrorVector& e) {
  Eigen::Matrix2cd ground = Eigen::Matrix2cd::Zero();
  ground(0, 0) = 1.0;
  return fidelity(perturbed_ground_state(e), DensityMatrix{ground});
}

ErrorVector ErrorSampler::sample(std::uint64_t index) const {
  if (sigma_x < 0.0 || sigma_y < 0.0 || sigma_z < 0.0)
    throw std::domain_error("error sampler: standard deviations must be nonnegative");
  Engine engine = make_engine(seed, index);
  std::normal_distribution<double> normal;
  const double gx = normal(engine);
  const double gy = normal(engine);
  const double gz = normal(engine);
  return {sigma_x * gx, sigma_y * gy, sigma_z * gz};
}

EnsembleAverage ensemble_average_state(const ErrorSampler& sampler, std::size_t n,
                                       ExecutionPolicy policy) {
  if (n == 0) throw std::invalid_argument("ensemble_average_state: need at least one copy");

  // Per copy: rho_00, rho_10 (re, im), p. rho_11 = p and rho_01 = conj(rho_10).
  struct Slot {
    double rho00;
    cd rho10;
    double p;
  };
  std::vector<Slot> slots(n);
  auto fill = [&](std::size_t i) {
    const ErrorVector e = sampler.sample(i);
    const GroundImage g = ground_image(e);
    slots[i] = {std::norm(g.up) / g.norm2, g.down * std::conj(g.up) / g.norm2, error_probability(e)};
  };

  const auto count = static_cast<std::int64_t>(n);
  if (policy.backend == Backend::Serial) {
    for (std::int64_t i = 0; i < count; ++i) fill(static_cast<std::size_t>(i));
  } else {
    const int threads = policy.threads > 0 ? policy.threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::int64_t i = 0; i < count; ++i) fill(static_cast<std::size_t>(i));
  }

  const double nd = static_cast<double>(n);
  double rho00 = 0.0;
  cd rho10{0.0, 0.0};
  double sum_p = 0.0;
  for (const Slot& s : slots) {
    rho00 += s.rho00;
    rho10 += s.rho10;
    sum_p += s.p;
  }
  rho00 /= nd;
  rho10 /= nd;
  const double mean_p = sum_p / nd;
  double dev = 0.0;
  for (const Slot& s : slots) dev += (s.p - mean_p) * (s.p - mean_p);

  Eigen::Matrix2cd avg;
  avg << rho00, std::conj(rho10),
         rho10, 1.0 - rho00;
  return {DensityMatrix{avg}, n, mean_p, n > 1 ? std::sqrt(dev / (nd * (nd - 1.0))) : 0.0,
          std::abs(rho10)};
}

}  // namespace spindeph
