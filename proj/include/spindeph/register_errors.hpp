#pragma once

/// \file
/// One-qubit error model for register state preparation.
///
/// An error vector eps rotates the qubit by
///   U = (I + i eps.sigma) / sqrt(1 + |eps|^2)
///     = 1/sqrt(1+|eps|^2) [[1 + i ez, i ex + ey], [i ex - ey, 1 - i ez]],
/// which is exactly unitary for real eps. Applied to |0><0| it leaves a pure
/// state with error probability p = (ex^2 + ey^2) / (1 + |eps|^2) and a
/// random transverse phase. Averaging many independent register copies
/// turns those random phases into a mixed state with populations
/// (1 - <p>, <p>).

#include "spindeph/parallel.hpp"
#include "spindeph/qubit_state.hpp"

#include <Eigen/Core>
#include <cstdint>

namespace spindeph {

struct ErrorVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm_squared() const { return x * x + y * y + z * z; }
};

Eigen::Matrix2cd error_unitary(const ErrorVector& e);

/// U |0><0| U^dagger.
DensityMatrix perturbed_ground_state(const ErrorVector& e);

double error_probability(const ErrorVector& e);

/// atan2(ex ey + ez, ex ez - ey), 0 when both arguments vanish. This is the
/// commonly quoted tangent form; it does not track arg(rho_10) in general.
/// See bloch_phase.
double error_phase(const ErrorVector& e);

/// arg(P+) = arg(2 rho_10) of the perturbed ground state, in closed form
/// atan2(ex + ey ez, ex ez - ey); 0 when P+ = 0.
double bloch_phase(const ErrorVector& e);

/// |P+-| = 2 sqrt((1 + ez^2)(ex^2 + ey^2)) / (1 + |eps|^2).
double transverse_bloch_magnitude(const ErrorVector& e);

/// tr(rho_eps |0><0|) = 1 - p.
double ground_fidelity(const ErrorVector& e);

/// Independent zero-mean Gaussian components, one frozen sample per
/// register copy.
struct ErrorSampler {
  double sigma_x = 0.0;
  double sigma_y = 0.0;
  double sigma_z = 0.0;
  std::uint64_t seed = 0;

  /// Sample for register copy `index`; deterministic in (seed, index).
  ErrorVector sample(std::uint64_t index) const;
};

struct EnsembleAverage {
  DensityMatrix state;
  std::size_t n = 0;
  double mean_p = 0.0;
  double stderr_p = 0.0;
  double offdiag_magnitude = 0.0;
};

EnsembleAverage ensemble_average_state(const ErrorSampler& sampler, std::size_t n,
                                       ExecutionPolicy policy = {});

}  // namespace spindeph
