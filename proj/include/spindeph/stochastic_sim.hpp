#pragma once

/// \file
/// Monte Carlo check of the analytic coherence envelope.
///
/// Frequency noise is an Ornstein-Uhlenbeck process (stationary Gaussian,
/// exponential correlation) sampled exactly as AR(1):
///   dw_0 ~ N(0, var),  dw_{k+1} = rho dw_k + sqrt(var (1 - rho^2)) xi_k,
///   rho = exp(-dt / tau_c).
/// The phase is the trapezoidal running integral of dw, and the ensemble
/// mean of exp(i phi(t)) is compared with exp(-Gamma(t)).

#include "spindeph/dephasing_core.hpp"
#include "spindeph/parallel.hpp"

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace spindeph {

struct SimulationPlan {
  ExponentialCorrelation correlation;
  double t_max = 1.0;
  std::size_t n_steps = 1000;
  std::size_t n_trajectories = 10000;
  std::size_t n_output = 50;
  std::uint64_t master_seed = 0;

  double dt() const { return t_max / static_cast<double>(n_steps); }
  /// Step index of output point j (0-based); the last one is n_steps.
  std::size_t output_step(std::size_t j) const { return (j + 1) * n_steps / n_output; }
};

/// Reference plans. Static: var = 1 s^-2, t_max = 3 s, tau_c = 1e6 t_max.
/// Markovian: var = 3000 s^-2, t_max = 1 s, tau_c = 1e-3 t_max (Gamma(t_max) ~ 3).
/// Both use 1e4 trajectories and 50 output points.
SimulationPlan static_regime_plan(std::uint64_t seed);
SimulationPlan markovian_regime_plan(std::uint64_t seed);

/// Thrown when dt does not resolve the correlation time (dt <= tau_c/20) or
/// the phase increment (dt <= 0.05/sqrt(var)).
class PlanRejected : public std::invalid_argument {
 public:
  PlanRejected(const std::string& what, std::size_t required_steps)
      : std::invalid_argument(what), required_steps_(required_steps) {}
  std::size_t required_steps() const { return required_steps_; }

 private:
  std::size_t required_steps_;
};

/// Smallest n_steps satisfying both resolution limits.
std::size_t required_steps(const ExponentialCorrelation& c, double t_max);
void validate(const SimulationPlan& plan);

/// n_steps + 1 samples of the frequency deviation for one trajectory.
std::vector<double> generate_trajectory(const SimulationPlan& plan, std::uint64_t trajectory_index);

/// Cumulative trapezoid; phi[0] = 0.
std::vector<double> accumulate_phase(std::span<const double> trajectory, double dt);

/// Phases at the output times, row-major [trajectory][output point].
struct PhaseTable {
  std::vector<double> times;
  std::size_t n_trajectories = 0;
  std::vector<double> phases;

  double at(std::size_t trajectory, std::size_t point) const {
    return phases[trajectory * times.size() + point];
  }
};

PhaseTable sample_phases(const SimulationPlan& plan, ExecutionPolicy policy = {});

struct EnsembleCoherence {
  std::vector<double> times;
  std::vector<std::complex<double>> mean_coherence;
  /// sqrt(sum |e^{i phi} - mean|^2 / (N (N - 1))).
  std::vector<double> std_error;
  /// <phi^2> and its standard error; <phi^2>/2 estimates Gamma(t).
  std::vector<double> mean_phase_sq;
  std::vector<double> phase_sq_std_error;
  std::size_t n_trajectories = 0;
};

/// Fixed-order sequential reduction over trajectories.
EnsembleCoherence summarize(const PhaseTable& table);

EnsembleCoherence ensemble_coherence(const SimulationPlan& plan, ExecutionPolicy policy = {});

class DegenerateStatistics : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AnalyticComparison {
  std::vector<double> analytic_envelope;
  std::vector<double> z;
  double max_z = 0.0;
};

/// z = | |mean| - exp(-Gamma) | / std_error per time. Throws
/// DegenerateStatistics when std_error is 0 but the deviation is not.
AnalyticComparison compare_to_analytic(const EnsembleCoherence& result,
                                       const ExponentialCorrelation& correlation);

/// |<phi^2>/2 - Gamma(t)| / (std_error(<phi^2>)/2) per time. A zero spread
/// with zero deviation counts as 0.
std::vector<double> phase_variance_z(const EnsembleCoherence& result,
                                     const ExponentialCorrelation& correlation);

/// Columns: t,re_mean,im_mean,std_error,analytic_envelope,z
void write_csv(std::ostream& os, const EnsembleCoherence& result, const AnalyticComparison& cmp);

}  // namespace spindeph
