#include "spindeph/stochastic_sim.hpp"

#include "spindeph/csv.hpp"

#include <fmt/format.h>
#include <omp.h>

#include <cmath>
#include <limits>
#include <ostream>

namespace spindeph {

namespace {

double step_limit(const ExponentialCorrelation& c) {
  double limit = std::numeric_limits<double>::infinity();
  if (!c.is_static()) limit = c.tau_c / 20.0;
  if (c.variance > 0.0) limit = std::min(limit, 0.05 / std::sqrt(c.variance));
  return limit;
}

// Fills row `i` of the table from trajectory i.
void simulate_row(const SimulationPlan& plan, std::size_t i, std::span<double> row) {
  const auto dw = generate_trajectory(plan, i);
  const auto phi = accumulate_phase(dw, plan.dt());
  for (std::size_t j = 0; j < plan.n_output; ++j) row[j] = phi[plan.output_step(j)];
}

}  // namespace

SimulationPlan static_regime_plan(std::uint64_t seed) {
  SimulationPlan plan;
  plan.t_max = 3.0;
  plan.correlation = {1.0, 1e6 * plan.t_max};
  plan.n_steps = 300;
  plan.master_seed = seed;
  return plan;
}

SimulationPlan markovian_regime_plan(std::uint64_t seed) {
  SimulationPlan plan;
  plan.t_max = 1.0;
  plan.correlation = {3000.0, 1e-3 * plan.t_max};
  plan.n_steps = 20000;
  plan.master_seed = seed;
  return plan;
}

std::size_t required_steps(const ExponentialCorrelation& c, double t_max) {
  const double limit = step_limit(c);
  if (!std::isfinite(limit)) return 1;
  return static_cast<std::size_t>(std::ceil(t_max / limit * (1.0 - 1e-12)));
}

void validate(const SimulationPlan& plan) {
  plan.correlation.validate();
  if (!(plan.t_max > 0.0)) throw std::invalid_argument("t_max must be positive");
  if (plan.n_output == 0) throw std::invalid_argument("need at least one output point");
  if (plan.n_trajectories < 2) throw std::invalid_argument("need at least two trajectories");
  const std::size_t needed = std::max(required_steps(plan.correlation, plan.t_max), plan.n_output);
  if (plan.n_steps < needed)
    throw PlanRejected(fmt::format("time step too coarse: n_steps = {} but at least {} required",
                                   plan.n_steps, needed),
                       needed);
}

std::vector<double> generate_trajectory(const SimulationPlan& plan, std::uint64_t trajectory_index) {
  validate(plan);
  const ExponentialCorrelation& c = plan.correlation;
  std::vector<double> dw(plan.n_steps + 1, 0.0);
  if (c.variance == 0.0) return dw;

  const double sigma = std::sqrt(c.variance);
  const double rho = c.is_static() ? 1.0 : std::exp(-plan.dt() / c.tau_c);
  // sqrt(1 - rho^2) with 1 - rho^2 = -expm1(-2 dt / tau_c)
  const double innovation =
      c.is_static() ? 0.0 : sigma * std::sqrt(-std::expm1(-2.0 * plan.dt() / c.tau_c));

  Engine engine = make_engine(plan.master_seed, trajectory_index);
  std::normal_distribution<double> normal;
  dw[0] = sigma * normal(engine);
  for (std::size_t k = 0; k < plan.n_steps; ++k) dw[k + 1] = rho * dw[k] + innovation * normal(engine);
  return dw;
}

std::vector<double> accumulate_phase(std::span<const double> trajectory, double dt) {
  std::vector<double> phi(trajectory.size(), 0.0);
  for (std::size_t k = 1; k < trajectory.size(); ++k)
    phi[k] = phi[k - 1] + 0.5 * dt * (trajectory[k - 1] + trajectory[k]);
  return phi;
}

PhaseTable sample_phases(const SimulationPlan& plan, ExecutionPolicy policy) {
  validate(plan);
  PhaseTable table;
  table.n_trajectories = plan.n_trajectories;
  table.times.resize(plan.n_output);
  for (std::size_t j = 0; j < plan.n_output; ++j)
    table.times[j] = static_cast<double>(plan.output_step(j)) * plan.dt();
  table.phases.assign(plan.n_trajectories * plan.n_output, 0.0);

  const auto n = static_cast<std::int64_t>(plan.n_trajectories);
  auto row = [&](std::int64_t i) {
    return std::span<double>(table.phases).subspan(static_cast<std::size_t>(i) * plan.n_output,
                                                   plan.n_output);
  };

  if (policy.backend == Backend::Serial) {
    for (std::int64_t i = 0; i < n; ++i) simulate_row(plan, static_cast<std::size_t>(i), row(i));
  } else {
    const int threads = policy.threads > 0 ? policy.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
    for (std::int64_t i = 0; i < n; ++i) simulate_row(plan, static_cast<std::size_t>(i), row(i));
  }
  return table;
}

EnsembleCoherence summarize(const PhaseTable& table) {
  const std::size_t m = table.times.size();
  const std::size_t n = table.n_trajectories;
  const double nd = static_cast<double>(n);

  EnsembleCoherence out;
  out.times = table.times;
  out.n_trajectories = n;
  out.mean_coherence.assign(m, {0.0, 0.0});
  out.std_error.assign(m, 0.0);
  out.mean_phase_sq.assign(m, 0.0);
  out.phase_sq_std_error.assign(m, 0.0);

  for (std::size_t j = 0; j < m; ++j) {
    std::complex<double> sum{0.0, 0.0};
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double phi = table.at(i, j);
      sum += std::polar(1.0, phi);
      sum_sq += phi * phi;
    }
    const std::complex<double> mean = sum / nd;
    const double mean_sq = sum_sq / nd;

    // Second pass for the spreads; two-pass keeps the zero-noise case exact.
    double dev = 0.0;
    double dev_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double phi = table.at(i, j);
      dev += std::norm(std::polar(1.0, phi) - mean);
      const double d = phi * phi - mean_sq;
      dev_sq += d * d;
    }
    out.mean_coherence[j] = mean;
    out.std_error[j] = std::sqrt(dev / (nd * (nd - 1.0)));
    out.mean_phase_sq[j] = mean_sq;
    out.phase_sq_std_error[j] = std::sqrt(dev_sq / (nd * (nd - 1.0)));
  }
  return out;
}

EnsembleCoherence ensemble_coherence(const SimulationPlan& plan, ExecutionPolicy policy) {
  return summarize(sample_phases(plan, policy));
}

AnalyticComparison compare_to_analytic(const EnsembleCoherence& result,
                                       const ExponentialCorrelation& correlation) {
  AnalyticComparison cmp;
  const std::size_t m = result.times.size();
  if (result.mean_coherence.size() != m || result.std_error.size() != m)
    throw std::invalid_argument("coherence result has mismatched grids");
  cmp.analytic_envelope.resize(m);
  cmp.z.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double expected = coherence_envelope(correlation, result.times[j]);
    const double deviation = std::abs(std::abs(result.mean_coherence[j]) - expected);
    double z = 0.0;
    if (result.std_error[j] > 0.0) {
      z = deviation / result.std_error[j];
    } else if (deviation > 0.0) {
      throw DegenerateStatistics(
          fmt::format("zero standard error with deviation {} at t = {}", deviation, result.times[j]));
    }
    cmp.analytic_envelope[j] = expected;
    cmp.z[j] = z;
    cmp.max_z = std::max(cmp.max_z, z);
  }
  return cmp;
}

std::vector<double> phase_variance_z(const EnsembleCoherence& result,
                                     const ExponentialCorrelation& correlation) {
  std::vector<double> z(result.times.size(), 0.0);
  for (std::size_t j = 0; j < z.size(); ++j) {
    const double deviation = std::abs(0.5 * result.mean_phase_sq[j] - gamma_exact(correlation, result.times[j]));
    const double se = 0.5 * result.phase_sq_std_error[j];
    if (se > 0.0) {
      z[j] = deviation / se;
    } else if (deviation > 0.0) {
      z[j] = std::numeric_limits<double>::infinity();
    }
  }
  return z;
}

void write_csv(std::ostream& os, const EnsembleCoherence& result, const AnalyticComparison& cmp) {
  os << "t,re_mean,im_mean,std_error,analytic_envelope,z\n";
  for (std::size_t j = 0; j < result.times.size(); ++j) {
    os << csv::num(result.times[j]) << ',' << csv::num(result.mean_coherence[j].real()) << ','
       << csv::num(result.mean_coherence[j].imag()) << ',' << csv::num(result.std_error[j]) << ','
       << csv::num(cmp.analytic_envelope[j]) << ',' << csv::num(cmp.z[j]) << '\n';
  }
}

}  // namespace spindeph
