#pragma once

#include "spindeph/dephasing_core.hpp"
#include "spindeph/mechanisms.hpp"
#include "spindeph/parallel.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace spindeph {

struct Grid {
  double min = 0.0;
  double max = 1.0;
  std::size_t count = 2;
  bool log = false;

  /// "min:max:count:lin" or "min:max:count:log". Throws ConfigError.
  static Grid parse(std::string_view text);
  /// Throws ConfigError unless count >= 2, min < max and (log -> min > 0).
  void validate() const;
  std::vector<double> points() const;
};

struct SweepSpec {
  Channel base;
  std::string parameter;
  Grid grid;
  Convention convention = Convention::Static;
};

struct SweepTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// One row per grid point, in grid order. Column sets:
///   slow-noise channels: <param>,polarization_ratio,variance_rad2_s2,tau_c_s,
///                        td_<convention>_s,polarized
///   phonon:              <param>,t_over_theta,rate_exact_per_s,
///                        rate_factorial_per_s,low_temperature_regime
SweepTable run_sweep(const SweepSpec& spec, ExecutionPolicy policy = {});

void write_csv(std::ostream& os, const SweepTable& table);

}  // namespace spindeph
