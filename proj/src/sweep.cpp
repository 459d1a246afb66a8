#include "spindeph/sweep.hpp"

#include "spindeph/config.hpp"
#include "spindeph/csv.hpp"

#include <fmt/format.h>
#include <omp.h>

#include <cmath>
#include <ostream>

namespace spindeph {

Grid Grid::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == std::string_view::npos ? colon : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 4) throw ConfigError(fmt::format("grid '{}' is not min:max:count:lin|log", text));
  Grid g;
  g.min = parse_number(parts[0]);
  g.max = parse_number(parts[1]);
  const double count = parse_number(parts[2]);
  if (count != std::floor(count) || count < 0) throw ConfigError("grid count must be a whole number");
  g.count = static_cast<std::size_t>(count);
  if (parts[3] == "log") {
    g.log = true;
  } else if (parts[3] != "lin") {
    throw ConfigError(fmt::format("grid spacing '{}' must be lin or log", parts[3]));
  }
  g.validate();
  return g;
}

void Grid::validate() const {
  if (count < 2) throw ConfigError("grid needs at least two points");
  if (!(min < max)) throw ConfigError("grid needs min < max");
  if (log && !(min > 0.0)) throw ConfigError("log grid needs min > 0");
}

std::vector<double> Grid::points() const {
  validate();
  std::vector<double> p(count);
  const double last = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / last;
    p[i] = log ? std::exp(std::log(min) + f * (std::log(max) - std::log(min))) : min + f * (max - min);
  }
  p.front() = min;
  p.back() = max;
  return p;
}

namespace {

std::vector<double> slow_noise_row(const Channel& ch, double value, Convention convention) {
  const auto corr = *channel_to_correlation(ch);
  const double ratio = std::visit(
      [](const auto& c) -> double {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, PhononRamanChannel>) {
          return 0.0;
        } else {
          return c.polarization_ratio();
        }
      },
      ch);
  return {value, ratio, corr.variance, corr.tau_c, decoherence_time(corr, convention),
          ratio > 1.0 ? 1.0 : 0.0};
}

std::vector<double> phonon_row(const PhononRamanChannel& ch, double value) {
  return {value, ch.reduced_temperature(), phonon_rate(ch, PhononMode::ExactIntegral),
          phonon_rate(ch, PhononMode::FactorialApprox), ch.low_temperature_regime() ? 1.0 : 0.0};
}

}  // namespace

SweepTable run_sweep(const SweepSpec& spec, ExecutionPolicy policy) {
  const auto points = spec.grid.points();
  // Rejects unknown parameters before any work is done.
  get_channel_parameter(spec.base, spec.parameter);

  SweepTable table;
  const bool phonon = std::holds_alternative<PhononRamanChannel>(spec.base);
  if (phonon) {
    table.header = {spec.parameter, "t_over_theta", "rate_exact_per_s", "rate_factorial_per_s",
                    "low_temperature_regime"};
  } else {
    table.header = {spec.parameter, "polarization_ratio", "variance_rad2_s2", "tau_c_s",
                    fmt::format("td_{}_s", to_string(spec.convention)), "polarized"};
  }
  table.rows.resize(points.size());

  auto compute = [&](std::size_t i) {
    Channel ch = spec.base;
    set_channel_parameter(ch, spec.parameter, points[i]);
    table.rows[i] = phonon ? phonon_row(std::get<PhononRamanChannel>(ch), points[i])
                           : slow_noise_row(ch, points[i], spec.convention);
  };

  const auto n = static_cast<std::int64_t>(points.size());
  if (policy.backend == Backend::Serial) {
    for (std::int64_t i = 0; i < n; ++i) compute(static_cast<std::size_t>(i));
  } else {
    // Exceptions may not cross the parallel region; collect the first one.
    std::exception_ptr failure;
    const int threads = policy.threads > 0 ? policy.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        compute(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  return table;
}

void write_csv(std::ostream& os, const SweepTable& table) {
  for (std::size_t c = 0; c < table.header.size(); ++c) os << (c ? "," : "") << table.header[c];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv::num(row[c]);
    os << '\n';
  }
}

}  // namespace spindeph
