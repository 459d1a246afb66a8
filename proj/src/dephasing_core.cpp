#include "spindeph/dephasing_core.hpp"

#include "spindeph/csv.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace spindeph {

namespace {

// r - 1 + e^{-r}. The direct form loses about half the digits once r drops
// below ~1e-3, so small r uses the alternating Taylor series. That keeps the
// switchover at kSeriesSwitchover continuous to well below 1e-12.
double kernel(double r) {
  if (r < kSeriesSwitchover) return r * r * (0.5 - r / 6.0 + r * r / 24.0);
  if (r < 0.5) {
    double term = 0.5 * r * r;
    double sum = term;
    for (int n = 3; n < 30; ++n) {
      term *= -r / n;
      sum += term;
      if (std::abs(term) < 1e-18 * sum) break;
    }
    return sum;
  }
  return r + std::expm1(-r);
}

void check_time(double t) {
  if (!(t >= 0.0)) throw std::domain_error("time must be nonnegative");
}

}  // namespace

void ExponentialCorrelation::validate() const {
  if (!(variance >= 0.0) || !std::isfinite(variance))
    throw std::domain_error("correlation variance must be finite and nonnegative");
  if (!(tau_c > 0.0)) throw std::domain_error("correlation time must be positive");
}

std::string_view to_string(Convention c) {
  switch (c) {
    case Convention::Static: return "static";
    case Convention::Markovian: return "markovian";
    case Convention::UnitGamma: return "unit-gamma";
  }
  return "?";
}

std::optional<Convention> parse_convention(std::string_view s) {
  if (s == "static") return Convention::Static;
  if (s == "markovian") return Convention::Markovian;
  if (s == "unit-gamma") return Convention::UnitGamma;
  return std::nullopt;
}

double gamma_exact(const ExponentialCorrelation& c, double t) {
  check_time(t);
  c.validate();
  if (c.is_static()) return gamma_static(c, t);
  return c.variance * c.tau_c * c.tau_c * kernel(t / c.tau_c);
}

double gamma_static(const ExponentialCorrelation& c, double t) {
  check_time(t);
  return 0.5 * c.variance * t * t;
}

double decoherence_time(const ExponentialCorrelation& c, Convention convention) {
  c.validate();
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (c.variance == 0.0) return inf;
  switch (convention) {
    case Convention::Static:
      return 1.0 / std::sqrt(c.variance);
    case Convention::Markovian:
      return c.is_static() ? inf : 1.0 / (c.variance * c.tau_c);
    case Convention::UnitGamma: {
      double hi = std::sqrt(2.0 / c.variance);
      while (gamma_exact(c, hi) < 1.0) hi *= 2.0;
      auto f = [&c](double t) { return gamma_exact(c, t) - 1.0; };
      auto done = [](double a, double b) { return std::abs(b - a) <= 1e-10 * std::abs(b); };
      const auto [lo, up] = boost::math::tools::bisect(f, 0.0, hi, done);
      return 0.5 * (lo + up);
    }
  }
  return inf;
}

double coherence_envelope(const ExponentialCorrelation& c, double t) {
  return std::exp(-gamma_exact(c, t));
}

DecoherenceProfile make_profile(const ExponentialCorrelation& c, std::vector<double> times) {
  DecoherenceProfile p;
  p.gamma_values.reserve(times.size());
  double previous = -1.0;
  for (double t : times) {
    if (t < previous) throw std::invalid_argument("profile times must be sorted");
    previous = t;
    p.gamma_values.push_back(gamma_exact(c, t));
  }
  p.times = std::move(times);
  return p;
}

void write_csv(std::ostream& os, const DecoherenceProfile& profile) {
  os << "t_seconds,gamma,envelope\n";
  for (std::size_t i = 0; i < profile.times.size(); ++i) {
    const double g = profile.gamma_values[i];
    os << csv::num(profile.times[i]) << ',' << csv::num(g) << ',' << csv::num(std::exp(-g)) << '\n';
  }
}

}  // namespace spindeph
