#pragma once

/// \file
/// Dephasing exponent Gamma(t) for Gaussian frequency noise with an
/// exponentially decaying correlation function
///
///   <dw(t) dw(0)> = variance * exp(-|t| / tau_c),
///   Gamma(t) = integral_0^t (t - s) <dw(s) dw(0)> ds
///            = variance tau_c^2 (t/tau_c - 1 + exp(-t/tau_c)).

#include <iosfwd>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

namespace spindeph {

struct ExponentialCorrelation {
  double variance = 0.0;  // rad^2/s^2
  double tau_c = std::numeric_limits<double>::infinity();  // s; +inf means frozen noise

  static ExponentialCorrelation frozen(double variance) { return {variance, std::numeric_limits<double>::infinity()}; }
  bool is_static() const { return tau_c == std::numeric_limits<double>::infinity(); }
  /// Throws std::domain_error unless variance >= 0 and tau_c > 0.
  void validate() const;
};

enum class Convention { Static, Markovian, UnitGamma };

std::string_view to_string(Convention c);
std::optional<Convention> parse_convention(std::string_view s);

/// Below this t/tau_c the closed form is replaced by its Taylor series.
inline constexpr double kSeriesSwitchover = 1e-6;

double gamma_exact(const ExponentialCorrelation& c, double t);

/// variance t^2 / 2, the t << tau_c limit.
double gamma_static(const ExponentialCorrelation& c, double t);

/// Decoherence time under the chosen convention:
///   Static    -> variance^{-1/2}
///   Markovian -> 1 / (variance tau_c)
///   UnitGamma -> t with gamma_exact(t) = 1 (bisection, 1e-9 relative)
/// Zero variance returns +infinity.
double decoherence_time(const ExponentialCorrelation& c, Convention convention);

/// exp(-gamma_exact(c, t)).
double coherence_envelope(const ExponentialCorrelation& c, double t);

struct DecoherenceProfile {
  std::vector<double> times;
  std::vector<double> gamma_values;
};

DecoherenceProfile make_profile(const ExponentialCorrelation& c, std::vector<double> times);

/// Columns: t_seconds,gamma,envelope
void write_csv(std::ostream& os, const DecoherenceProfile& profile);

}  // namespace spindeph
