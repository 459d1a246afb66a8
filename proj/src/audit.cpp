#include "spindeph/audit.hpp"

#include "spindeph/dephasing_core.hpp"
#include "spindeph/mechanisms.hpp"
#include "spindeph/register_errors.hpp"

#include <fmt/format.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

namespace spindeph {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Approx: return "approx";
    case Verdict::Discrepant: return "discrepant";
    case Verdict::TypoSuspected: return "typo-suspected";
  }
  return "?";
}

Verdict classify(double ratio) {
  if (!std::isfinite(ratio) || ratio <= 0.0) return Verdict::Discrepant;
  if (std::abs(ratio - 1.0) <= 0.15) return Verdict::Match;
  if (ratio >= 0.5 && ratio <= 2.0) return Verdict::Approx;
  const double decade = std::round(std::log10(ratio));
  if (std::abs(decade) >= 3.0 && std::abs(ratio / std::pow(10.0, decade) - 1.0) <= 0.15)
    return Verdict::TypoSuspected;
  return Verdict::Discrepant;
}

AuditEntry make_entry(std::string claim_id, std::string description, double quoted,
                      double computed, std::string units) {
  const double ratio = (std::isfinite(quoted) && std::isfinite(computed) && quoted != 0.0)
                           ? computed / quoted
                           : std::numeric_limits<double>::infinity();
  return {std::move(claim_id), std::move(description), quoted, computed, std::move(units), ratio,
          classify(ratio)};
}

std::vector<AuditEntry> run_audit(const PhysicalConstants& c) {
  const MaterialParams si = MaterialParams::silicon();
  const double gamma_s = species::electron().gamma;
  const double gamma_si = species::silicon29().gamma;
  std::vector<AuditEntry> out;

  // Electron polarization at 2 T, 0.1 K.
  const double x20 = boltzmann_ratio(gamma_s, 2.0, 0.1, c);
  out.push_back(make_entry("polarization-ratio", "gamma_S hbar B / kT at B = 2 T, T = 0.1 K", 27.0,
                           x20, "1"));

  // Hyperfine channel.
  const auto threshold = required_field_temperature_ratio(si.hyperfine_constant, 1.0, c);
  out.push_back(make_entry("hyperfine-threshold", "B/T where A0^2 var(S_z) = 1 s^-2", 30.0,
                           threshold.value_or(std::numeric_limits<double>::quiet_NaN()), "T/K"));

  HyperfineElectronChannel hf;
  hf.field = 2.0;
  hf.temperature = 0.1;
  const double td20 =
      decoherence_time({hyperfine_variance(hf, c), hf.tau1}, Convention::Static);
  out.push_back(make_entry("hyperfine-td", "static T_d of the hyperfine channel at B/T = 20 T/K",
                           1e-3, td20, "s"));

  // Contrast of the two tanh arguments against the exp(-x) asymptote at B/T = 20.
  const double a2 = si.hyperfine_constant * si.hyperfine_constant;
  out.push_back(make_entry("variance-halved-argument",
                           "A0^2 sech^2(x/2)/4 against A0^2 exp(-x) at B/T = 20 T/K",
                           a2 * std::exp(-x20), a2 * spin_half_variance(x20), "rad^2/s^2"));
  out.push_back(make_entry("variance-unhalved-argument",
                           "A0^2 (1 - tanh^2(x))/4 against A0^2 exp(-x) at B/T = 20 T/K",
                           a2 * std::exp(-x20), a2 * unhalved_tanh_variance(x20), "rad^2/s^2"));

  // Phonon channel: saturated prefactor of (T/Theta)^7.
  PhononRamanChannel ph;
  ph.temperature = 0.1;
  const double prefactor =
      phonon_rate(ph, PhononMode::FactorialApprox, c) / std::pow(ph.reduced_temperature(), 7);
  out.push_back(make_entry("phonon-prefactor", "1/T_d / (T/Theta)^7 with the 6! integral", 0.75e4,
                           prefactor, "1/s"));

  // Paramagnetic impurities.
  ParamagneticImpurityChannel pm;
  pm.concentration = si.site_density;  // C a^3 = 1
  pm.field = 2.0;
  pm.temperature = 0.1;
  const double unsuppressed = paramagnetic_variance(pm, c) / spin_half_variance(x20);
  out.push_back(make_entry("paramagnetic-prefactor-raw",
                           "variance / (C a^3) before the thermal factor", 33.4e-13, unsuppressed,
                           "rad^2/s^2"));
  out.push_back(make_entry("paramagnetic-prefactor", "variance / (C a^3) at B/T = 20 T/K", 0.74e3,
                           paramagnetic_variance(pm, c), "rad^2/s^2"));
  const double bound = max_paramagnetic_concentration(1.0, 20.0, c);
  out.push_back(make_entry("paramagnetic-bound-fraction", "allowed C a^3 for T_d = 1 s at B/T = 20",
                           1.4e-3, bound / si.site_density, "1"));
  out.push_back(make_entry("paramagnetic-bound", "allowed C for T_d = 1 s at B/T = 20", 0.7e20,
                           bound / units::per_cm3, "cm^-3"));

  // Nuclear impurities.
  const double t_threshold = polarization_threshold_temperature(gamma_si, 2.0, c);
  out.push_back(make_entry("nuclear-threshold-temperature",
                           "T_I with |gamma(29Si)| hbar B / k T_I = 1 at B = 2 T", 0.8,
                           t_threshold / units::mK, "mK"));
  const auto nuclear = max_nuclear_impurity_concentration(1.0, 2.0, 0.8e-3, c);
  out.push_back(make_entry("nuclear-bound", "allowed 29Si fraction for T_d = 1 s, B = 2 T, T_I = 0.8 mK",
                           4.5e-2, nuclear.percent_of_sites, "%"));

  // Material data.
  out.push_back(make_entry("site-density", "a^-3 from the lattice constant against the quoted a^-3",
                           si.site_density / units::per_cm3,
                           si.site_density_from_lattice() / units::per_cm3, "cm^-3"));
  out.push_back(make_entry("site-density-diamond-cell",
                           "8 a^-3 (eight atoms per cubic cell) against the quoted a^-3",
                           si.site_density / units::per_cm3,
                           8.0 * si.site_density_from_lattice() / units::per_cm3, "cm^-3"));

  // Error-phase tangent form against arg(rho_10) of the perturbed state.
  const ErrorVector flip{1.0, 0.0, 0.0};
  out.push_back(make_entry("error-phase", "tangent-form phase against arg(rho_10) at eps = (1, 0, 0)",
                           error_phase(flip), bloch_phase(flip), "rad"));
  return out;
}

const AuditEntry* find_entry(const std::vector<AuditEntry>& entries, std::string_view claim_id) {
  for (const auto& e : entries)
    if (e.claim_id == claim_id) return &e;
  return nullptr;
}

void write_text(std::ostream& os, const std::vector<AuditEntry>& entries) {
  os << fmt::format("{:<30} {:>14} {:>14} {:>12} {:<10} {}\n", "claim", "quoted", "computed",
                    "ratio", "units", "verdict");
  for (const auto& e : entries) {
    os << fmt::format("{:<30} {:>14.5g} {:>14.5g} {:>12.4g} {:<10} {}\n", e.claim_id, e.quoted_value,
                      e.computed_value, e.ratio, e.units, to_string(e.verdict));
  }
}

nlohmann::json to_json(const std::vector<AuditEntry>& entries) {
  auto finite_or_null = [](double v) -> nlohmann::json {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
  };
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries) {
    arr.push_back({{"claim_id", e.claim_id},
                   {"description", e.description},
                   {"quoted_value", finite_or_null(e.quoted_value)},
                   {"computed_value", finite_or_null(e.computed_value)},
                   {"units", e.units},
                   {"ratio", finite_or_null(e.ratio)},
                   {"verdict", to_string(e.verdict)}});
  }
  return arr;
}

}  // namespace spindeph
