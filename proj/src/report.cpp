#include "spindeph/report.hpp"

#include "spindeph/config.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace spindeph {

using nlohmann::json;

namespace {

json quantity(double value, const char* unit) { return {{"value", value}, {"unit", unit}}; }

double value_of(const json& j, const char* key) { return j.at(key).at("value").get<double>(); }

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json to_json(const Registry& r) {
  json j;
  j["constants"] = {{"hbar", quantity(r.constants.hbar, "J s/rad")},
                    {"k_boltzmann", quantity(r.constants.k_boltzmann, "J/K")},
                    {"mu0_over_4pi", quantity(r.constants.mu0_over_4pi, "T^2 m^3/J")}};
  j["species"] = json::array();
  for (const auto& s : r.species)
    j["species"].push_back({{"name", s.name}, {"gamma", quantity(s.gamma, "rad/s/T")}, {"spin", s.spin}});
  j["materials"] = json::array();
  for (const auto& m : r.materials) {
    j["materials"].push_back({{"name", m.name},
                              {"debye_temperature", quantity(m.debye_temperature, "K")},
                              {"lattice_constant", quantity(m.lattice_constant, "m")},
                              {"sound_velocity", quantity(m.sound_velocity, "m/s")},
                              {"atom_mass", quantity(m.atom_mass, "J s^2/m^2")},
                              {"hyperfine_constant", quantity(m.hyperfine_constant, "rad/s")},
                              {"site_density", quantity(m.site_density, "m^-3")},
                              {"xi", quantity(m.xi, "1")}});
  }
  j["silicon29_natural_abundance"] = quantity(kSilicon29NaturalAbundancePercent, "%");
  return j;
}

Registry registry_from_json(const json& j) {
  Registry r;
  const json& c = j.at("constants");
  r.constants = {value_of(c, "hbar"), value_of(c, "k_boltzmann"), value_of(c, "mu0_over_4pi")};
  r.species.clear();
  for (const auto& s : j.at("species"))
    r.species.push_back({s.at("name").get<std::string>(), value_of(s, "gamma"), s.at("spin").get<double>()});
  r.materials.clear();
  for (const auto& m : j.at("materials")) {
    r.materials.push_back({m.at("name").get<std::string>(), value_of(m, "debye_temperature"),
                           value_of(m, "lattice_constant"), value_of(m, "sound_velocity"),
                           value_of(m, "atom_mass"), value_of(m, "hyperfine_constant"),
                           value_of(m, "site_density"), value_of(m, "xi")});
  }
  return r;
}

json duration_json(double seconds) {
  if (std::isfinite(seconds)) return {{"value", seconds}, {"infinite", false}};
  return {{"value", nullptr}, {"infinite", true}};
}

json channel_report(const Channel& ch, Convention convention, const PhysicalConstants& c) {
  json j;
  const std::string_view kind = channel_kind(ch);
  j["channel"] = kind;
  json params = json::object();
  for (auto name : channel_parameter_names(kind))
    params[std::string(name)] = finite_or_null(get_channel_parameter(ch, name));
  j["parameters"] = params;

  if (const auto* ph = std::get_if<PhononRamanChannel>(&ch)) {
    const double rate = phonon_rate(*ph, PhononMode::ExactIntegral, c);
    j["t_over_theta"] = ph->reduced_temperature();
    j["low_temperature_regime"] = ph->low_temperature_regime();
    j["rate_per_s"] = rate;
    j["rate_factorial_per_s"] = phonon_rate(*ph, PhononMode::FactorialApprox, c);
    j["decoherence_time_s"] = {{"markovian", duration_json(1.0 / rate)}};
    j["convention"] = "markovian";
    j["insignificant"] = rate < kInsignificantRate;
    return j;
  }

  const auto corr = *channel_to_correlation(ch, c);
  j["variance_rad2_per_s2"] = corr.variance;
  j["tau_c_s"] = corr.tau_c;
  json td = json::object();
  for (Convention conv : {Convention::Static, Convention::Markovian, Convention::UnitGamma})
    td[std::string(to_string(conv))] = duration_json(decoherence_time(corr, conv));
  j["decoherence_time_s"] = td;
  j["convention"] = to_string(convention);
  j["td_s"] = duration_json(decoherence_time(corr, convention));

  if (const auto* hf = std::get_if<HyperfineElectronChannel>(&ch)) {
    j["polarization_ratio"] = hf->polarization_ratio(c);
    j["adiabatic"] = hf->adiabatic();
  } else if (const auto* pm = std::get_if<ParamagneticImpurityChannel>(&ch)) {
    j["polarization_ratio"] = pm->polarization_ratio(c);
    j["dilute"] = pm->dilute();
    j["max_concentration_for_1s_per_m3"] = finite_or_null(max_paramagnetic_concentration(*pm, 1.0, c));
  } else if (const auto* nu = std::get_if<NuclearImpurityChannel>(&ch)) {
    j["polarization_ratio"] = nu->polarization_ratio(c);
    j["polarized"] = nu->polarized(c);
    j["threshold_spin_temperature_K"] = polarization_threshold_temperature(nu->gamma_impurity, nu->field, c);
    const auto bound = max_nuclear_impurity_concentration(*nu, 1.0, c);
    j["max_concentration_for_1s_per_m3"] = finite_or_null(bound.per_m3);
    j["max_concentration_for_1s_percent"] = finite_or_null(bound.percent_of_sites);
  }
  return j;
}

json to_json(const EnsembleAverage& avg) {
  const auto& m = avg.state.matrix();
  return {{"n", avg.n},
          {"mean_p", avg.mean_p},
          {"stderr_p", avg.stderr_p},
          {"avg_offdiag_magnitude", avg.offdiag_magnitude},
          {"diag", {m(0, 0).real(), m(1, 1).real()}}};
}

json montecarlo_summary(const SimulationPlan& plan, const AnalyticComparison& cmp,
                        const EnsembleCoherence& result) {
  const auto pz = phase_variance_z(result, plan.correlation);
  return {{"variance_rad2_per_s2", plan.correlation.variance},
          {"tau_c_s", finite_or_null(plan.correlation.tau_c)},
          {"t_max_s", plan.t_max},
          {"n_steps", plan.n_steps},
          {"n_trajectories", plan.n_trajectories},
          {"n_output", plan.n_output},
          {"seed", plan.master_seed},
          {"max_z", cmp.max_z},
          {"max_phase_variance_z", finite_or_null(*std::max_element(pz.begin(), pz.end()))}};
}

}  // namespace spindeph
