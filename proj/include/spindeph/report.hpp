#pragma once

/// \file
/// JSON views of the library objects used by the command-line tool.
/// Non-finite numbers are written as null with a companion flag.

#include "spindeph/dephasing_core.hpp"
#include "spindeph/mechanisms.hpp"
#include "spindeph/register_errors.hpp"
#include "spindeph/stochastic_sim.hpp"
#include "spindeph/units.hpp"

#include "json.hpp"

#include <vector>

namespace spindeph {

struct Registry {
  PhysicalConstants constants = PhysicalConstants::standard();
  std::vector<SpinSpecies> species = species::registry();
  std::vector<MaterialParams> materials = {MaterialParams::silicon()};

  bool operator==(const Registry&) const = default;
};

nlohmann::json to_json(const Registry& r);
Registry registry_from_json(const nlohmann::json& j);

/// {"value": v, "infinite": false} or {"value": null, "infinite": true}.
nlohmann::json duration_json(double seconds);

/// Variance, correlation time and T_d under every convention (slow-noise
/// channels) or the direct rate (phonon channel). `convention` is echoed as
/// the headline T_d.
nlohmann::json channel_report(const Channel& ch, Convention convention = Convention::Static,
                              const PhysicalConstants& c = PhysicalConstants::standard());

nlohmann::json to_json(const EnsembleAverage& avg);

nlohmann::json montecarlo_summary(const SimulationPlan& plan, const AnalyticComparison& cmp,
                                  const EnsembleCoherence& result);

}  // namespace spindeph
