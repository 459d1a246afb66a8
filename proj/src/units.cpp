#include "spindeph/units.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spindeph {

PhysicalConstants PhysicalConstants::standard() {
  constexpr double mu0_cgs = 0.4 * std::numbers::pi;  // T^2 cm^3 / J
  return {1.05e-34, 1.38e-23, mu0_cgs * units::T2_cm3_per_J / (4.0 * std::numbers::pi)};
}

namespace species {

SpinSpecies electron() { return {"electron", 176.0 * units::rad_GHz, 0.5}; }
SpinSpecies phosphorus31() { return {"31P", 108.0 * units::rad_MHz, 0.5}; }
SpinSpecies silicon29() { return {"29Si", -53.0 * units::rad_MHz, 0.5}; }

std::vector<SpinSpecies> registry() { return {electron(), phosphorus31(), silicon29()}; }

}  // namespace species

MaterialParams MaterialParams::silicon() {
  MaterialParams m;
  m.name = "silicon";
  m.debye_temperature = 625.0;
  m.lattice_constant = 5.4e-8 * units::cm;
  m.sound_velocity = 5e5 * units::cm;
  m.atom_mass = 0.46e-29 * units::J_s2_per_cm2;
  m.hyperfine_constant = 725.0 * units::rad_MHz;
  m.site_density = 5.0e22 * units::per_cm3;
  m.xi = 1.0;
  return m;
}

double MaterialParams::site_density_from_lattice() const {
  return 1.0 / (lattice_constant * lattice_constant * lattice_constant);
}

double MaterialParams::debye_frequency(const PhysicalConstants& c) const {
  return c.k_boltzmann * debye_temperature / c.hbar;
}

double boltzmann_ratio(double gamma, double field, double temperature,
                       const PhysicalConstants& c) {
  if (!(temperature > 0.0)) throw std::domain_error("boltzmann_ratio: temperature must be positive");
  if (!(field >= 0.0)) throw std::domain_error("boltzmann_ratio: field must be nonnegative");
  return std::abs(gamma) * c.hbar * field / (c.k_boltzmann * temperature);
}

// sech^2(y)/4 = e^{-2y} / (1 + e^{-2y})^2, free of the 1 - tanh^2 cancellation.
double spin_half_variance(double x) {
  if (!(x >= 0.0)) throw std::domain_error("spin_half_variance: x must be nonnegative");
  const double e = std::exp(-x);
  return e / ((1.0 + e) * (1.0 + e));
}

double unhalved_tanh_variance(double x) {
  if (!(x >= 0.0)) throw std::domain_error("unhalved_tanh_variance: x must be nonnegative");
  const double e = std::exp(-2.0 * x);
  return e / ((1.0 + e) * (1.0 + e));
}

}  // namespace spindeph
