#pragma once

/// \file
/// Physical constants, spin species and material presets.
///
/// Everything is stored in SI (m, s, K, T, J, rad/s). Values that are
/// conventionally quoted in mixed CGS units (cm, cm^-3, J s^2/cm^2,
/// T^2 cm^3/J) are converted exactly once, here.

#include <string>
#include <string_view>
#include <vector>

namespace spindeph {

namespace units {
inline constexpr double cm = 1e-2;        // m
inline constexpr double per_cm3 = 1e6;    // m^-3
inline constexpr double rad_GHz = 1e9;    // rad/s
inline constexpr double rad_MHz = 1e6;    // rad/s
inline constexpr double mK = 1e-3;        // K

/// Permeability in T^2 cm^3 / J expressed in T^2 m^3 / J.
inline constexpr double T2_cm3_per_J = cm * cm * cm;
/// Mass in J s^2 / cm^2 expressed in J s^2 / m^2 (= kg).
inline constexpr double J_s2_per_cm2 = 1.0 / (cm * cm);
}  // namespace units

struct PhysicalConstants {
  double hbar;          // J s / rad
  double k_boltzmann;   // J / K
  double mu0_over_4pi;  // T^2 m^3 / J

  /// hbar = 1.05e-34, k = 1.38e-23, mu0 = 0.4 pi T^2 cm^3/J.
  static PhysicalConstants standard();

  bool operator==(const PhysicalConstants&) const = default;
};

struct SpinSpecies {
  std::string name;
  double gamma;  // rad/s/T, signed
  double spin;

  bool operator==(const SpinSpecies&) const = default;
};

namespace species {
SpinSpecies electron();
SpinSpecies phosphorus31();
SpinSpecies silicon29();
std::vector<SpinSpecies> registry();
}  // namespace species

struct MaterialParams {
  std::string name;
  double debye_temperature;   // K
  double lattice_constant;    // m
  double sound_velocity;      // m/s
  double atom_mass;           // J s^2 / m^2
  double hyperfine_constant;  // rad/s
  double site_density;        // m^-3, the a^-3 used by the dipolar sums
  double xi;                  // phonon coupling scale, worst case 1

  /// Phosphorus-doped silicon. The site density is the quoted a^-3 value,
  /// which equals 8 / lattice_constant^3 (eight atoms per cubic cell).
  static MaterialParams silicon();

  /// a^-3 recomputed from the lattice constant.
  double site_density_from_lattice() const;
  double debye_frequency(const PhysicalConstants& c) const;

  bool operator==(const MaterialParams&) const = default;
};

/// Natural abundance of 29Si in natural silicon, percent.
inline constexpr double kSilicon29NaturalAbundancePercent = 4.7;

/// Zeeman-to-thermal energy ratio |gamma| hbar B / (k T).
double boltzmann_ratio(double gamma, double field, double temperature,
                       const PhysicalConstants& c = PhysicalConstants::standard());

/// Thermal variance <S_z^2> - <S_z>^2 of a spin-1/2 at Zeeman ratio x:
/// sech^2(x/2)/4, which behaves as exp(-x) for large x.
double spin_half_variance(double x);

/// (1 - tanh^2(x))/4 with the full ratio as the tanh argument. Decays as
/// exp(-2x); kept only so the audit can contrast it with spin_half_variance.
double unhalved_tanh_variance(double x);

}  // namespace spindeph
