#pragma once

/// \file
/// The four adiabatic dephasing channels of a donor nuclear-spin qubit in
/// silicon and the threshold solvers built on them.
///
/// Three channels are slow Gaussian frequency noise and reduce to an
/// ExponentialCorrelation {variance, tau_c}:
///   - hyperfine coupling to the donor's own electron spin (tau_c = tau1),
///   - dipolar coupling to dilute paramagnetic impurities (tau_c = tau1_imp),
///   - dipolar coupling to impurity nuclear spins such as 29Si
///     (tau_c = T_parallel of the impurity).
/// The fourth, two-phonon Raman modulation of the hyperfine constant, gives
/// a Gamma linear in |t| and is described directly by its rate 1/T_d.

#include "spindeph/dephasing_core.hpp"
#include "spindeph/units.hpp"

#include <optional>
#include <string_view>
#include <variant>

namespace spindeph {

struct HyperfineElectronChannel {
  double hyperfine_constant = 725e6;  // A0, rad/s
  double field = 2.0;                 // T
  double temperature = 0.1;           // K
  double tau1 = 1e4;                  // s, electron longitudinal relaxation
  double gamma_electron = species::electron().gamma;

  void validate() const;
  double polarization_ratio(const PhysicalConstants& c = PhysicalConstants::standard()) const;
  double larmor_frequency() const;
  /// omega_S tau1 > 1.
  bool adiabatic() const;
};

struct PhononRamanChannel {
  MaterialParams material = MaterialParams::silicon();
  double temperature = 0.1;  // K

  void validate() const;
  double reduced_temperature() const { return temperature / material.debye_temperature; }
  /// T / Theta < 1e-3, where the Debye integral saturates.
  bool low_temperature_regime() const { return reduced_temperature() < 1e-3; }
};

struct ParamagneticImpurityChannel {
  double concentration = 0.0;  // m^-3
  double gamma_nuclear = species::phosphorus31().gamma;
  double gamma_electron = species::electron().gamma;
  /// a^-3 with a the minimal qubit-impurity distance.
  double site_density = MaterialParams::silicon().site_density;
  double field = 2.0;        // T
  double temperature = 0.1;  // K
  double tau1_imp = 1e4;     // s

  void validate() const;
  double polarization_ratio(const PhysicalConstants& c = PhysicalConstants::standard()) const;
  /// C a^3 < 1.
  bool dilute() const { return concentration < site_density; }
};

struct NuclearImpurityChannel {
  double concentration = 0.0;  // m^-3
  double gamma_nuclear = species::phosphorus31().gamma;
  double gamma_impurity = species::silicon29().gamma;
  double site_density = MaterialParams::silicon().site_density;
  double field = 2.0;                // T
  double spin_temperature = 0.8e-3;  // K
  double t_parallel_imp = 1e4;       // s

  void validate() const;
  /// |gamma_imp| hbar B / (k T_I); > 1 means the impurity spins are polarized.
  double polarization_ratio(const PhysicalConstants& c = PhysicalConstants::standard()) const;
  bool polarized(const PhysicalConstants& c = PhysicalConstants::standard()) const {
    return polarization_ratio(c) > 1.0;
  }
};

using Channel = std::variant<HyperfineElectronChannel, PhononRamanChannel,
                             ParamagneticImpurityChannel, NuclearImpurityChannel>;

std::string_view channel_kind(const Channel& ch);

// Hyperfine electron-spin channel -------------------------------------------

/// A0^2 (<S_z^2> - <S_z>^2).
double hyperfine_variance(const HyperfineElectronChannel& ch,
                          const PhysicalConstants& c = PhysicalConstants::standard());

/// Smallest B/T (T/K) at which A0^2 (<S_z^2> - <S_z>^2) = 1/target_td^2,
/// to 1e-6 relative. Returns 0 when even B = 0 meets the target and nullopt
/// when no finite ratio does.
std::optional<double> required_field_temperature_ratio(
    double hyperfine_constant, double target_td,
    const PhysicalConstants& c = PhysicalConstants::standard(),
    double gamma_electron = species::electron().gamma);

// Phonon Raman channel ------------------------------------------------------

/// integral_0^u x^6 e^x / (e^x - 1)^2 dx.
double debye_integral(double upper);

enum class PhononMode { ExactIntegral, FactorialApprox };

/// 1/T_d = (81 pi / 8) xi^2 A0^2 (hbar / M v^2)^2 (k Theta / hbar) (T/Theta)^7 I,
/// with I = debye_integral(Theta/T) or 6! in the saturated approximation.
double phonon_rate(const PhononRamanChannel& ch, PhononMode mode = PhononMode::ExactIntegral,
                   const PhysicalConstants& c = PhysicalConstants::standard());

/// Rates below this are reported as insignificant next to a 1 s target.
inline constexpr double kInsignificantRate = 1e-3;  // 1/s

// Paramagnetic impurity channel ---------------------------------------------

/// C ((mu0/4pi) gamma_I gamma_S hbar)^2 (16 pi / 15) a^-3 (<S_z^2> - <S_z>^2).
/// The 16 pi / 15 a^-3 is the sphere average of (1 - 3 cos^2)^2 (= 4/5)
/// times 4 pi integral_a^inf r^-4 dr.
double paramagnetic_variance(const ParamagneticImpurityChannel& ch,
                             const PhysicalConstants& c = PhysicalConstants::standard());

/// Concentration (m^-3) at which the variance equals 1/target_td^2, using
/// silicon's site density and the channel defaults for the gyromagnetic ratios.
double max_paramagnetic_concentration(double target_td, double field_temperature_ratio,
                                      const PhysicalConstants& c = PhysicalConstants::standard());
double max_paramagnetic_concentration(const ParamagneticImpurityChannel& ch, double target_td,
                                      const PhysicalConstants& c = PhysicalConstants::standard());

// Nuclear impurity channel --------------------------------------------------

/// C ((mu0/4pi) gamma_I gamma_imp hbar)^2 (4 pi / 15) a^-3 (1 - tanh^2(x_I)),
/// x_I = |gamma_imp| hbar B / (k T_I). Evaluated as written: 4 pi / 15 already
/// carries the spin-1/2 factor 1/4 relative to the paramagnetic form.
double nuclear_impurity_variance(const NuclearImpurityChannel& ch,
                                 const PhysicalConstants& c = PhysicalConstants::standard());

/// Spin temperature at which |gamma| hbar B / (k T) = 1.
double polarization_threshold_temperature(double gamma, double field,
                                          const PhysicalConstants& c = PhysicalConstants::standard());

struct ConcentrationBound {
  double per_m3;
  double percent_of_sites;
};

ConcentrationBound max_nuclear_impurity_concentration(
    double target_td, double field, double spin_temperature,
    const PhysicalConstants& c = PhysicalConstants::standard());
ConcentrationBound max_nuclear_impurity_concentration(
    const NuclearImpurityChannel& ch, double target_td,
    const PhysicalConstants& c = PhysicalConstants::standard());

// Reduction -----------------------------------------------------------------

/// {variance, correlation time} for the three slow-noise channels; nullopt
/// for the phonon channel, which has no Lorentzian reduction.
std::optional<ExponentialCorrelation> channel_to_correlation(
    const Channel& ch, const PhysicalConstants& c = PhysicalConstants::standard());

}  // namespace spindeph
