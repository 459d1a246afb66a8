#include "spindeph/mechanisms.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spindeph {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// ((mu0/4pi) g1 g2 hbar)^2, the squared dipolar coupling constant (rad^2 m^6 / s^2).
double dipolar_coupling_squared(double g1, double g2, const PhysicalConstants& c) {
  const double k = c.mu0_over_4pi * g1 * g2 * c.hbar;
  return k * k;
}

// Past x = 200 the integrand is below 1e-70 of its peak.
constexpr double kDebyeCutoff = 200.0;

}  // namespace

// Validation ----------------------------------------------------------------

void HyperfineElectronChannel::validate() const {
  require(field > 0.0, "hyperfine channel: field must be positive");
  require(temperature > 0.0, "hyperfine channel: temperature must be positive");
  require(tau1 > 0.0, "hyperfine channel: tau1 must be positive");
  require(std::isfinite(hyperfine_constant), "hyperfine channel: A0 must be finite");
}

double HyperfineElectronChannel::polarization_ratio(const PhysicalConstants& c) const {
  return boltzmann_ratio(gamma_electron, field, temperature, c);
}

double HyperfineElectronChannel::larmor_frequency() const { return std::abs(gamma_electron) * field; }

bool HyperfineElectronChannel::adiabatic() const { return larmor_frequency() * tau1 > 1.0; }

void PhononRamanChannel::validate() const {
  require(temperature > 0.0, "phonon channel: temperature must be positive");
  require(material.debye_temperature > 0.0 && material.sound_velocity > 0.0 && material.atom_mass > 0.0,
          "phonon channel: material parameters must be positive");
}

void ParamagneticImpurityChannel::validate() const {
  require(concentration >= 0.0, "paramagnetic channel: concentration must be nonnegative");
  require(site_density > 0.0, "paramagnetic channel: site density must be positive");
  require(field >= 0.0, "paramagnetic channel: field must be nonnegative");
  require(temperature > 0.0, "paramagnetic channel: temperature must be positive");
  require(tau1_imp > 0.0, "paramagnetic channel: tau1_imp must be positive");
}

double ParamagneticImpurityChannel::polarization_ratio(const PhysicalConstants& c) const {
  return boltzmann_ratio(gamma_electron, field, temperature, c);
}

void NuclearImpurityChannel::validate() const {
  require(concentration >= 0.0, "nuclear impurity channel: concentration must be nonnegative");
  require(site_density > 0.0, "nuclear impurity channel: site density must be positive");
  require(field >= 0.0, "nuclear impurity channel: field must be nonnegative");
  require(spin_temperature > 0.0, "nuclear impurity channel: spin temperature must be positive");
  require(t_parallel_imp > 0.0, "nuclear impurity channel: T_parallel must be positive");
}

double NuclearImpurityChannel::polarization_ratio(const PhysicalConstants& c) const {
  return boltzmann_ratio(gamma_impurity, field, spin_temperature, c);
}

std::string_view channel_kind(const Channel& ch) {
  return std::visit(overloaded{
                        [](const HyperfineElectronChannel&) { return std::string_view{"hyperfine"}; },
                        [](const PhononRamanChannel&) { return std::string_view{"phonon"}; },
                        [](const ParamagneticImpurityChannel&) { return std::string_view{"paramagnetic"}; },
                        [](const NuclearImpurityChannel&) { return std::string_view{"nuclear"}; },
                    },
                    ch);
}

// Hyperfine -----------------------------------------------------------------

double hyperfine_variance(const HyperfineElectronChannel& ch, const PhysicalConstants& c) {
  // B = 0 is allowed here even though the channel needs B > 0 for adiabaticity.
  require(ch.temperature > 0.0, "hyperfine channel: temperature must be positive");
  const double a0 = ch.hyperfine_constant;
  return a0 * a0 * spin_half_variance(ch.polarization_ratio(c));
}

std::optional<double> required_field_temperature_ratio(double hyperfine_constant, double target_td,
                                                       const PhysicalConstants& c,
                                                       double gamma_electron) {
  require(target_td > 0.0, "target decoherence time must be positive");
  const double target_variance = 1.0 / (target_td * target_td);
  const double a2 = hyperfine_constant * hyperfine_constant;
  // x per unit B/T.
  const double slope = std::abs(gamma_electron) * c.hbar / c.k_boltzmann;
  auto excess = [&](double ratio) { return a2 * spin_half_variance(slope * ratio) - target_variance; };

  if (excess(0.0) <= 0.0) return 0.0;
  // exp(-x) underflows near x = 745; beyond that nothing is resolvable.
  const double max_ratio = 700.0 / slope;
  if (excess(max_ratio) > 0.0) return std::nullopt;

  double hi = 1.0;
  while (excess(hi) > 0.0) hi *= 2.0;
  auto done = [](double a, double b) { return std::abs(b - a) <= 1e-8 * std::abs(b); };
  const auto [lo, up] = boost::math::tools::bisect(excess, 0.0, std::min(hi, max_ratio), done);
  return 0.5 * (lo + up);
}

// Phonon --------------------------------------------------------------------

double debye_integral(double upper) {
  require(upper > 0.0, "debye_integral: upper limit must be positive");
  auto integrand = [](double x) {
    if (x == 0.0) return 0.0;
    // x^6 e^x / (e^x - 1)^2 = x^6 e^{-x} / (1 - e^{-x})^2
    const double d = -std::expm1(-x);
    const double x3 = x * x * x;
    return x3 * x3 * std::exp(-x) / (d * d);
  };
  const double b = std::min(upper, kDebyeCutoff);
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, b, 20, 1e-13,
                                                                       &error);
}

double phonon_rate(const PhononRamanChannel& ch, PhononMode mode, const PhysicalConstants& c) {
  ch.validate();
  const MaterialParams& m = ch.material;
  const double a0 = m.hyperfine_constant;
  const double length = c.hbar / (m.atom_mass * m.sound_velocity * m.sound_velocity);  // s
  const double reduced = ch.reduced_temperature();
  const double integral =
      mode == PhononMode::ExactIntegral ? debye_integral(1.0 / reduced) : 720.0;
  return 81.0 * std::numbers::pi / 8.0 * m.xi * m.xi * a0 * a0 * length * length *
         m.debye_frequency(c) * std::pow(reduced, 7) * integral;
}

// Paramagnetic --------------------------------------------------------------

double paramagnetic_variance(const ParamagneticImpurityChannel& ch, const PhysicalConstants& c) {
  ch.validate();
  return ch.concentration * dipolar_coupling_squared(ch.gamma_nuclear, ch.gamma_electron, c) *
         (16.0 * std::numbers::pi / 15.0) * ch.site_density *
         spin_half_variance(ch.polarization_ratio(c));
}

double max_paramagnetic_concentration(const ParamagneticImpurityChannel& ch, double target_td,
                                      const PhysicalConstants& c) {
  require(target_td > 0.0, "target decoherence time must be positive");
  ParamagneticImpurityChannel unit = ch;
  unit.concentration = 1.0;
  return 1.0 / (target_td * target_td * paramagnetic_variance(unit, c));
}

double max_paramagnetic_concentration(double target_td, double field_temperature_ratio,
                                      const PhysicalConstants& c) {
  ParamagneticImpurityChannel ch;
  ch.temperature = 1.0;
  ch.field = field_temperature_ratio;
  return max_paramagnetic_concentration(ch, target_td, c);
}

// Nuclear impurity ----------------------------------------------------------

double nuclear_impurity_variance(const NuclearImpurityChannel& ch, const PhysicalConstants& c) {
  ch.validate();
  // 1 - tanh^2(x) = 4 * unhalved_tanh_variance(x)
  const double unpolarized = 4.0 * unhalved_tanh_variance(ch.polarization_ratio(c));
  return ch.concentration * dipolar_coupling_squared(ch.gamma_nuclear, ch.gamma_impurity, c) *
         (4.0 * std::numbers::pi / 15.0) * ch.site_density * unpolarized;
}

double polarization_threshold_temperature(double gamma, double field, const PhysicalConstants& c) {
  return std::abs(gamma) * c.hbar * field / c.k_boltzmann;
}

ConcentrationBound max_nuclear_impurity_concentration(const NuclearImpurityChannel& ch,
                                                      double target_td, const PhysicalConstants& c) {
  require(target_td > 0.0, "target decoherence time must be positive");
  NuclearImpurityChannel unit = ch;
  unit.concentration = 1.0;
  const double per_m3 = 1.0 / (target_td * target_td * nuclear_impurity_variance(unit, c));
  return {per_m3, 100.0 * per_m3 / ch.site_density};
}

ConcentrationBound max_nuclear_impurity_concentration(double target_td, double field,
                                                      double spin_temperature,
                                                      const PhysicalConstants& c) {
  NuclearImpurityChannel ch;
  ch.field = field;
  ch.spin_temperature = spin_temperature;
  return max_nuclear_impurity_concentration(ch, target_td, c);
}

// Reduction -----------------------------------------------------------------

std::optional<ExponentialCorrelation> channel_to_correlation(const Channel& ch,
                                                             const PhysicalConstants& c) {
  return std::visit(
      overloaded{
          [&](const HyperfineElectronChannel& h) -> std::optional<ExponentialCorrelation> {
            return ExponentialCorrelation{hyperfine_variance(h, c), h.tau1};
          },
          [](const PhononRamanChannel&) -> std::optional<ExponentialCorrelation> {
            return std::nullopt;
          },
          [&](const ParamagneticImpurityChannel& p) -> std::optional<ExponentialCorrelation> {
            return ExponentialCorrelation{paramagnetic_variance(p, c), p.tau1_imp};
          },
          [&](const NuclearImpurityChannel& n) -> std::optional<ExponentialCorrelation> {
            return ExponentialCorrelation{nuclear_impurity_variance(n, c), n.t_parallel_imp};
          },
      },
      ch);
}

}  // namespace spindeph
