#include "spindeph/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <variant>

namespace spindeph {

namespace {

constexpr std::string_view kRatio = "field_temperature_ratio";

double* slot(HyperfineElectronChannel& c, std::string_view key) {
  if (key == "hyperfine_constant") return &c.hyperfine_constant;
  if (key == "field") return &c.field;
  if (key == "temperature") return &c.temperature;
  if (key == "tau1") return &c.tau1;
  if (key == "gamma_electron") return &c.gamma_electron;
  return nullptr;
}

double* slot(PhononRamanChannel& c, std::string_view key) {
  if (key == "temperature") return &c.temperature;
  if (key == "debye_temperature") return &c.material.debye_temperature;
  if (key == "lattice_constant") return &c.material.lattice_constant;
  if (key == "sound_velocity") return &c.material.sound_velocity;
  if (key == "atom_mass") return &c.material.atom_mass;
  if (key == "hyperfine_constant") return &c.material.hyperfine_constant;
  if (key == "site_density") return &c.material.site_density;
  if (key == "xi") return &c.material.xi;
  return nullptr;
}

double* slot(ParamagneticImpurityChannel& c, std::string_view key) {
  if (key == "concentration") return &c.concentration;
  if (key == "gamma_nuclear") return &c.gamma_nuclear;
  if (key == "gamma_electron") return &c.gamma_electron;
  if (key == "site_density") return &c.site_density;
  if (key == "field") return &c.field;
  if (key == "temperature") return &c.temperature;
  if (key == "tau1_imp") return &c.tau1_imp;
  return nullptr;
}

double* slot(NuclearImpurityChannel& c, std::string_view key) {
  if (key == "concentration") return &c.concentration;
  if (key == "gamma_nuclear") return &c.gamma_nuclear;
  if (key == "gamma_impurity") return &c.gamma_impurity;
  if (key == "site_density") return &c.site_density;
  if (key == "field") return &c.field;
  if (key == "spin_temperature") return &c.spin_temperature;
  if (key == "t_parallel_imp") return &c.t_parallel_imp;
  return nullptr;
}

template <class C>
constexpr bool has_ratio = std::is_same_v<C, HyperfineElectronChannel> ||
                           std::is_same_v<C, ParamagneticImpurityChannel>;

[[noreturn]] void unknown_key(const Channel& ch, std::string_view key) {
  throw ConfigError(fmt::format("unknown parameter '{}' for channel '{}'", key, channel_kind(ch)));
}

}  // namespace

Channel default_channel(std::string_view kind) {
  if (kind == "hyperfine") return HyperfineElectronChannel{};
  if (kind == "phonon") return PhononRamanChannel{};
  if (kind == "paramagnetic") return ParamagneticImpurityChannel{};
  if (kind == "nuclear") return NuclearImpurityChannel{};
  throw ConfigError(fmt::format("unknown channel kind '{}'", kind));
}

std::vector<std::string_view> channel_parameter_names(std::string_view kind) {
  if (kind == "hyperfine")
    return {"hyperfine_constant", "field", "temperature", "tau1", "gamma_electron", kRatio};
  if (kind == "phonon")
    return {"temperature", "debye_temperature", "lattice_constant", "sound_velocity",
            "atom_mass", "hyperfine_constant", "site_density", "xi"};
  if (kind == "paramagnetic")
    return {"concentration", "gamma_nuclear", "gamma_electron", "site_density",
            "field", "temperature", "tau1_imp", kRatio};
  if (kind == "nuclear")
    return {"concentration", "gamma_nuclear", "gamma_impurity", "site_density",
            "field", "spin_temperature", "t_parallel_imp"};
  throw ConfigError(fmt::format("unknown channel kind '{}'", kind));
}

void set_channel_parameter(Channel& ch, std::string_view key, double value) {
  std::visit(
      [&](auto& c) {
        using C = std::decay_t<decltype(c)>;
        if constexpr (has_ratio<C>) {
          if (key == kRatio) {
            c.field = value * c.temperature;
            return;
          }
        }
        double* p = slot(c, key);
        if (p == nullptr) unknown_key(ch, key);
        *p = value;
      },
      ch);
}

double get_channel_parameter(const Channel& ch, std::string_view key) {
  Channel copy = ch;
  return std::visit(
      [&](auto& c) -> double {
        using C = std::decay_t<decltype(c)>;
        if constexpr (has_ratio<C>) {
          if (key == kRatio) return c.field / c.temperature;
        }
        double* p = slot(c, key);
        if (p == nullptr) unknown_key(ch, key);
        return *p;
      },
      copy);
}

double parse_number(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value))
    throw ConfigError(fmt::format("not a number: '{}'", text));
  return value;
}

std::vector<Channel> parse_channel_config(std::istream& in) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(fmt::format("config line {}: {}", e.line(), e.message()));
  }
  std::vector<Channel> channels;
  for (const auto& [section, body] : tree) {
    if (!body.data().empty()) throw ConfigError(fmt::format("key '{}' outside of a channel section", section));
    Channel ch = default_channel(section);
    for (const auto& [key, value] : body) {
      if (key == kRatio) throw ConfigError("field_temperature_ratio is a sweep parameter; set field and temperature");
      set_channel_parameter(ch, key, parse_number(value.data()));
    }
    try {
      std::visit([](const auto& c) { c.validate(); }, ch);
    } catch (const std::domain_error& e) {
      throw ConfigError(fmt::format("[{}]: {}", section, e.what()));
    }
    channels.push_back(ch);
  }
  if (channels.empty()) throw ConfigError("config defines no channel");
  return channels;
}

std::vector<Channel> load_channel_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open config '{}'", path));
  return parse_channel_config(in);
}

}  // namespace spindeph
