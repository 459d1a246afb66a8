#pragma once

/// \file
/// Channel parameter files: INI-style sections named after the channel
/// kind, one `key = value` per line, SI units throughout.
///
///   [hyperfine]
///   field = 2
///   temperature = 0.1
///
/// Unknown sections and keys are errors.

#include "spindeph/mechanisms.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spindeph {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kChannelKinds[] = {"hyperfine", "phonon", "paramagnetic", "nuclear"};

/// Channel of the given kind with default parameters.
Channel default_channel(std::string_view kind);

/// Settable parameter names for a kind. `field_temperature_ratio` is a
/// derived parameter on the hyperfine and paramagnetic channels: setting it
/// moves the field at fixed temperature.
std::vector<std::string_view> channel_parameter_names(std::string_view kind);

void set_channel_parameter(Channel& ch, std::string_view key, double value);
double get_channel_parameter(const Channel& ch, std::string_view key);

/// Strict number parse: the whole string must be a finite double.
double parse_number(std::string_view text);

std::vector<Channel> parse_channel_config(std::istream& in);
std::vector<Channel> load_channel_config(const std::string& path);

}  // namespace spindeph
