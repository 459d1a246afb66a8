#pragma once

#include <fmt/format.h>

#include <cmath>
#include <string>

namespace spindeph::csv {

/// 17 significant digits, the fixed CSV float format.
inline std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

}  // namespace spindeph::csv
