#pragma once

#include <optional>
#include <string_view>

#include "loscov/sampling.hpp"

namespace loscov::cli {

// Deployment presets (intensities stored per meter). All presets use the
// default road width eta = 100 m, mean LOS distance gamma = 100 m and
// vehicle speed 10 m/s.
struct Preset {
  std::string_view name;
  ScenarioParams params;
};

inline constexpr Preset kPresets[] = {
    {"3gpp-urban-a", {5e-3, 2e-3, 25e-3, 100.0, 100.0, 10.0}},
    {"3gpp-urban-b", {5e-3, 4e-3, 50e-3, 100.0, 100.0, 10.0}},
    {"dense-urban", {15e-3, 2e-3, 25e-3, 100.0, 100.0, 10.0}},
};

inline std::optional<ScenarioParams> find_preset(std::string_view name) {
  for (const Preset& p : kPresets)
    if (p.name == name) return p.params;
  return std::nullopt;
}

}  // namespace loscov::cli
