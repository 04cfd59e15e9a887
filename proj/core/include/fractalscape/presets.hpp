#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fractalscape/ifs.hpp"
#include "fractalscape/operator.hpp"

namespace fractalscape {

/// A named fractal together with the landscape operator whose fixed point is
/// the landscape of its attractor.
struct Preset {
  std::string name;
  std::string description;
  AffineIfs ifs;
  LandscapeOperator op;
  bool well_separated;
};

/// cantor3, right-third, fifth, sixth, mod-fifth, triangle, carpet.
const std::vector<std::string>& preset_names();

/// Throws std::invalid_argument for an unknown name.
Preset preset(std::string_view name);
LandscapeOperator preset_operator(std::string_view name);

}  // namespace fractalscape
