#include "fractalscape/presets.hpp"

#include <cmath>
#include <stdexcept>

namespace fractalscape {
namespace {

Preset well_separated_1d(std::string name, std::string description, double c, std::vector<double> offsets) {
  std::vector<Vector> rows;
  for (double b : offsets) rows.push_back({b});
  AffineIfs ifs(c, std::move(rows));
  DeltaProfile profile{deltas_1d(ifs), DeltaSource::kExact1d, 0, 0.0};
  LandscapeOperator op = wsi_operator(ifs.size(), c, profile);
  return {std::move(name), std::move(description), std::move(ifs), std::move(op), true};
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"cantor3", "right-third", "fifth", "sixth",
                                              "mod-fifth", "triangle", "carpet"};
  return names;
}

Preset preset(std::string_view name) {
  if (name == "cantor3") {
    return well_separated_1d("cantor3", "middle-third Cantor set", 1.0 / 3.0, {0.0, 2.0});
  }
  if (name == "right-third") {
    return well_separated_1d("right-third", "right 1/3 Cantor set", 1.0 / 3.0, {0.0, 1.0});
  }
  if (name == "fifth") {
    return well_separated_1d("fifth", "1/5 Cantor set", 1.0 / 5.0, {0.0, 2.0, 4.0});
  }
  if (name == "sixth") {
    return well_separated_1d("sixth", "1/6 Cantor set", 1.0 / 6.0, {0.0, 2.0, 5.0});
  }
  // The remaining systems do not have well-separated images; their operators
  // are fixed by hand from the component structure of Psi(S_n).
  if (name == "mod-fifth") {
    AffineIfs ifs(1.0 / 5.0, {{0.0}, {1.0}, {4.0}});
    LandscapeOperator op({1.0, 2.0 / 5.0}, 3, 1.0 / 5.0);
    return {"mod-fifth", "modified 1/5 Cantor set (touching images)", std::move(ifs), std::move(op), false};
  }
  if (name == "triangle") {
    AffineIfs ifs(1.0 / 3.0, {{0.0, 0.0}, {0.0, 2.0}, {2.0, 0.0}});
    LandscapeOperator op({std::sqrt(2.0), 1.0 / 3.0, 1.0 / 3.0}, 3, 1.0 / 3.0);
    return {"triangle", "Cantor triangle", std::move(ifs), std::move(op), false};
  }
  if (name == "carpet") {
    AffineIfs ifs(1.0 / 3.0, {{0.0, 0.0}, {2.0, 0.0}, {0.0, 1.0}, {2.0, 1.0}});
    LandscapeOperator op({std::sqrt(5.0) / 2.0, 1.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0}, 4, 1.0 / 3.0);
    return {"carpet", "distorted Sierpinski carpet", std::move(ifs), std::move(op), false};
  }
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

LandscapeOperator preset_operator(std::string_view name) { return preset(name).op; }

}  // namespace fractalscape
