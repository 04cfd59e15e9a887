#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fractalscape/ifs.hpp"
#include "fractalscape/landscape.hpp"

namespace fractalscape {

/// Malformed or invalid IFS configuration; the message names the offending
/// field or the parse position.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses {"dim": int, "c": number, "offsets": [[number, ...], ...]}.
AffineIfs parse_ifs_config(std::string_view json_text);
AffineIfs load_ifs_config(const std::filesystem::path& path);
std::string ifs_to_json(const AffineIfs& ifs);

struct SvgOptions {
  int width = 800;
  int height = 450;
  /// Optional point-cloud scatter panel drawn below the landscape (dim <= 2).
  const PointCloud* cloud = nullptr;
};

/// Standalone SVG of the landscape levels over [0, x_max] x [0, x_max / 2].
/// Output bytes depend only on the inputs.
std::string render_landscape_svg(const Landscape& landscape, double x_max, const SvgOptions& options = {});

}  // namespace fractalscape
