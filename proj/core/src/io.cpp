#include "fractalscape/io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "json.hpp"
#include "numfmt.hpp"

namespace fractalscape {
namespace {

using nlohmann::json;

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ConfigError(std::string("missing field '") + key + "'");
  return *it;
}

std::string svg_num(double v) { return detail::format_fixed(v, 3); }

}  // namespace

AffineIfs parse_ifs_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "dim" && key != "c" && key != "offsets") throw ConfigError("unknown field '" + key + "'");
  }

  const json& dim_node = require(doc, "dim");
  if (!dim_node.is_number_integer() || dim_node.get<long long>() < 1) {
    throw ConfigError("field 'dim' must be a positive integer");
  }
  const auto dim = static_cast<std::size_t>(dim_node.get<long long>());

  const json& c_node = require(doc, "c");
  if (!c_node.is_number()) throw ConfigError("field 'c' must be a number");
  const double c = c_node.get<double>();
  if (!(c > 0.0 && c < 1.0)) throw ConfigError("c must lie in (0,1)");

  const json& rows = require(doc, "offsets");
  if (!rows.is_array() || rows.empty()) throw ConfigError("field 'offsets' must be a nonempty array of rows");
  std::vector<Vector> offsets;
  offsets.reserve(rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const json& row = rows[j];
    const std::string where = "offsets[" + std::to_string(j) + "]";
    if (!row.is_array()) throw ConfigError(where + " must be an array");
    if (row.size() != dim) {
      throw ConfigError(where + " has " + std::to_string(row.size()) + " entries, expected dim = " +
                        std::to_string(dim));
    }
    Vector b;
    for (std::size_t d = 0; d < dim; ++d) {
      if (!row[d].is_number()) throw ConfigError(where + "[" + std::to_string(d) + "] must be a number");
      b.push_back(row[d].get<double>());
    }
    for (std::size_t k = 0; k < offsets.size(); ++k) {
      if (offsets[k] == b) throw ConfigError(where + " duplicates offsets[" + std::to_string(k) + "]");
    }
    offsets.push_back(std::move(b));
  }
  try {
    return AffineIfs(c, std::move(offsets));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

AffineIfs load_ifs_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_ifs_config(text);
}

std::string ifs_to_json(const AffineIfs& ifs) {
  json doc;
  doc["dim"] = ifs.dim();
  doc["c"] = ifs.ratio();
  doc["offsets"] = ifs.offsets();
  return doc.dump();
}

std::string render_landscape_svg(const Landscape& landscape, double x_max, const SvgOptions& options) {
  if (!(x_max > 0.0)) throw std::invalid_argument("plot range must be positive");
  const double w = options.width;
  const double h = options.height;
  const double margin = 40.0;
  const double plot_w = w - 2 * margin;
  const double plot_h = h - 2 * margin;
  const double y_max = 0.5 * x_max;
  const bool scatter = options.cloud != nullptr && !options.cloud->empty() && options.cloud->dim() <= 2;
  const double panel_h = scatter ? h * 0.6 : 0.0;
  const double total_h = h + panel_h;

  auto px = [&](double t) { return margin + plot_w * t / x_max; };
  auto py = [&](double v) { return h - margin - plot_h * v / y_max; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
      << svg_num(total_h) << "\" viewBox=\"0 0 " << options.width << ' ' << svg_num(total_h) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g stroke=\"black\" stroke-width=\"1\">\n";
  out << "<line x1=\"" << svg_num(px(0)) << "\" y1=\"" << svg_num(py(0)) << "\" x2=\"" << svg_num(px(x_max))
      << "\" y2=\"" << svg_num(py(0)) << "\"/>\n";
  out << "<line x1=\"" << svg_num(px(0)) << "\" y1=\"" << svg_num(py(0)) << "\" x2=\"" << svg_num(px(0))
      << "\" y2=\"" << svg_num(py(y_max)) << "\"/>\n";
  out << "</g>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  for (double frac : {0.0, 0.5, 1.0}) {
    out << "<text x=\"" << svg_num(px(frac * x_max)) << "\" y=\"" << svg_num(py(0) + 16)
        << "\" text-anchor=\"middle\">" << detail::format_fixed(frac * x_max, 4) << "</text>\n";
    out << "<text x=\"" << svg_num(px(0) - 6) << "\" y=\"" << svg_num(py(frac * y_max) + 4)
        << "\" text-anchor=\"end\">" << detail::format_fixed(frac * y_max, 4) << "</text>\n";
  }
  out << "</g>\n";

  // Deepest level first so that the dominant levels are drawn on top.
  const std::size_t depth = landscape.size();
  out << "<g fill=\"none\" stroke-width=\"1.2\">\n";
  for (std::size_t k = depth; k-- > 0;) {
    const auto& pts = landscape.levels()[k].breakpoints();
    if (pts.empty()) continue;
    const int shade = depth <= 1 ? 20 : 20 + static_cast<int>(190.0 * static_cast<double>(k) / static_cast<double>(depth - 1));
    out << "<polyline stroke=\"rgb(" << shade << ',' << shade << ",255)\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out << ' ';
      out << svg_num(px(pts[i].t)) << ',' << svg_num(py(pts[i].value));
    }
    out << "\"/>\n";
  }
  out << "</g>\n";

  if (scatter) {
    const PointCloud& cloud = *options.cloud;
    std::vector<double> lo(cloud.dim(), 0.0), hi(cloud.dim(), 0.0);
    for (std::size_t d = 0; d < cloud.dim(); ++d) {
      lo[d] = hi[d] = cloud[0][d];
      for (std::size_t i = 1; i < cloud.size(); ++i) {
        lo[d] = std::min(lo[d], cloud[i][d]);
        hi[d] = std::max(hi[d], cloud[i][d]);
      }
    }
    const double span = std::max({hi[0] - lo[0], cloud.dim() > 1 ? hi[1] - lo[1] : 0.0, 1e-300});
    const double box = std::min(plot_w, panel_h - 2 * margin);
    const double top = h + margin;
    out << "<g fill=\"black\">\n";
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      const double x = margin + box * (cloud[i][0] - lo[0]) / span;
      const double y = cloud.dim() > 1 ? top + box - box * (cloud[i][1] - lo[1]) / span : top + 0.5 * box;
      out << "<circle cx=\"" << svg_num(x) << "\" cy=\"" << svg_num(y) << "\" r=\"1.5\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace fractalscape
