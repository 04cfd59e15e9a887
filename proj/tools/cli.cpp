#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fractalscape/io.hpp"
#include "fractalscape/landscape.hpp"
#include "fractalscape/persistence.hpp"
#include "fractalscape/presets.hpp"
#include "fractalscape/verify.hpp"

namespace fractalscape::cli {
namespace {

// Clouds used to estimate separation in dim >= 2 stay below this size so the
// O(n^2) scans finish quickly.
constexpr std::size_t kEstimatePoints = 4096;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += num(values[i]);
  }
  return out;
}

std::string format_cloud(const PointCloud& cloud) {
  std::string out;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (i) out += ' ';
    out += '(';
    for (std::size_t d = 0; d < cloud.dim(); ++d) {
      if (d) out += ", ";
      out += num(cloud[i][d]);
    }
    out += ')';
  }
  return out;
}

std::string preset_list() {
  std::string out;
  for (const auto& name : preset_names()) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

// Largest n >= 1 with |S_n| under the estimate budget.
std::size_t estimate_depth(const AffineIfs& ifs) {
  std::size_t n = 1;
  std::size_t points = seed_points(ifs).size() * ifs.size();
  while (n < 12 && points * ifs.size() <= kEstimatePoints) {
    points *= ifs.size();
    ++n;
  }
  return n;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write to '" + path.string() + "'");
  return out;
}

const LandscapeOperator& require_operator(const System& system) {
  if (!system.op) {
    throw UsageError("no landscape operator can be derived for '" + system.label +
                     "': its images are not well separated. Operators for such systems exist only as presets (" +
                     preset_list() + ")");
  }
  return *system.op;
}

}  // namespace

System resolve(const Source& source, std::size_t cap) {
  if (source.preset.has_value() == source.config.has_value()) {
    throw UsageError("give exactly one of --preset NAME or --config PATH");
  }
  if (source.preset) {
    Preset p = [&] {
      try {
        return preset(*source.preset);
      } catch (const std::invalid_argument&) {
        throw UsageError("unknown preset '" + *source.preset + "'; known presets: " + preset_list());
      }
    }();
    System system{p.name + " (" + p.description + ")", p.ifs, p.op, std::nullopt, p.well_separated, false,
                  std::nullopt};
    if (p.ifs.dim() == 1) {
      system.exact_check = true;
      if (p.well_separated) system.deltas = DeltaProfile{deltas_1d(p.ifs), DeltaSource::kExact1d, 0, 0.0};
    } else {
      system.estimate = wsi_check_general(p.ifs, estimate_depth(p.ifs), cap);
    }
    return system;
  }

  AffineIfs ifs = load_ifs_config(*source.config);
  System system{source.config->string(), ifs, std::nullopt, std::nullopt, false, false, std::nullopt};
  if (ifs.dim() == 1) {
    system.exact_check = true;
    system.well_separated = wsi_check_1d(ifs);
    if (system.well_separated) system.deltas = DeltaProfile{deltas_1d(ifs), DeltaSource::kExact1d, 0, 0.0};
  } else {
    const std::size_t n = estimate_depth(ifs);
    system.estimate = wsi_check_general(ifs, n, cap);
    system.well_separated = system.estimate->verdict;
    if (system.well_separated) {
      const PointCloud s = iterate(ifs, seed_points(ifs), n, cap);
      const double bound = 2.0 * std::pow(ifs.ratio(), static_cast<double>(n)) * diameter(s);
      system.deltas = DeltaProfile{empirical_deltas(s, ifs.size()), DeltaSource::kEmpirical, n, bound};
    }
  }
  if (system.deltas && ifs.size() >= 1) system.op = wsi_operator(ifs.size(), ifs.ratio(), *system.deltas);
  return system;
}

int cmd_info(const Source& source, std::ostream& out, std::size_t cap) {
  const System system = resolve(source, cap);
  const AffineIfs& ifs = system.ifs;
  out << "system: " << system.label << '\n';
  out << "maps: " << ifs.size() << '\n';
  out << "ratio: " << num(ifs.ratio()) << '\n';
  out << "dim: " << ifs.dim() << '\n';
  out << "fixed points: " << format_cloud(fixed_points(ifs)) << '\n';
  out << "seed points: " << format_cloud(seed_points(ifs)) << '\n';
  out << "wsi: " << (system.well_separated ? "true" : "false");
  if (system.exact_check) {
    out << " (exact)\n";
  } else if (system.estimate) {
    out << " (estimated: margin " << num(system.estimate->margin) << ", error bound "
        << num(system.estimate->error_bound) << ")\n";
  } else {
    out << '\n';
  }
  if (system.deltas) {
    out << "deltas: " << join(system.deltas->deltas);
    if (system.deltas->source == DeltaSource::kEmpirical) {
      out << " (empirical on S_" << system.deltas->iterations << ", error bound " << num(system.deltas->error_bound)
          << ")";
    }
    out << '\n';
  }
  if (system.op) {
    out << "operator: head (" << join(system.op->head()) << "), block " << system.op->block() << ", ratio "
        << num(system.op->ratio()) << '\n';
  }
  return kOk;
}

int cmd_landscape(const Source& source, std::size_t levels, Mode mode, std::ostream& out) {
  const System system = resolve(source);
  const LandscapeOperator& op = require_operator(system);
  Landscape landscape;
  if (mode == Mode::kClosed) {
    landscape = fixed_point(op, levels);
  } else {
    landscape = iterate_operator(op, Landscape{}, 1e-15 * op.head().front(), levels).landscape;
  }
  write_landscape_csv(out, landscape);
  return kOk;
}

int cmd_empirical(const Source& source, std::size_t n, std::optional<std::size_t> levels,
                  std::ostream& landscape_out, std::ostream& diagram_out, std::size_t cap) {
  const System system = resolve(source, cap);
  const PointCloud cloud = iterate(system.ifs, seed_points(system.ifs), n, cap);
  const PersistenceDiagram diagram = h0_diagram(cloud);
  write_diagram_csv(diagram_out, diagram);
  write_landscape_csv(landscape_out, landscape_from_diagram(diagram, levels.value_or(kAllLevels)));
  return kOk;
}

int verdict_code(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed()) return kVerificationFailed;
  }
  return kOk;
}

int cmd_verify(const std::string& preset_name, std::size_t n_max, std::ostream& out,
               std::optional<std::filesystem::path> csv_prefix, std::size_t cap) {
  const System system = resolve(Source{preset_name, std::nullopt}, cap);
  const LandscapeOperator& op = require_operator(system);
  const VerificationReport commutation = commutation_report(system.ifs, op, n_max, kAllLevels, cap);
  const VerificationReport convergence = convergence_report(system.ifs, op, n_max, kAllLevels, cap);
  out << "system: " << system.label << '\n' << '\n';
  out << render_text(commutation) << '\n' << render_text(convergence);
  if (csv_prefix) {
    open_output(csv_prefix->string() + "-commutation.csv") << render_csv(commutation);
    open_output(csv_prefix->string() + "-convergence.csv") << render_csv(convergence);
  }
  return verdict_code({commutation, convergence});
}

int cmd_plot(const Source& source, std::size_t levels, const std::filesystem::path& output,
             std::optional<std::size_t> with_cloud, std::size_t cap) {
  if (levels == 0) throw UsageError("plot needs --levels >= 1");
  const System system = resolve(source, cap);
  const LandscapeOperator& op = require_operator(system);
  const Landscape landscape = fixed_point(op, levels);
  SvgOptions options;
  std::optional<PointCloud> cloud;
  if (with_cloud) {
    if (system.ifs.dim() > 2) throw UsageError("--with-cloud supports dim <= 2 only");
    cloud = iterate(system.ifs, seed_points(system.ifs), *with_cloud, cap);
    options.cloud = &*cloud;
  }
  const std::string svg = render_landscape_svg(landscape, op.head().front(), options);
  std::ofstream out = open_output(output);
  out << svg;
  if (!out) throw UsageError("failed writing '" + output.string() + "'");
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Persistence landscapes of self-similar fractals", "fractalscape"};
  app.require_subcommand(1);

  Source source;
  std::size_t levels = 32;
  std::size_t iters = 4;
  std::size_t n_max = 6;
  std::size_t max_points = kDefaultPointCap;
  std::string mode_name = "closed";
  std::string output;
  std::size_t with_cloud = 0;
  std::string positional_preset;

  auto add_source = [&](CLI::App* cmd) {
    auto* p = cmd->add_option("--preset", source.preset, "Built-in system: " + preset_list());
    auto* c = cmd->add_option("--config", source.config, "JSON IFS config {\"dim\",\"c\",\"offsets\"}");
    p->excludes(c);
  };
  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--max-points", max_points, "Point-count cap for IFS iteration")->capture_default_str();
  };

  auto* info = app.add_subcommand("info", "Describe an IFS: fixed points, separation, resolutions");
  add_source(info);
  add_cap(info);

  auto* landscape = app.add_subcommand("landscape", "Fixed-point landscape as CSV");
  add_source(landscape);
  landscape->add_option("--levels", levels, "Number of levels")->capture_default_str();
  landscape->add_option("--mode", mode_name, "closed | iterate")
      ->check(CLI::IsMember({"closed", "iterate"}))
      ->capture_default_str();
  landscape->add_option("-o", output, "Write CSV here instead of stdout");

  auto* empirical = app.add_subcommand("empirical", "Landscape and diagram of S_n as CSV");
  add_source(empirical);
  add_cap(empirical);
  empirical->add_option("--iters", iters, "Number n of IFS applications")->capture_default_str();
  auto* empirical_levels = empirical->add_option("--levels", levels, "Number of levels (default: all)");
  empirical->add_option("-o", output, "Landscape CSV path; the diagram goes to <stem>.diagram.csv");

  auto* verify = app.add_subcommand("verify", "Check op(f_n) = f_(n+1) and convergence to the fixed point");
  verify->add_option("name", positional_preset, "Preset name")->type_name("PRESET");
  verify->add_option("--preset", source.preset, "Preset name");
  verify->add_option("--n-max", n_max, "Largest n of S_n")->capture_default_str();
  verify->add_option("-o", output, "Also write <prefix>-commutation.csv and <prefix>-convergence.csv");
  add_cap(verify);

  auto* plot = app.add_subcommand("plot", "SVG of the fixed-point landscape");
  add_source(plot);
  add_cap(plot);
  plot->add_option("--levels", levels, "Number of levels")->capture_default_str();
  auto* cloud_opt = plot->add_option("--with-cloud", with_cloud, "Add a scatter panel of S_n (dim <= 2)");
  plot->add_option("-o", output, "Output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*info) return cmd_info(source, out, max_points);
    if (*landscape) {
      const Mode mode = mode_name == "iterate" ? Mode::kIterate : Mode::kClosed;
      if (output.empty()) return cmd_landscape(source, levels, mode, out);
      std::ostringstream buffer;
      const int code = cmd_landscape(source, levels, mode, buffer);
      open_output(output) << buffer.str();
      return code;
    }
    if (*empirical) {
      const std::optional<std::size_t> lv = empirical_levels->count() ? std::optional(levels) : std::nullopt;
      if (output.empty()) {
        std::ostringstream diagram;
        std::ostringstream land;
        const int code = cmd_empirical(source, iters, lv, land, diagram, max_points);
        out << diagram.str() << '\n' << land.str();
        return code;
      }
      std::filesystem::path path(output);
      std::filesystem::path diagram_path = path;
      diagram_path.replace_extension();
      diagram_path += ".diagram.csv";
      std::ofstream land = open_output(path);
      std::ofstream diagram = open_output(diagram_path);
      return cmd_empirical(source, iters, lv, land, diagram, max_points);
    }
    if (*verify) {
      if (!positional_preset.empty() && source.preset && *source.preset != positional_preset) {
        throw UsageError("conflicting preset names");
      }
      const std::string name = !positional_preset.empty() ? positional_preset : source.preset.value_or("");
      if (name.empty()) throw UsageError("verify needs a preset name");
      std::optional<std::filesystem::path> prefix;
      if (!output.empty()) prefix = output;
      return cmd_verify(name, n_max, out, prefix, max_points);
    }
    if (*plot) {
      const std::optional<std::size_t> cloud_n = cloud_opt->count() ? std::optional(with_cloud) : std::nullopt;
      return cmd_plot(source, levels, output, cloud_n, max_points);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PointCapExceeded& e) {
    err << "error: " << e.what() << " (raise --max-points to allow it)\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace fractalscape::cli
