#include "fractalscape/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "numfmt.hpp"

namespace fractalscape {
namespace {

const PiecewiseLinearFn kZeroFn{};

double interpolate(const Breakpoint& a, const Breakpoint& b, double t) {
  if (b.t == a.t) return std::max(a.value, b.value);
  const double w = (t - a.t) / (b.t - a.t);
  return a.value + w * (b.value - a.value);
}

// Drops leading/trailing zero runs and interior points that lie on the
// segment joining their neighbours.
std::vector<Breakpoint> simplify(std::vector<Breakpoint> pts) {
  std::size_t first = 0;
  while (first + 1 < pts.size() && pts[first].value == 0.0 && pts[first + 1].value == 0.0) ++first;
  std::size_t last = pts.size();
  while (last >= first + 2 && pts[last - 1].value == 0.0 && pts[last - 2].value == 0.0) --last;
  if (last <= first + 1) return {};

  double scale = 1.0;
  for (std::size_t i = first; i < last; ++i) scale = std::max({scale, std::abs(pts[i].t), pts[i].value});
  const double tol = 1e-12 * scale;

  std::vector<Breakpoint> out;
  out.reserve(last - first);
  for (std::size_t i = first; i < last; ++i) {
    while (out.size() >= 2) {
      const Breakpoint& a = out[out.size() - 2];
      const Breakpoint& mid = out.back();
      if (std::abs(interpolate(a, pts[i], mid.t) - mid.value) > tol) break;
      out.pop_back();
    }
    out.push_back(pts[i]);
  }
  return out;
}

std::vector<Hat> expand_hats(const PersistenceDiagram& diagram) {
  std::vector<Hat> hats;
  for (const auto& p : diagram.pairs()) {
    if (p.death > p.birth) hats.insert(hats.end(), p.multiplicity, Hat{p.birth, p.death});
  }
  return hats;
}

}  // namespace

double Hat::operator()(double t) const noexcept {
  return std::max(0.0, std::min(t - birth, death - t));
}

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<Breakpoint> breakpoints) : points_(std::move(breakpoints)) {
  if (points_.empty()) return;
  if (points_.size() < 2) throw std::invalid_argument("a nonzero piecewise-linear function needs >= 2 breakpoints");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (!std::isfinite(p.t) || !std::isfinite(p.value)) throw std::invalid_argument("breakpoints must be finite");
    if (p.value < 0.0) throw std::invalid_argument("landscape values must be nonnegative");
    if (i > 0 && !(p.t > points_[i - 1].t)) throw std::invalid_argument("breakpoint abscissas must strictly increase");
  }
  if (points_.front().value != 0.0 || points_.back().value != 0.0) {
    throw std::invalid_argument("piecewise-linear landscape level must vanish at both ends");
  }
}

PiecewiseLinearFn PiecewiseLinearFn::from_hat(const Hat& hat) {
  if (!(hat.death > hat.birth)) return {};
  const double mid = 0.5 * (hat.birth + hat.death);
  return PiecewiseLinearFn({{hat.birth, 0.0}, {mid, hat(mid)}, {hat.death, 0.0}});
}

double PiecewiseLinearFn::operator()(double t) const noexcept {
  if (points_.empty() || t <= points_.front().t || t >= points_.back().t) return 0.0;
  auto it = std::upper_bound(points_.begin(), points_.end(), t,
                             [](double x, const Breakpoint& p) { return x < p.t; });
  return interpolate(*(it - 1), *it, t);
}

double PiecewiseLinearFn::sup() const noexcept {
  double best = 0.0;
  for (const auto& p : points_) best = std::max(best, p.value);
  return best;
}

PiecewiseLinearFn PiecewiseLinearFn::scaled(double c) const {
  if (!(c > 0.0)) throw std::invalid_argument("scale factor must be positive");
  std::vector<Breakpoint> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back({c * p.t, c * p.value});
  return PiecewiseLinearFn(std::move(out));
}

Landscape::Landscape(std::vector<PiecewiseLinearFn> levels) : levels_(std::move(levels)) {}

Landscape Landscape::from_deaths(const std::vector<double>& deaths) {
  std::vector<PiecewiseLinearFn> levels;
  levels.reserve(deaths.size());
  for (double d : deaths) levels.push_back(PiecewiseLinearFn::from_hat({0.0, d}));
  return Landscape(std::move(levels));
}

const PiecewiseLinearFn& Landscape::level(std::size_t k) const {
  if (k == 0) throw std::out_of_range("landscape levels are 1-based");
  return k <= levels_.size() ? levels_[k - 1] : kZeroFn;
}

Landscape Landscape::truncated(std::size_t count) const {
  const std::size_t keep = std::min(count, levels_.size());
  return Landscape(std::vector<PiecewiseLinearFn>(levels_.begin(), levels_.begin() + static_cast<std::ptrdiff_t>(keep)));
}

Landscape landscape_births_zero(const PersistenceDiagram& diagram, std::size_t max_levels) {
  if (!diagram.births_all_zero()) throw std::invalid_argument("births-zero path needs all births equal to 0");
  std::vector<double> deaths = diagram.deaths();
  while (!deaths.empty() && deaths.back() <= 0.0) deaths.pop_back();
  if (deaths.size() > max_levels) deaths.resize(max_levels);
  return Landscape::from_deaths(deaths);
}

Landscape landscape_kmax(const PersistenceDiagram& diagram, std::size_t max_levels) {
  const std::vector<Hat> hats = expand_hats(diagram);
  if (hats.empty() || max_levels == 0) return {};

  // Between consecutive nodes every hat is linear and no two hats cross, so
  // the k-th largest value is linear there too.
  std::vector<double> nodes;
  nodes.reserve(hats.size() * (hats.size() + 2));
  for (const Hat& h : hats) {
    nodes.push_back(h.birth);
    nodes.push_back(h.death);
  }
  for (const Hat& rise : hats) {
    for (const Hat& fall : hats) {
      const double t = 0.5 * (rise.birth + fall.death);
      if (t > rise.birth && t < fall.death) nodes.push_back(t);
    }
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  std::vector<std::vector<double>> values(nodes.size());
  std::size_t depth = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto& v = values[i];
    for (const Hat& h : hats) {
      const double y = h(nodes[i]);
      if (y > 0.0) v.push_back(y);
    }
    std::sort(v.begin(), v.end(), std::greater<>());
    depth = std::max(depth, v.size());
  }
  depth = std::min(depth, max_levels);

  std::vector<PiecewiseLinearFn> levels;
  levels.reserve(depth);
  for (std::size_t k = 0; k < depth; ++k) {
    std::vector<Breakpoint> pts;
    pts.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      pts.push_back({nodes[i], k < values[i].size() ? values[i][k] : 0.0});
    }
    levels.emplace_back(simplify(std::move(pts)));
  }
  while (!levels.empty() && levels.back().is_zero()) levels.pop_back();
  return Landscape(std::move(levels));
}

Landscape landscape_from_diagram(const PersistenceDiagram& diagram, std::size_t max_levels) {
  if (diagram.births_all_zero()) return landscape_births_zero(diagram, max_levels);
  return landscape_kmax(diagram, max_levels);
}

double evaluate(const Landscape& landscape, std::size_t k, double t) {
  if (k == 0) throw std::out_of_range("landscape levels are 1-based");
  return landscape.level(k)(t);
}

Landscape scale_landscape(const Landscape& landscape, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("scale factor must be positive");
  std::vector<PiecewiseLinearFn> levels;
  levels.reserve(landscape.size());
  for (const auto& level : landscape.levels()) levels.push_back(level.scaled(c));
  return Landscape(std::move(levels));
}

double sup_distance(const PiecewiseLinearFn& a, const PiecewiseLinearFn& b) {
  if (a.is_zero()) return b.sup();
  if (b.is_zero()) return a.sup();
  // |a - b| is piecewise linear on the merged breakpoints, so its max sits on one.
  double best = 0.0;
  for (const auto& p : a.breakpoints()) best = std::max(best, std::abs(p.value - b(p.t)));
  for (const auto& p : b.breakpoints()) best = std::max(best, std::abs(a(p.t) - p.value));
  return best;
}

double sup_distance(const Landscape& a, const Landscape& b) {
  const std::size_t depth = std::max(a.size(), b.size());
  double best = 0.0;
  for (std::size_t k = 1; k <= depth; ++k) best = std::max(best, sup_distance(a.level(k), b.level(k)));
  return best;
}

double sup_norm(const Landscape& landscape) {
  double best = 0.0;
  for (const auto& level : landscape.levels()) best = std::max(best, level.sup());
  return best;
}

void write_landscape_csv(std::ostream& out, const Landscape& landscape) {
  out << "level,t,value\n";
  for (std::size_t k = 0; k < landscape.size(); ++k) {
    for (const auto& p : landscape.levels()[k].breakpoints()) {
      out << (k + 1) << ',' << detail::format_number(p.t) << ',' << detail::format_number(p.value) << '\n';
    }
  }
}

Landscape read_landscape_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "level,t,value") {
    throw std::invalid_argument("landscape CSV: missing header 'level,t,value'");
  }
  std::map<std::size_t, std::vector<Breakpoint>> rows;
  std::size_t line_no = 1;
  std::size_t previous_level = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string level, t, value;
    if (!std::getline(row, level, ',') || !std::getline(row, t, ',') || !std::getline(row, value)) {
      throw std::invalid_argument("landscape CSV line " + std::to_string(line_no) + ": expected 3 fields");
    }
    std::size_t k = 0;
    Breakpoint p{};
    try {
      k = static_cast<std::size_t>(std::stoull(level));
      p = {std::stod(t), std::stod(value)};
    } catch (const std::logic_error&) {
      throw std::invalid_argument("landscape CSV line " + std::to_string(line_no) + ": malformed number");
    }
    if (k == 0 || k < previous_level) {
      throw std::invalid_argument("landscape CSV line " + std::to_string(line_no) + ": levels must be >= 1 and grouped");
    }
    previous_level = k;
    rows[k].push_back(p);
  }
  std::vector<PiecewiseLinearFn> levels(rows.empty() ? 0 : rows.rbegin()->first);
  for (auto& [k, pts] : rows) levels[k - 1] = PiecewiseLinearFn(std::move(pts));
  return Landscape(std::move(levels));
}

}  // namespace fractalscape
