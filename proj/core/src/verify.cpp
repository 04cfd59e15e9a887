#include "fractalscape/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fractalscape/persistence.hpp"
#include "numfmt.hpp"

namespace fractalscape {
namespace {

// Uniform double in [0, 1) from the top 53 bits; unlike
// std::uniform_real_distribution this is identical across standard libraries.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t compared_levels(std::size_t requested, std::size_t natural) {
  return requested == kAllLevels ? natural : requested;
}

}  // namespace

bool VerificationReport::passed() const {
  return failures.empty() &&
         std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  out << report.title << '\n';
  if (report.seed) out << "seed: " << *report.seed << '\n';
  char line[160];
  std::snprintf(line, sizeof line, "%6s %10s %24s %24s %5s\n", "n", "points", "distance", "bound", "pass");
  out << line;
  for (const auto& r : report.rows) {
    std::snprintf(line, sizeof line, "%6zu %10zu %24.17g %24.17g %5s\n", r.n, r.points, r.distance, r.bound,
                  r.pass ? "yes" : "NO");
    out << line;
  }
  for (const auto& f : report.failures) out << "FAILED: " << f << '\n';
  out << "verdict: " << (report.passed() ? "pass" : "FAIL") << '\n';
  return out.str();
}

std::string render_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "n,points,distance,bound,pass\n";
  for (const auto& r : report.rows) {
    out << r.n << ',' << r.points << ',' << detail::format_number(r.distance) << ','
        << detail::format_number(r.bound) << ',' << (r.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

Landscape cloud_landscape(const PointCloud& cloud, std::size_t levels) {
  return landscape_from_diagram(h0_diagram(cloud), levels);
}

VerificationReport commutation_report(const AffineIfs& ifs, const LandscapeOperator& op, std::size_t n_max,
                                      std::size_t levels, std::size_t cap) {
  VerificationReport report;
  report.title = "commutation: op(f_n) vs f_(n+1)";
  if (n_max < 2) return report;

  PointCloud current = iterate(ifs, seed_points(ifs), 1, cap);
  Landscape current_landscape = cloud_landscape(current);
  for (std::size_t n = 1; n < n_max; ++n) {
    PointCloud next = iterate(ifs, current, 1, cap);
    Landscape next_landscape = cloud_landscape(next);

    const std::size_t produced = op.head().size() + op.block() * current_landscape.size();
    const std::size_t depth = compared_levels(levels, std::max(produced, next_landscape.size()));
    const double d = sup_distance(apply_operator(op, current_landscape, depth), next_landscape.truncated(depth));
    report.rows.push_back({n, next.size(), d, 0.0, d <= kBoundSlack});

    current = std::move(next);
    current_landscape = std::move(next_landscape);
  }
  return report;
}

VerificationReport convergence_report(const AffineIfs& ifs, const LandscapeOperator& op, std::size_t n_max,
                                      std::size_t levels, std::size_t cap) {
  VerificationReport report;
  report.title = "convergence: f_n vs fixed point";
  const double c = op.ratio();
  const double delta1 = op.head().front();

  PointCloud s = seed_points(ifs);
  double bound = delta1;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n > 0) {
      s = iterate(ifs, s, 1, cap);
      bound *= c;
    }
    // Past the cloud's own levels f_n is zero while the fixed point keeps
    // shrinking, so one extra level captures the whole tail.
    const std::size_t depth = compared_levels(levels, s.size() + 1);
    const double d = sup_distance(cloud_landscape(s, depth), fixed_point(op, depth));
    report.rows.push_back({n, s.size(), d, bound, d <= bound + kBoundSlack});
  }
  for (std::size_t i = 2; i < report.rows.size(); ++i) {
    const double prev = report.rows[i - 1].distance;
    const double cur = report.rows[i].distance;
    if (cur > (c + kBoundSlack) * prev) {
      report.failures.push_back("distance at n=" + std::to_string(report.rows[i].n) + " shrank by factor " +
                                detail::format_number(cur / prev) + " > c");
    }
  }
  return report;
}

VerificationReport stability_fuzz(std::size_t trials, std::size_t points_per_cloud, double perturbation,
                                  std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("stability_fuzz needs at least one trial");
  VerificationReport report;
  report.title = "stability: landscape distance vs Hausdorff distance";
  report.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<double> y(2 * points_per_cloud);
    for (double& v : y) v = unit_uniform(rng);
    std::vector<double> z = y;
    for (double& v : z) v += perturbation * (2.0 * unit_uniform(rng) - 1.0);
    const PointCloud cy = PointCloud::from_coords(2, std::move(y));
    const PointCloud cz = PointCloud::from_coords(2, std::move(z));
    const double d = sup_distance(cloud_landscape(cy), cloud_landscape(cz));
    // Merging at distance <= eps makes deaths pairwise distances, which move by
    // up to twice the Hausdorff distance; each hat moves by at most that much.
    const double bound = 2.0 * hausdorff(cy, cz);
    report.rows.push_back({trial, cy.size(), d, bound, d <= bound + kBoundSlack});
  }
  return report;
}

}  // namespace fractalscape
