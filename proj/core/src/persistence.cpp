#include "fractalscape/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "numfmt.hpp"

namespace fractalscape {
namespace {

// Deaths are grouped after rounding to 12 significant digits; powers of c
// computed along different arithmetic paths then land in the same bucket.
double grouping_key(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return std::strtod(buf, nullptr);
}

struct PrimResult {
  std::vector<double> weights;  // in tree-insertion order
  double diameter = 0.0;
};

// Dense Prim on the complete Euclidean graph. Every unordered pair is
// evaluated exactly once (when the first of its endpoints joins the tree),
// which also yields the diameter for free.
PrimResult dense_prim(const PointCloud& cloud) {
  const std::size_t n = cloud.size();
  PrimResult result;
  if (n == 0) return result;
  result.weights.reserve(n - 1);

  std::vector<double> key(n, std::numeric_limits<double>::infinity());
  std::vector<char> in_tree(n, 0);
  std::size_t current = 0;
  in_tree[0] = 1;
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t next = n;
    double best = std::numeric_limits<double>::infinity();
    const auto p = cloud[current];
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      const double d = distance(p, cloud[v]);
      result.diameter = std::max(result.diameter, d);
      if (d < key[v]) key[v] = d;
      // Ties resolve to the smaller index because v ascends.
      if (key[v] < best) {
        best = key[v];
        next = v;
      }
    }
    in_tree[next] = 1;
    result.weights.push_back(best);
    current = next;
  }
  return result;
}

}  // namespace

PersistenceDiagram::PersistenceDiagram(std::vector<PersistencePair> pairs) {
  for (const auto& p : pairs) {
    if (!std::isfinite(p.birth) || !std::isfinite(p.death)) {
      throw std::invalid_argument("persistence pairs must be finite");
    }
    if (p.birth < 0.0) throw std::invalid_argument("persistence pair with negative birth");
    if (p.death < p.birth) throw std::invalid_argument("persistence pair with death < birth");
    if (p.multiplicity == 0) throw std::invalid_argument("persistence pair with zero multiplicity");
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const PersistencePair& a, const PersistencePair& b) {
    if (a.death != b.death) return a.death > b.death;
    return a.birth < b.birth;
  });
  for (const auto& p : pairs) {
    if (!pairs_.empty()) {
      auto& last = pairs_.back();
      if (grouping_key(last.death) == grouping_key(p.death) &&
          grouping_key(last.birth) == grouping_key(p.birth)) {
        last.multiplicity += p.multiplicity;
        continue;
      }
    }
    pairs_.push_back(p);
  }
}

std::size_t PersistenceDiagram::total_multiplicity() const noexcept {
  std::size_t total = 0;
  for (const auto& p : pairs_) total += p.multiplicity;
  return total;
}

bool PersistenceDiagram::births_all_zero() const noexcept {
  return std::all_of(pairs_.begin(), pairs_.end(), [](const PersistencePair& p) { return p.birth == 0.0; });
}

std::vector<double> PersistenceDiagram::deaths() const {
  std::vector<double> out;
  out.reserve(total_multiplicity());
  for (const auto& p : pairs_) out.insert(out.end(), p.multiplicity, p.death);
  std::stable_sort(out.begin(), out.end(), std::greater<>());
  return out;
}

MstProfile mst_profile(const PointCloud& cloud) {
  if (cloud.empty()) throw std::invalid_argument("mst_profile of an empty cloud");
  MstProfile profile{dense_prim(cloud).weights};
  std::sort(profile.weights.begin(), profile.weights.end(), std::greater<>());
  return profile;
}

std::size_t epsilon_components(const PointCloud& cloud, double eps) {
  if (!(eps >= 0.0)) throw std::invalid_argument("epsilon must be nonnegative");
  if (cloud.empty()) return 0;
  const auto weights = dense_prim(cloud).weights;
  // Closed balls: a gap equal to eps up to rounding still merges.
  return 1 + static_cast<std::size_t>(std::count_if(weights.begin(), weights.end(), [eps](double w) {
           return w > eps + 1e-12 * std::max(eps, w);
         }));
}

PersistenceDiagram h0_diagram(const PointCloud& cloud) {
  if (cloud.empty()) throw std::invalid_argument("h0_diagram of an empty cloud");
  PrimResult prim = dense_prim(cloud);
  std::vector<PersistencePair> pairs;
  pairs.reserve(prim.weights.size() + 1);
  for (double w : prim.weights) pairs.push_back({0.0, w, 1});
  pairs.push_back({0.0, prim.diameter, 1});
  return PersistenceDiagram(std::move(pairs));
}

std::vector<double> empirical_deltas(const PointCloud& cloud, std::size_t m) {
  if (cloud.empty()) throw std::invalid_argument("empirical_deltas of an empty cloud");
  if (m == 0 || m > cloud.size()) {
    throw std::invalid_argument("empirical_deltas: m must lie in [1, point count]");
  }
  PrimResult prim = dense_prim(cloud);
  std::sort(prim.weights.begin(), prim.weights.end(), std::greater<>());
  std::vector<double> out{prim.diameter};
  out.insert(out.end(), prim.weights.begin(), prim.weights.begin() + static_cast<std::ptrdiff_t>(m - 1));
  return out;
}

void write_diagram_csv(std::ostream& out, const PersistenceDiagram& diagram) {
  out << "birth,death,multiplicity\n";
  for (const auto& p : diagram.pairs()) {
    out << detail::format_number(p.birth) << ',' << detail::format_number(p.death) << ','
        << p.multiplicity << '\n';
  }
}

PersistenceDiagram read_diagram_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "birth,death,multiplicity") {
    throw std::invalid_argument("diagram CSV: missing header 'birth,death,multiplicity'");
  }
  std::vector<PersistencePair> pairs;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string birth, death, mult;
    if (!std::getline(row, birth, ',') || !std::getline(row, death, ',') || !std::getline(row, mult)) {
      throw std::invalid_argument("diagram CSV line " + std::to_string(line_no) + ": expected 3 fields");
    }
    try {
      pairs.push_back({std::stod(birth), std::stod(death), static_cast<std::size_t>(std::stoull(mult))});
    } catch (const std::logic_error&) {
      throw std::invalid_argument("diagram CSV line " + std::to_string(line_no) + ": malformed number");
    }
  }
  return PersistenceDiagram(std::move(pairs));
}

}  // namespace fractalscape
