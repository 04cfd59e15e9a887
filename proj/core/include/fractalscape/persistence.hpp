#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "fractalscape/ifs.hpp"

namespace fractalscape {

struct PersistencePair {
  double birth;
  double death;
  std::size_t multiplicity;

  friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
};

/// Multiset of (birth, death) pairs.
///
/// Construction validates death >= birth >= 0 and positive multiplicities,
/// merges entries whose (birth, death) agree to 12 significant digits, and
/// orders pairs by death descending (then birth ascending).
class PersistenceDiagram {
 public:
  PersistenceDiagram() = default;
  explicit PersistenceDiagram(std::vector<PersistencePair> pairs);

  const std::vector<PersistencePair>& pairs() const noexcept { return pairs_; }
  bool empty() const noexcept { return pairs_.empty(); }
  std::size_t total_multiplicity() const noexcept;
  bool births_all_zero() const noexcept;

  /// Deaths repeated by multiplicity, descending.
  std::vector<double> deaths() const;

  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;

 private:
  std::vector<PersistencePair> pairs_;
};

/// Minimum-spanning-tree edge weights of the complete Euclidean graph,
/// sorted descending. Weight k (1-based) is the scale at which the number of
/// components drops from k + 1 to k.
struct MstProfile {
  std::vector<double> weights;
};

MstProfile mst_profile(const PointCloud& cloud);

/// Number of classes of the transitive closure of `distance <= eps`.
std::size_t epsilon_components(const PointCloud& cloud, double eps);

/// Zero-dimensional Čech persistence: (0, w) for each MST weight w and one
/// essential class dying at the cloud's diameter.
PersistenceDiagram h0_diagram(const PointCloud& cloud);

/// (diameter, w_1, ..., w_{m-1}) with w_k the k-th largest MST weight.
std::vector<double> empirical_deltas(const PointCloud& cloud, std::size_t m);

/// `birth,death,multiplicity` CSV, one row per pair, death descending.
void write_diagram_csv(std::ostream& out, const PersistenceDiagram& diagram);
PersistenceDiagram read_diagram_csv(std::istream& in);

}  // namespace fractalscape
