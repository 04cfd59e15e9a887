#pragma once

#include <cstddef>
#include <vector>

#include "fractalscape/landscape.hpp"

namespace fractalscape {

enum class DeltaSource { kExact1d, kEmpirical };

/// Resolutions delta_1 >= ... >= delta_N of an attractor; delta_1 is its
/// diameter and delta_k the scale at which it has at most k - 1 components.
struct DeltaProfile {
  std::vector<double> deltas;
  DeltaSource source = DeltaSource::kExact1d;
  std::size_t iterations = 0;  ///< n of S_n for empirical profiles
  double error_bound = 0.0;    ///< bound on |empirical - exact| per entry
};

/// Affine contraction on landscape space.
///
/// Level j <= M of the image is the hat tau_(0, head_j). The remaining levels
/// come in blocks of B: level M + (k-1)B + i (k >= 1, 1 <= i <= B) is the
/// source's level k + 1 scaled by c, i.e. t -> c g^(k+1)(t / c).
class LandscapeOperator {
 public:
  LandscapeOperator(std::vector<double> head, std::size_t block, double ratio);

  const std::vector<double>& head() const noexcept { return head_; }
  std::size_t block() const noexcept { return block_; }
  double ratio() const noexcept { return ratio_; }

  /// Source level feeding output level j (> head size), 1-based.
  std::size_t source_level(std::size_t j) const;

  friend bool operator==(const LandscapeOperator&, const LandscapeOperator&) = default;

 private:
  std::vector<double> head_;
  std::size_t block_;
  double ratio_;
};

/// Operator of an N-map well-separated system: head = deltas, block = N.
LandscapeOperator wsi_operator(std::size_t n, double c, const DeltaProfile& deltas);

/// First `levels` levels of op(g).
Landscape apply_operator(const LandscapeOperator& op, const Landscape& g, std::size_t levels);

struct LipschitzBound {
  double lhs;  ///< sup_distance(op g1, op g2)
  double rhs;  ///< c * sup_distance(g1, g2)
};

LipschitzBound lipschitz_bound(const LandscapeOperator& op, const Landscape& g1, const Landscape& g2);

/// Death values of the fixed point's first `levels` levels (every level is a
/// single hat born at 0). Falls back to iteration when the head is shorter
/// than two levels.
std::vector<double> fixed_point_deaths(const LandscapeOperator& op, std::size_t levels);

Landscape fixed_point(const LandscapeOperator& op, std::size_t levels);

struct OperatorIteration {
  Landscape landscape;
  std::size_t iterations;
};

/// Applies `op` from `start` until successive iterates are closer than `tol`.
OperatorIteration iterate_operator(const LandscapeOperator& op, const Landscape& start, double tol,
                                   std::size_t levels);

/// Closed-form level j of a well-separated fixed point: tau_(0, delta_j) for
/// j <= N, otherwise tau_(0, c^k delta_l) with (l-1) N^k < j <= l N^k.
Hat closed_form_wsi(std::size_t n, double c, const DeltaProfile& deltas, std::size_t j);

}  // namespace fractalscape
