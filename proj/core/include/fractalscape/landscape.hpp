#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <vector>

#include "fractalscape/persistence.hpp"

namespace fractalscape {

/// Tent function max(0, min(t - birth, death - t)).
struct Hat {
  double birth;
  double death;

  double operator()(double t) const noexcept;
  double peak() const noexcept { return 0.5 * (death - birth); }

  friend bool operator==(const Hat&, const Hat&) = default;
};

struct Breakpoint {
  double t;
  double value;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Compactly supported, nonnegative piecewise-linear function given by its
/// breakpoints. The first and last breakpoint values are zero and abscissas
/// strictly increase; the function is zero outside the breakpoint span. An
/// empty breakpoint list is the zero function.
class PiecewiseLinearFn {
 public:
  PiecewiseLinearFn() = default;
  explicit PiecewiseLinearFn(std::vector<Breakpoint> breakpoints);

  static PiecewiseLinearFn from_hat(const Hat& hat);

  const std::vector<Breakpoint>& breakpoints() const noexcept { return points_; }
  bool is_zero() const noexcept { return points_.empty(); }

  double operator()(double t) const noexcept;
  double sup() const noexcept;

  /// (t, v) -> (c t, c v) for every breakpoint.
  PiecewiseLinearFn scaled(double c) const;

  friend bool operator==(const PiecewiseLinearFn&, const PiecewiseLinearFn&) = default;

 private:
  std::vector<Breakpoint> points_;
};

/// Truncated landscape: levels()[0] is level 1, and every level past the
/// stored ones is the zero function.
class Landscape {
 public:
  Landscape() = default;
  explicit Landscape(std::vector<PiecewiseLinearFn> levels);

  /// Landscape whose level j is the hat tau_(0, deaths[j-1]).
  static Landscape from_deaths(const std::vector<double>& deaths);

  const std::vector<PiecewiseLinearFn>& levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return levels_.size(); }

  /// Level k (1-based); the zero function past the stored levels.
  const PiecewiseLinearFn& level(std::size_t k) const;

  /// First `count` levels.
  Landscape truncated(std::size_t count) const;

  friend bool operator==(const Landscape&, const Landscape&) = default;

 private:
  std::vector<PiecewiseLinearFn> levels_;
};

inline constexpr std::size_t kAllLevels = std::numeric_limits<std::size_t>::max();

/// k-th largest hat at every t. Uses the births-zero path when it applies.
Landscape landscape_from_diagram(const PersistenceDiagram& diagram, std::size_t max_levels = kAllLevels);

/// General sweep over all hat breakpoints and pairwise intersections.
Landscape landscape_kmax(const PersistenceDiagram& diagram, std::size_t max_levels = kAllLevels);

/// All births zero: hats are nested, so level k is tau_(0, e_k).
Landscape landscape_births_zero(const PersistenceDiagram& diagram, std::size_t max_levels = kAllLevels);

double evaluate(const Landscape& landscape, std::size_t k, double t);

Landscape scale_landscape(const Landscape& landscape, double c);

/// Exact sup over levels and t of |f^(k)(t) - g^(k)(t)|.
double sup_distance(const Landscape& a, const Landscape& b);
double sup_distance(const PiecewiseLinearFn& a, const PiecewiseLinearFn& b);

double sup_norm(const Landscape& landscape);

/// `level,t,value` CSV grouped by level in breakpoint order.
void write_landscape_csv(std::ostream& out, const Landscape& landscape);
Landscape read_landscape_csv(std::istream& in);

}  // namespace fractalscape
