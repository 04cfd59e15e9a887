#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace fractalscape {

using Vector = std::vector<double>;

inline constexpr std::size_t kDefaultPointCap = 2'000'000;

/// Thrown when an iteration would produce more points than the configured cap.
class PointCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Iterated function system of similitudes psi_j(x) = c * (x + b_j) sharing
/// a single contraction ratio c in (0, 1).
///
/// One-dimensional systems keep their offsets sorted ascending so that
/// consecutive offset differences are the gaps between neighbouring images.
class AffineIfs {
 public:
  AffineIfs(double ratio, std::vector<Vector> offsets);

  std::size_t dim() const noexcept { return dim_; }
  double ratio() const noexcept { return ratio_; }
  std::size_t size() const noexcept { return offsets_.size(); }
  const std::vector<Vector>& offsets() const noexcept { return offsets_; }

  /// Applies map `j` (0-based) to the point `x`, writing into `out`.
  void apply(std::size_t j, std::span<const double> x, std::span<double> out) const;

 private:
  std::size_t dim_;
  double ratio_;
  std::vector<Vector> offsets_;
};

/// Finite set of distinct points in R^dim, stored row-major.
///
/// Clouds built through `from_points`/`from_coords` are deduplicated and kept
/// in lexicographic order, so two clouds with the same point set compare
/// equal coordinate-for-coordinate.
class PointCloud {
 public:
  explicit PointCloud(std::size_t dim);

  static PointCloud from_points(std::size_t dim, const std::vector<Vector>& points);
  static PointCloud from_coords(std::size_t dim, std::vector<double> coords);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const noexcept { return coords_.empty(); }

  std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  const std::vector<double>& coords() const noexcept { return coords_; }
  std::vector<Vector> points() const;

  /// Merge radius used when deduplicating this cloud's coordinates.
  static double dedup_tolerance(std::size_t dim, std::span<const double> coords);

  friend bool operator==(const PointCloud&, const PointCloud&) = default;

 private:
  std::size_t dim_;
  std::vector<double> coords_;
};

double distance(std::span<const double> a, std::span<const double> b);

/// Fixed point (c / (1 - c)) b_j of every map, deduplicated.
PointCloud fixed_points(const AffineIfs& ifs);

/// Extreme points of the convex hull of the fixed points for dim <= 2; the
/// full fixed-point set in higher dimensions.
PointCloud seed_points(const AffineIfs& ifs);

/// psi_j(cloud) without deduplication against other images.
PointCloud image(const AffineIfs& ifs, const PointCloud& cloud, std::size_t j);

/// Union of all images psi_j(cloud).
PointCloud apply_ifs(const AffineIfs& ifs, const PointCloud& cloud);

/// n-fold application of `apply_ifs`. Throws PointCapExceeded when the next
/// step could exceed `cap` points.
PointCloud iterate(const AffineIfs& ifs, const PointCloud& seed, std::size_t n,
                   std::size_t cap = kDefaultPointCap);

double diameter(const PointCloud& cloud);

/// Symmetric Hausdorff distance, brute force over all pairs.
double hausdorff(const PointCloud& a, const PointCloud& b);

/// Minimum distance between the images psi_j(cloud) and psi_k(cloud).
double image_gap(const AffineIfs& ifs, const PointCloud& cloud, std::size_t j,
                 std::size_t k);

/// Exact well-separated-images test for one-dimensional systems:
/// (2c / (1 - c)) (b_N - b_1) <= min_j (b_{j+1} - b_j). Equality passes.
bool wsi_check_1d(const AffineIfs& ifs);

struct WsiEstimate {
  bool verdict;
  double margin;       ///< min image gap minus max image diameter on S_n
  double error_bound;  ///< how far `margin` may sit from the attractor's value
};

WsiEstimate wsi_check_general(const AffineIfs& ifs, std::size_t n,
                              std::size_t cap = kDefaultPointCap);

/// Resolutions delta_1..delta_N of a well-separated one-dimensional system.
std::vector<double> deltas_1d(const AffineIfs& ifs);

/// True iff every pairwise image gap on S_n is the same for n = 0..n_max.
bool const_sep_check(const AffineIfs& ifs, std::size_t n_max,
                     std::size_t cap = kDefaultPointCap);

}  // namespace fractalscape
