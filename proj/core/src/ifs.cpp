#include "fractalscape/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "fractalscape/hull.hpp"

namespace fractalscape {
namespace {

bool lex_less(std::span<const double> a, std::span<const double> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

double min_pair_distance(const PointCloud& a, const PointCloud& b) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) best = std::min(best, distance(a[i], b[j]));
  }
  return best;
}

// sup_{x in a} inf_{y in b} |x - y|
double directed_hausdorff(const PointCloud& a, const PointCloud& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size() && nearest > worst; ++j) {
      nearest = std::min(nearest, distance(a[i], b[j]));
    }
    worst = std::max(worst, nearest);
  }
  return worst;
}

}  // namespace

AffineIfs::AffineIfs(double ratio, std::vector<Vector> offsets)
    : dim_(0), ratio_(ratio), offsets_(std::move(offsets)) {
  if (!(ratio_ > 0.0 && ratio_ < 1.0)) throw std::invalid_argument("c must lie in (0,1)");
  if (offsets_.empty()) throw std::invalid_argument("an IFS needs at least one map");
  dim_ = offsets_.front().size();
  if (dim_ == 0) throw std::invalid_argument("offsets must have positive dimension");
  for (std::size_t j = 0; j < offsets_.size(); ++j) {
    if (offsets_[j].size() != dim_) {
      throw std::invalid_argument("offset " + std::to_string(j) + " has length " +
                                  std::to_string(offsets_[j].size()) + ", expected " +
                                  std::to_string(dim_));
    }
    for (double v : offsets_[j]) {
      if (!std::isfinite(v)) throw std::invalid_argument("offsets must be finite");
    }
  }
  if (dim_ == 1) {
    std::sort(offsets_.begin(), offsets_.end());
  }
  for (std::size_t j = 0; j < offsets_.size(); ++j) {
    for (std::size_t k = j + 1; k < offsets_.size(); ++k) {
      if (offsets_[j] == offsets_[k]) throw std::invalid_argument("duplicate offsets");
    }
  }
}

void AffineIfs::apply(std::size_t j, std::span<const double> x, std::span<double> out) const {
  const Vector& b = offsets_.at(j);
  for (std::size_t d = 0; d < dim_; ++d) out[d] = ratio_ * (x[d] + b[d]);
}

PointCloud::PointCloud(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("point cloud dimension must be positive");
}

double PointCloud::dedup_tolerance(std::size_t dim, std::span<const double> coords) {
  // Bounding-box diagonal stands in for the diameter: it is within a factor
  // sqrt(dim) of it and costs O(n) instead of O(n^2).
  if (coords.empty()) return 1e-12;
  double diag2 = 0.0;
  for (std::size_t d = 0; d < dim; ++d) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = d; i < coords.size(); i += dim) {
      lo = std::min(lo, coords[i]);
      hi = std::max(hi, coords[i]);
    }
    diag2 += (hi - lo) * (hi - lo);
  }
  return 1e-12 * (1.0 + std::sqrt(diag2));
}

PointCloud PointCloud::from_coords(std::size_t dim, std::vector<double> coords) {
  PointCloud out(dim);
  if (coords.size() % dim != 0) throw std::invalid_argument("coordinate count not a multiple of dim");
  for (double v : coords) {
    if (!std::isfinite(v)) throw std::invalid_argument("point coordinates must be finite");
  }
  const std::size_t n = coords.size() / dim;
  const double tol = dedup_tolerance(dim, coords);
  auto at = [&](std::size_t i) { return std::span<const double>(coords.data() + i * dim, dim); };

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(at(a), at(b));
  });

  // Kept points are sorted by first coordinate, so only the trailing window
  // within `tol` along that axis can hold a duplicate.
  std::vector<std::size_t> kept;
  kept.reserve(n);
  for (std::size_t i : order) {
    const auto p = at(i);
    bool duplicate = false;
    for (std::size_t w = kept.size(); w-- > 0;) {
      const auto q = at(kept[w]);
      if (q[0] < p[0] - tol) break;
      if (distance(p, q) <= tol) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) kept.push_back(i);
  }

  out.coords_.reserve(kept.size() * dim);
  for (std::size_t i : kept) {
    const auto p = at(i);
    out.coords_.insert(out.coords_.end(), p.begin(), p.end());
  }
  return out;
}

PointCloud PointCloud::from_points(std::size_t dim, const std::vector<Vector>& points) {
  std::vector<double> coords;
  coords.reserve(points.size() * dim);
  for (const Vector& p : points) {
    if (p.size() != dim) throw std::invalid_argument("point has wrong dimension");
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return from_coords(dim, std::move(coords));
}

std::vector<Vector> PointCloud::points() const {
  std::vector<Vector> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back((*this)[i].begin(), (*this)[i].end());
  return out;
}

double distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) {
    const double diff = a[d] - b[d];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

// c / (1 - c), written so that c = 1/m gives exactly 1/(m - 1).
static double fixed_point_factor(double c) { return 1.0 / (1.0 / c - 1.0); }

PointCloud fixed_points(const AffineIfs& ifs) {
  const double factor = fixed_point_factor(ifs.ratio());
  std::vector<double> coords;
  coords.reserve(ifs.size() * ifs.dim());
  for (const Vector& b : ifs.offsets()) {
    for (double v : b) coords.push_back(factor * v);
  }
  return PointCloud::from_coords(ifs.dim(), std::move(coords));
}

PointCloud seed_points(const AffineIfs& ifs) {
  PointCloud fixed = fixed_points(ifs);
  if (ifs.dim() == 1) {
    if (fixed.size() <= 2) return fixed;
    // Sorted lexicographically, so the extremes are the first and last points.
    return PointCloud::from_coords(1, {fixed[0][0], fixed[fixed.size() - 1][0]});
  }
  if (ifs.dim() == 2) {
    std::vector<double> coords;
    for (std::size_t i : hull_vertices_2d(fixed)) {
      coords.push_back(fixed[i][0]);
      coords.push_back(fixed[i][1]);
    }
    return PointCloud::from_coords(2, std::move(coords));
  }
  return fixed;
}

PointCloud image(const AffineIfs& ifs, const PointCloud& cloud, std::size_t j) {
  if (cloud.dim() != ifs.dim()) throw std::invalid_argument("dimension mismatch between IFS and cloud");
  if (j >= ifs.size()) throw std::out_of_range("map index out of range");
  std::vector<double> coords(cloud.coords().size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    ifs.apply(j, cloud[i], std::span<double>(coords.data() + i * ifs.dim(), ifs.dim()));
  }
  // psi_j is injective, so no deduplication is needed; only re-sort.
  return PointCloud::from_coords(ifs.dim(), std::move(coords));
}

PointCloud apply_ifs(const AffineIfs& ifs, const PointCloud& cloud) {
  if (cloud.dim() != ifs.dim()) throw std::invalid_argument("dimension mismatch between IFS and cloud");
  const std::size_t dim = ifs.dim();
  std::vector<double> coords(cloud.coords().size() * ifs.size());
  std::size_t row = 0;
  for (std::size_t j = 0; j < ifs.size(); ++j) {
    for (std::size_t i = 0; i < cloud.size(); ++i, ++row) {
      ifs.apply(j, cloud[i], std::span<double>(coords.data() + row * dim, dim));
    }
  }
  return PointCloud::from_coords(dim, std::move(coords));
}

PointCloud iterate(const AffineIfs& ifs, const PointCloud& seed, std::size_t n, std::size_t cap) {
  if (seed.dim() != ifs.dim()) throw std::invalid_argument("dimension mismatch between IFS and cloud");
  PointCloud current = seed;
  for (std::size_t step = 0; step < n; ++step) {
    if (current.size() > cap / ifs.size()) {
      throw PointCapExceeded("iteration " + std::to_string(step + 1) + " could produce " +
                             std::to_string(current.size() * ifs.size()) +
                             " points, above the cap of " + std::to_string(cap));
    }
    current = apply_ifs(ifs, current);
  }
  return current;
}

double diameter(const PointCloud& cloud) {
  if (cloud.empty()) throw std::invalid_argument("diameter of an empty cloud");
  double best = 0.0;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    for (std::size_t j = i + 1; j < cloud.size(); ++j) best = std::max(best, distance(cloud[i], cloud[j]));
  }
  return best;
}

double hausdorff(const PointCloud& a, const PointCloud& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff distance of an empty cloud");
  if (a.dim() != b.dim()) throw std::invalid_argument("hausdorff: dimension mismatch");
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double image_gap(const AffineIfs& ifs, const PointCloud& cloud, std::size_t j, std::size_t k) {
  if (j >= ifs.size() || k >= ifs.size()) throw std::out_of_range("map index out of range");
  if (j == k) throw std::invalid_argument("image_gap needs two distinct maps");
  if (cloud.empty()) throw std::invalid_argument("image_gap of an empty cloud");
  return min_pair_distance(image(ifs, cloud, j), image(ifs, cloud, k));
}

bool wsi_check_1d(const AffineIfs& ifs) {
  if (ifs.dim() != 1) throw std::invalid_argument("wsi_check_1d requires a one-dimensional IFS");
  if (ifs.size() < 2) return true;
  const auto& b = ifs.offsets();
  const double c = ifs.ratio();
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j + 1 < b.size(); ++j) min_gap = std::min(min_gap, b[j + 1][0] - b[j][0]);
  const double lhs = 2.0 * fixed_point_factor(c) * (b.back()[0] - b.front()[0]);
  // Preset systems meet the bound with equality; absorb the rounding in c/(1-c).
  return lhs <= min_gap * (1.0 + 1e-12);
}

WsiEstimate wsi_check_general(const AffineIfs& ifs, std::size_t n, std::size_t cap) {
  if (n < 1) throw std::invalid_argument("wsi_check_general needs n >= 1");
  if (ifs.size() < 2) {
    return {true, std::numeric_limits<double>::infinity(), 0.0};
  }
  const PointCloud s = iterate(ifs, seed_points(ifs), n, cap);
  std::vector<PointCloud> images;
  images.reserve(ifs.size());
  for (std::size_t j = 0; j < ifs.size(); ++j) images.push_back(image(ifs, s, j));

  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < images.size(); ++j) {
    for (std::size_t k = j + 1; k < images.size(); ++k) {
      min_gap = std::min(min_gap, min_pair_distance(images[j], images[k]));
    }
  }
  const double diam = diameter(s);
  const double margin = min_gap - ifs.ratio() * diam;
  const double error_bound = 2.0 * std::pow(ifs.ratio(), static_cast<double>(n + 1)) * diam;
  const bool verdict = ifs.dim() == 1 ? wsi_check_1d(ifs) : margin >= -error_bound;
  return {verdict, margin, error_bound};
}

std::vector<double> deltas_1d(const AffineIfs& ifs) {
  if (ifs.dim() != 1) throw std::invalid_argument("deltas_1d requires a one-dimensional IFS");
  if (!wsi_check_1d(ifs)) throw std::domain_error("IFS does not have well-separated images");
  const auto& b = ifs.offsets();
  const double c = ifs.ratio();
  std::vector<double> deltas;
  deltas.reserve(b.size());
  const double delta1 = fixed_point_factor(c) * (b.back()[0] - b.front()[0]);
  deltas.push_back(delta1);
  std::vector<double> gaps;
  for (std::size_t j = 0; j + 1 < b.size(); ++j) gaps.push_back(c * ((b[j + 1][0] - b[j][0]) - delta1));
  std::sort(gaps.begin(), gaps.end(), std::greater<>());
  deltas.insert(deltas.end(), gaps.begin(), gaps.end());
  return deltas;
}

bool const_sep_check(const AffineIfs& ifs, std::size_t n_max, std::size_t cap) {
  if (n_max < 2) throw std::invalid_argument("const_sep_check needs n_max >= 2");
  const std::size_t maps = ifs.size();
  if (maps < 2) return true;

  PointCloud s = seed_points(ifs);
  std::vector<double> reference;
  const double tol = 1e-12 * (1.0 + diameter(s));
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n > 0) s = iterate(ifs, s, 1, cap);
    std::vector<double> gaps;
    for (std::size_t j = 0; j < maps; ++j) {
      for (std::size_t k = j + 1; k < maps; ++k) gaps.push_back(image_gap(ifs, s, j, k));
    }
    if (n == 0) {
      reference = std::move(gaps);
      continue;
    }
    for (std::size_t p = 0; p < gaps.size(); ++p) {
      if (std::abs(gaps[p] - reference[p]) > tol) return false;
    }
  }
  return true;
}

}  // namespace fractalscape
