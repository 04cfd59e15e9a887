#include "fractalscape/hull.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fractalscape {
namespace {

double cross(std::span<const double> o, std::span<const double> a, std::span<const double> b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

std::vector<std::size_t> hull_vertices_2d(const PointCloud& cloud) {
  if (cloud.dim() != 2) throw std::invalid_argument("hull_vertices_2d: cloud must be planar");
  const std::size_t n = cloud.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto pa = cloud[a];
    const auto pb = cloud[b];
    return pa[0] < pb[0] || (pa[0] == pb[0] && pa[1] < pb[1]);
  });
  if (n <= 2) return order;

  // Relative tolerance so that fixed points computed as c/(1-c)*b_j that are
  // collinear up to rounding still count as collinear.
  double scale = 0.0;
  for (double v : cloud.coords()) scale = std::max(scale, std::abs(v));
  const double eps = 1e-12 * (1.0 + scale * scale);

  std::vector<std::size_t> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i : order) {
    while (k >= 2 && cross(cloud[hull[k - 2]], cloud[hull[k - 1]], cloud[i]) <= eps) --k;
    hull[k++] = i;
  }
  const std::size_t lower = k + 1;
  for (std::size_t idx = n - 1; idx-- > 0;) {
    const std::size_t i = order[idx];
    while (k >= lower && cross(cloud[hull[k - 2]], cloud[hull[k - 1]], cloud[i]) <= eps) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace fractalscape
