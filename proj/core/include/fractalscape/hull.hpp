#pragma once

#include <cstddef>
#include <vector>

#include "fractalscape/ifs.hpp"

namespace fractalscape {

/// Indices of the strict convex-hull vertices of a planar cloud in
/// counter-clockwise order (Andrew's monotone chain). Collinear boundary
/// points are dropped. Clouds of one or two points return all of them.
std::vector<std::size_t> hull_vertices_2d(const PointCloud& cloud);

}  // namespace fractalscape
