#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gxt/hull.hpp"

namespace gxt::support {

// A totally geodesic plane presented through its chart: `distance` is the
// chart-orthogonal residual of a point to the plane and `to_chart` maps
// near-plane points to hull-ready 2D coordinates (an isometric chart for
// flat planes, Klein-disk coordinates for hyperbolic ones).
struct Plane {
  PlaneGeometry geometry = PlaneGeometry::Flat;
  std::function<double(const VectorXd&)> distance;
  std::function<Vector2d(const VectorXd&)> to_chart;
  std::uint64_t key = 0;
};

// A sampled plane cover. `samples` are fixed planes; `through` produces
// the planes of the family that pass exactly through a query point, which
// keeps the membership test meaningful off the sample grid.
struct PlaneFamily {
  std::vector<Plane> samples;
  std::function<std::vector<Plane>(const VectorXd&)> through;

  bool empty() const { return samples.empty() && !through; }
};

}  // namespace gxt::support
