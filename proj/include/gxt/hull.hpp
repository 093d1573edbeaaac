#pragma once

#include <vector>

#include "gxt/linalg.hpp"

namespace gxt::support {

// Chart geometry of a plane. Hyperbolic planes are handled in the Klein
// disk, whose geodesics are straight chords, so one Euclidean hull routine
// serves both cases; only distances differ.
enum class PlaneGeometry { Flat, HyperbolicKlein };

struct PlanarSet {
  std::vector<Vector2d> points;
  PlaneGeometry geometry = PlaneGeometry::Flat;
};

double hyperbolic_distance_klein(const Vector2d& a, const Vector2d& b);

// distance in the set's geometry
double chart_distance(const PlanarSet& s, const Vector2d& a, const Vector2d& b);

double set_diameter(const PlanarSet& s);

// Convex hull polygon (monotone chain) with a tolerance membership test.
// Hulls of fewer than three points degenerate to a segment or a point.
class HullPolygon {
 public:
  static HullPolygon of(const PlanarSet& s);

  bool empty() const { return vertices_.empty(); }
  bool contains(const Vector2d& p, double tol = 1e-10) const;
  double diameter() const;
  const std::vector<Vector2d>& vertices() const { return vertices_; }
  PlaneGeometry geometry() const { return geometry_; }

 private:
  std::vector<Vector2d> vertices_;  // counter-clockwise
  PlaneGeometry geometry_ = PlaneGeometry::Flat;
};

}  // namespace gxt::support
