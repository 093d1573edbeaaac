#pragma once

#include <vector>

#include "gxt/plane.hpp"

namespace gxt::support {

using PointCloud = std::vector<VectorXd>;

struct SupportSetOptions {
  double member_tol = 1e-6;  // query point counts as on-plane below this
  double slab_tol = 0.05;    // half-thickness for slicing the point cloud
  double hull_tol = 1e-10;   // hull membership tolerance in chart units
};

// Membership predicate for the support set of a compact K relative to a
// plane cover: a point is rejected iff some plane of the family contains
// it but its chart image falls outside the convex hull of the K slice.
// An empty K gives the empty predicate.
class SupportSet {
 public:
  SupportSet(PointCloud k, PlaneFamily planes, SupportSetOptions opt = {});

  bool contains(const VectorXd& x) const;

  PlanarSet slice(const Plane& p) const;
  HullPolygon slice_hull(const Plane& p) const;

  const PointCloud& cloud() const { return k_; }
  const SupportSetOptions& options() const { return opt_; }

 private:
  PointCloud k_;
  PlaneFamily planes_;
  SupportSetOptions opt_;
};

// K points within slab_tol of the plane, mapped to its chart
PlanarSet slice_cloud(const PointCloud& k, const Plane& p, double slab_tol);

struct BoundingBall {
  VectorXd center;
  double radius = 0.0;
};

BoundingBall bounding_ball(const PointCloud& k);

double cloud_diameter(const PointCloud& k);

struct DiameterBound {
  double max_slice_diameter = 0.0;  // max intrinsic diameter of K slices
  double cloud_diam = 0.0;
  double bound = 0.0;  // 2 * max_slice_diameter + cloud_diam
};

// Diameter control from the sampled translates: the measured diameter of
// the support set must stay below 2 D_K + diam K.
DiameterBound diameter_bound(const PointCloud& k, const std::vector<Plane>& planes,
                             const SupportSetOptions& opt = {});

struct OccupancyGrid {
  std::vector<VectorXd> points;
  std::vector<char> inside;
  double spacing = 0.0;

  size_t accepted_count() const;
  // max chart distance between accepted grid points (direction-net
  // approximation above the exact-search cutoff)
  double diameter() const;
};

OccupancyGrid evaluate_occupancy(const std::function<bool(const VectorXd&)>& pred,
                                 const VectorXd& lo, const VectorXd& hi,
                                 int per_axis);

// Support-set diameters for a nested shrinking sequence of compacts.
// Nesting is validated through bounding balls; a violation throws GridError.
std::vector<double> shrinking_diameters(const std::vector<PointCloud>& ks,
                                        const PlaneFamily& planes,
                                        const VectorXd& lo, const VectorXd& hi,
                                        int per_axis,
                                        const SupportSetOptions& opt = {});

}  // namespace gxt::support
