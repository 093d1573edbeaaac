#include "gxt/support_set.hpp"

#include <algorithm>

namespace gxt::support {

SupportSet::SupportSet(PointCloud k, PlaneFamily planes, SupportSetOptions opt)
    : k_(std::move(k)), planes_(std::move(planes)), opt_(opt) {
  if (planes_.empty()) throw Error("support set needs a nonempty plane family");
}

PlanarSet slice_cloud(const PointCloud& k, const Plane& p, double slab_tol) {
  PlanarSet s;
  s.geometry = p.geometry;
  for (const auto& q : k)
    if (p.distance(q) <= slab_tol) s.points.push_back(p.to_chart(q));
  return s;
}

PlanarSet SupportSet::slice(const Plane& p) const {
  return slice_cloud(k_, p, opt_.slab_tol);
}

HullPolygon SupportSet::slice_hull(const Plane& p) const {
  return HullPolygon::of(slice(p));
}

bool SupportSet::contains(const VectorXd& x) const {
  if (k_.empty()) return false;
  std::vector<Plane> relevant;
  if (planes_.through) relevant = planes_.through(x);
  for (const auto& p : planes_.samples)
    if (p.distance(x) <= opt_.member_tol) relevant.push_back(p);
  for (const auto& p : relevant) {
    const HullPolygon hull = slice_hull(p);
    if (hull.empty()) return false;
    if (!hull.contains(p.to_chart(x), opt_.hull_tol)) return false;
  }
  return true;
}

BoundingBall bounding_ball(const PointCloud& k) {
  BoundingBall b;
  if (k.empty()) return b;
  b.center = VectorXd::Zero(k.front().size());
  for (const auto& p : k) b.center += p;
  b.center /= static_cast<double>(k.size());
  for (const auto& p : k) b.radius = std::max(b.radius, (p - b.center).norm());
  return b;
}

double cloud_diameter(const PointCloud& k) {
  double best = 0.0;
  for (size_t i = 0; i < k.size(); ++i)
    for (size_t j = i + 1; j < k.size(); ++j)
      best = std::max(best, (k[i] - k[j]).norm());
  return best;
}

DiameterBound diameter_bound(const PointCloud& k, const std::vector<Plane>& planes,
                             const SupportSetOptions& opt) {
  if (planes.empty()) throw Error("diameter bound needs a plane sample");
  DiameterBound out;
  for (const auto& p : planes) {
    const PlanarSet s = slice_cloud(k, p, opt.slab_tol);
    if (!s.points.empty())
      out.max_slice_diameter = std::max(out.max_slice_diameter, set_diameter(s));
  }
  out.cloud_diam = cloud_diameter(k);
  out.bound = 2.0 * out.max_slice_diameter + out.cloud_diam;
  return out;
}

size_t OccupancyGrid::accepted_count() const {
  return static_cast<size_t>(std::count(inside.begin(), inside.end(), 1));
}

double OccupancyGrid::diameter() const {
  std::vector<const VectorXd*> acc;
  for (size_t i = 0; i < points.size(); ++i)
    if (inside[i]) acc.push_back(&points[i]);
  if (acc.size() < 2) return 0.0;

  if (acc.size() <= 6000) {
    double best = 0.0;
    for (size_t i = 0; i < acc.size(); ++i)
      for (size_t j = i + 1; j < acc.size(); ++j)
        best = std::max(best, (*acc[i] - *acc[j]).norm());
    return best;
  }

  // direction-net extremes plus a farthest-point double sweep
  const int d = static_cast<int>(acc.front()->size());
  std::vector<const VectorXd*> candidates;
  for (const auto& dir : seeded_directions(d, 256, 20240501ull)) {
    const VectorXd* lo = acc.front();
    const VectorXd* hi = acc.front();
    for (const auto* p : acc) {
      const double v = dir.dot(*p);
      if (v < dir.dot(*lo)) lo = p;
      if (v > dir.dot(*hi)) hi = p;
    }
    candidates.push_back(lo);
    candidates.push_back(hi);
  }
  double best = 0.0;
  for (size_t i = 0; i < candidates.size(); ++i)
    for (size_t j = i + 1; j < candidates.size(); ++j)
      best = std::max(best, (*candidates[i] - *candidates[j]).norm());
  const VectorXd* far_pt = acc.front();
  for (int sweep = 0; sweep < 3; ++sweep) {
    const VectorXd* next = far_pt;
    for (const auto* p : acc)
      if ((*p - *far_pt).norm() > (*next - *far_pt).norm()) next = p;
    best = std::max(best, (*next - *far_pt).norm());
    far_pt = next;
  }
  return best;
}

OccupancyGrid evaluate_occupancy(const std::function<bool(const VectorXd&)>& pred,
                                 const VectorXd& lo, const VectorXd& hi,
                                 int per_axis) {
  if (per_axis < 2) throw GridError("occupancy grid needs >= 2 points per axis");
  const int d = static_cast<int>(lo.size());
  OccupancyGrid g;
  g.spacing = (hi - lo).cwiseAbs().maxCoeff() / (per_axis - 1);
  size_t total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<size_t>(per_axis);
  g.points.reserve(total);
  g.inside.reserve(total);
  std::vector<int> idx(static_cast<size_t>(d), 0);
  while (true) {
    VectorXd p(d);
    for (int i = 0; i < d; ++i)
      p(i) = lo(i) + (hi(i) - lo(i)) * idx[static_cast<size_t>(i)] / (per_axis - 1);
    g.points.push_back(p);
    g.inside.push_back(pred(p) ? 1 : 0);
    int axis = d - 1;
    while (axis >= 0 && ++idx[static_cast<size_t>(axis)] == per_axis) {
      idx[static_cast<size_t>(axis)] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  return g;
}

std::vector<double> shrinking_diameters(const std::vector<PointCloud>& ks,
                                        const PlaneFamily& planes,
                                        const VectorXd& lo, const VectorXd& hi,
                                        int per_axis,
                                        const SupportSetOptions& opt) {
  for (size_t i = 0; i + 1 < ks.size(); ++i) {
    const BoundingBall outer = bounding_ball(ks[i]);
    for (const auto& p : ks[i + 1])
      if (!ks[i + 1].empty() && !ks[i].empty() &&
          (p - outer.center).norm() > outer.radius + 1e-9)
        throw GridError("shrinking sequence is not nested");
  }
  std::vector<double> diams;
  for (const auto& k : ks) {
    if (k.empty()) {
      diams.push_back(0.0);
      continue;
    }
    SupportSet s(k, planes, opt);
    const OccupancyGrid g = evaluate_occupancy(
        [&](const VectorXd& x) { return s.contains(x); }, lo, hi, per_axis);
    diams.push_back(g.diameter());
  }
  return diams;
}

}  // namespace gxt::support
