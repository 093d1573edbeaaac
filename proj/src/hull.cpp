#include "gxt/hull.hpp"

#include <algorithm>

namespace gxt::support {

double hyperbolic_distance_klein(const Vector2d& a, const Vector2d& b) {
  const double qa = 1.0 - a.squaredNorm();
  const double qb = 1.0 - b.squaredNorm();
  if (qa <= 0 || qb <= 0)
    throw Error("Klein-model point outside the open unit disk");
  const double num = 1.0 - a.dot(b);
  const double arg = num / std::sqrt(qa * qb);
  return std::acosh(std::max(1.0, arg));
}

double chart_distance(const PlanarSet& s, const Vector2d& a, const Vector2d& b) {
  return s.geometry == PlaneGeometry::Flat ? (a - b).norm()
                                           : hyperbolic_distance_klein(a, b);
}

double set_diameter(const PlanarSet& s) {
  double best = 0.0;
  for (size_t i = 0; i < s.points.size(); ++i)
    for (size_t j = i + 1; j < s.points.size(); ++j)
      best = std::max(best, chart_distance(s, s.points[i], s.points[j]));
  return best;
}

namespace {

double cross(const Vector2d& o, const Vector2d& a, const Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

double point_segment_distance(const Vector2d& p, const Vector2d& a,
                              const Vector2d& b) {
  const Vector2d ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 <= 0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

}  // namespace

HullPolygon HullPolygon::of(const PlanarSet& s) {
  HullPolygon hull;
  hull.geometry_ = s.geometry;
  if (s.geometry == PlaneGeometry::HyperbolicKlein) {
    for (const auto& p : s.points)
      if (p.squaredNorm() >= 1.0)
        throw Error("Klein-model point outside the open unit disk");
  }
  std::vector<Vector2d> pts = s.points;
  std::sort(pts.begin(), pts.end(), [](const Vector2d& a, const Vector2d& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vector2d& a, const Vector2d& b) {
                          return (a - b).norm() <= 0.0;
                        }),
            pts.end());
  const size_t n = pts.size();
  if (n <= 2) {
    hull.vertices_ = pts;
    return hull;
  }
  std::vector<Vector2d> out(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && cross(out[k - 2], out[k - 1], pts[i]) <= 0) --k;
    out[k++] = pts[i];
  }
  for (size_t i = n - 1, lower = k + 1; i-- > 0;) {  // upper
    while (k >= lower && cross(out[k - 2], out[k - 1], pts[i]) <= 0) --k;
    out[k++] = pts[i];
  }
  out.resize(k - 1);
  hull.vertices_ = std::move(out);
  return hull;
}

bool HullPolygon::contains(const Vector2d& p, double tol) const {
  const size_t n = vertices_.size();
  if (n == 0) return false;
  if (n == 1) return (p - vertices_[0]).norm() <= tol;
  if (n == 2) return point_segment_distance(p, vertices_[0], vertices_[1]) <= tol;
  for (size_t i = 0; i < n; ++i) {
    const Vector2d& a = vertices_[i];
    const Vector2d& b = vertices_[(i + 1) % n];
    const double edge = (b - a).norm();
    if (edge <= 0) continue;
    // signed distance of p to the directed edge; inside is positive
    if (cross(a, b, p) / edge < -tol) return false;
  }
  return true;
}

double HullPolygon::diameter() const {
  PlanarSet s{vertices_, geometry_};
  return set_diameter(s);
}

}  // namespace gxt::support
