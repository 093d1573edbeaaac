#pragma once

#include <utility>

#include "gxt/geodesic.hpp"
#include "gxt/lie_algebra.hpp"
#include "gxt/support_set.hpp"

namespace gxt::nil {

using lie::LieAlgebra;
using support::PointCloud;

// group law in exponential coordinates, exact for 2-step algebras:
// p * q = p + q + [p, q] / 2. Throws NotTwoStep otherwise.
VectorXd bch_product(const LieAlgebra& a, const VectorXd& p, const VectorXd& q);
inline VectorXd bch_inverse(const VectorXd& p) { return -p; }

// chart velocity of a curve with left-invariant (body) velocity v at p,
// and its inverse; both exact in the 2-step chart
VectorXd chart_velocity(const LieAlgebra& a, const VectorXd& p, const VectorXd& v);
VectorXd body_velocity(const LieAlgebra& a, const VectorXd& p,
                       const VectorXd& chart_vel);

// Horizontal Heisenberg geodesic: rotate t -> (x, t, x t / 2 + z) about the
// vertical axis by alpha. Unit speed for the orthonormal left-invariant metric.
GeodesicPath heisenberg_geodesic(double x, double alpha, double z);

struct FlowOptions {
  double step = 1e-2;
  double energy_tol = 1e-8;
  int max_refinements = 4;
};

// Left-invariant geodesic from p0 with body velocity v0 (normalized to unit
// speed), integrated with classical RK4 on [-t_span, t_span]. The step is
// halved until the relative energy drift passes the tolerance.
GeodesicPath geodesic_flow(const LieAlgebra& a, const VectorXd& p0,
                           const VectorXd& v0, double t_span,
                           FlowOptions opt = {});

// max relative drift of the metric speed along the path
double energy_drift(const LieAlgebra& a, const GeodesicPath& path,
                    int checks = 200);

struct EscapeProfile {
  double max_exit_time = 0.0;
  std::vector<double> exit_times;
};

// First exit times from the chart ball of the given radius for unit-speed
// geodesics from the identity over a deterministic direction grid.
// Throws HorizonExceeded if any sample is still inside at the horizon.
EscapeProfile escape_profile(const LieAlgebra& a, double radius,
                             int num_samples, double horizon = 0.0,
                             FlowOptions opt = {});

// --- Heisenberg paraboloid machinery (3-dim exponential chart) ----------

// model surface w = (u^2 + v^2)/4 shifted and framed by a vertical-axis
// rotation plus a left translation
struct Paraboloid {
  double shift = 0.0;
  bool opens_up = true;
  double rotation = 0.0;
  Vector3d translation = Vector3d::Zero();

  bool contains(const Vector3d& q, double tol = 0.0) const;
};

Vector3d heis_product(const Vector3d& p, const Vector3d& q);
Vector3d heis_rotate(double angle, const Vector3d& p);

struct SandwichFrame {
  double rotation = 0.0;
  Vector3d translation = Vector3d::Zero();
  double h_minus = 0.0, h_plus = 0.0;
};

// Intersection over sampled frames of the tightest paraboloid sandwich
// enclosing K; contains K by construction and shrinks as frames are added.
class ParaboloidSupportSet {
 public:
  ParaboloidSupportSet(std::vector<Vector3d> k, int rotations,
                       std::vector<Vector3d> shifts = {Vector3d::Zero()});

  bool contains(const Vector3d& q, double tol = 1e-9) const;
  const std::vector<SandwichFrame>& frames() const { return frames_; }

 private:
  std::vector<SandwichFrame> frames_;
};

// --- plane covers by cosets of a certified flat subgroup ----------------

// The translates of the subgroup Exp(span{x, y}) partition the group; this
// is the plane of that family passing through `base`.
support::Plane coset_plane(const LieAlgebra& a, const VectorXd& x,
                           const VectorXd& y, const VectorXd& base);

// Family holding the sampled translates plus, for each query, the unique
// coset through it.
support::PlaneFamily coset_plane_family(const LieAlgebra& a, const VectorXd& x,
                                        const VectorXd& y,
                                        std::vector<VectorXd> translations);

// Support-set predicate for the coset plane cover. The pair must certify a
// flat plane (ConditionFails otherwise) and the algebra must be 2-step.
support::SupportSet plane_cover_support_set(
    const LieAlgebra& a, PointCloud k, const VectorXd& x, const VectorXd& y,
    std::vector<VectorXd> translations = {},
    support::SupportSetOptions opt = {});

}  // namespace gxt::nil
