#include "gxt/nil_group.hpp"

#include <algorithm>

namespace gxt::nil {

VectorXd bch_product(const LieAlgebra& a, const VectorXd& p, const VectorXd& q) {
  if (!a.is_two_step())
    throw NotTwoStep("truncated product needs a 2-step algebra");
  return p + q + 0.5 * a.bracket(p, q);
}

VectorXd chart_velocity(const LieAlgebra& a, const VectorXd& p,
                        const VectorXd& v) {
  return v + 0.5 * a.bracket(p, v);
}

VectorXd body_velocity(const LieAlgebra& a, const VectorXd& p,
                       const VectorXd& chart_vel) {
  return chart_vel - 0.5 * a.bracket(p, chart_vel);
}

GeodesicPath heisenberg_geodesic(double x, double alpha, double z) {
  const double c = std::cos(alpha), s = std::sin(alpha);
  auto eval = [x, z, c, s](double t) {
    PathState st;
    st.position.resize(3);
    st.velocity.resize(3);
    const double u = x, v = t, w = x * t / 2.0 + z;
    st.position << c * u - s * v, s * u + c * v, w;
    st.velocity << -s, c, x / 2.0;
    return st;
  };
  return GeodesicPath::closed_form(eval, -1e9, 1e9, 1.0);
}

namespace {

struct FlowState {
  VectorXd pos;
  VectorXd body;  // left-invariant velocity components
};

struct FlowRhs {
  const LieAlgebra& a;
  Eigen::LDLT<MatrixXd> ip_solver;

  explicit FlowRhs(const LieAlgebra& alg) : a(alg), ip_solver(alg.ip()) {}

  FlowState operator()(const FlowState& s) const {
    FlowState d;
    d.pos = s.body + 0.5 * a.bracket(s.pos, s.body);
    VectorXd m(a.dim());
    for (int k = 0; k < a.dim(); ++k)
      m(k) = a.inner(s.body, a.bracket(s.body, a.basis_vector(k)));
    d.body = ip_solver.solve(m);
    return d;
  }
};

FlowState rk4_step(const FlowRhs& rhs, const FlowState& s, double h) {
  const FlowState k1 = rhs(s);
  FlowState s2{s.pos + 0.5 * h * k1.pos, s.body + 0.5 * h * k1.body};
  const FlowState k2 = rhs(s2);
  FlowState s3{s.pos + 0.5 * h * k2.pos, s.body + 0.5 * h * k2.body};
  const FlowState k3 = rhs(s3);
  FlowState s4{s.pos + h * k3.pos, s.body + h * k3.body};
  const FlowState k4 = rhs(s4);
  return {s.pos + h / 6.0 * (k1.pos + 2 * k2.pos + 2 * k3.pos + k4.pos),
          s.body + h / 6.0 * (k1.body + 2 * k2.body + 2 * k3.body + k4.body)};
}

struct SweepResult {
  std::vector<double> t;
  std::vector<VectorXd> pos, vel, acc;
  double max_energy_dev = 0.0;
};

SweepResult sweep(const LieAlgebra& a, const FlowRhs& rhs, const FlowState& s0,
                  double t_span, double h, double e0) {
  SweepResult out;
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(t_span) / h)));
  const double dt = t_span / steps;
  FlowState s = s0;
  double t = 0.0;
  for (int i = 0; i <= steps; ++i) {
    const FlowState d = rhs(s);
    out.t.push_back(t);
    out.pos.push_back(s.pos);
    out.vel.push_back(d.pos);
    // chart acceleration: d/dt (v + [x, v]/2)
    out.acc.push_back(d.body + 0.5 * a.bracket(d.pos, s.body) +
                      0.5 * a.bracket(s.pos, d.body));
    out.max_energy_dev = std::max(
        out.max_energy_dev, std::abs(a.inner(s.body, s.body) - e0) / e0);
    if (i == steps) break;
    s = rk4_step(rhs, s, dt);
    t += dt;
  }
  return out;
}

}  // namespace

GeodesicPath geodesic_flow(const LieAlgebra& a, const VectorXd& p0,
                           const VectorXd& v0, double t_span, FlowOptions opt) {
  if (!(t_span > 0)) throw Error("geodesic_flow: span must be positive");
  if (!(opt.step > 0)) throw Error("geodesic_flow: step must be positive");
  if (p0.size() != a.dim() || v0.size() != a.dim())
    throw DimensionMismatch("geodesic_flow: wrong state dimension");
  const double v0n = a.norm(v0);
  if (v0n <= 0) throw Error("geodesic_flow: zero initial velocity");

  const FlowRhs rhs(a);
  FlowState s0{p0, v0 / v0n};
  const double e0 = a.inner(s0.body, s0.body);

  double h = opt.step;
  for (int attempt = 0;; ++attempt) {
    SweepResult fwd = sweep(a, rhs, s0, t_span, h, e0);
    SweepResult bwd = sweep(a, rhs, s0, -t_span, h, e0);
    const double dev = std::max(fwd.max_energy_dev, bwd.max_energy_dev);
    if (dev <= opt.energy_tol || attempt >= opt.max_refinements) {
      std::vector<double> t(bwd.t.rbegin(), bwd.t.rend());
      std::vector<VectorXd> pos(bwd.pos.rbegin(), bwd.pos.rend());
      std::vector<VectorXd> vel(bwd.vel.rbegin(), bwd.vel.rend());
      std::vector<VectorXd> acc(bwd.acc.rbegin(), bwd.acc.rend());
      t.insert(t.end(), fwd.t.begin() + 1, fwd.t.end());
      pos.insert(pos.end(), fwd.pos.begin() + 1, fwd.pos.end());
      vel.insert(vel.end(), fwd.vel.begin() + 1, fwd.vel.end());
      acc.insert(acc.end(), fwd.acc.begin() + 1, fwd.acc.end());
      return GeodesicPath::from_samples(std::move(t), std::move(pos),
                                        std::move(vel), std::move(acc));
    }
    h *= 0.5;
  }
}

double energy_drift(const LieAlgebra& a, const GeodesicPath& path, int checks) {
  double worst = 0.0;
  double e0 = -1.0;
  for (int i = 0; i <= checks; ++i) {
    const double t =
        path.t_min() + (path.t_max() - path.t_min()) * i / checks;
    const PathState st = path(t);
    const VectorXd body = body_velocity(a, st.position, st.velocity);
    const double e = a.inner(body, body);
    if (e0 < 0)
      e0 = e;
    else
      worst = std::max(worst, std::abs(e - e0) / e0);
  }
  return worst;
}

EscapeProfile escape_profile(const LieAlgebra& a, double radius,
                             int num_samples, double horizon, FlowOptions opt) {
  if (!(radius > 0)) throw Error("escape_profile: radius must be positive");
  if (horizon <= 0) horizon = std::max(20.0, 8.0 * radius);

  std::vector<VectorXd> dirs;
  if (a.dim() == 3) {
    for (const auto& d : fibonacci_sphere(num_samples)) dirs.emplace_back(d);
  } else {
    dirs = seeded_directions(a.dim(), num_samples, 0x9e3779b97f4a7c15ull);
  }

  EscapeProfile profile;
  const VectorXd origin = VectorXd::Zero(a.dim());
  for (const auto& dir : dirs) {
    GeodesicPath path = geodesic_flow(a, origin, dir, horizon, opt);
    double exit_t = -1.0;
    double prev_t = 0.0;
    const int n = static_cast<int>(std::ceil(horizon / opt.step));
    for (int i = 1; i <= n; ++i) {
      const double t = horizon * i / n;
      if (path(t).position.norm() > radius) {
        exit_t = bisect_root(
            [&](double s) { return path(s).position.norm() - radius; }, prev_t,
            t);
        break;
      }
      prev_t = t;
    }
    if (exit_t < 0)
      throw HorizonExceeded("a sampled geodesic stayed inside the ball; "
                            "increase the horizon");
    profile.exit_times.push_back(exit_t);
    profile.max_exit_time = std::max(profile.max_exit_time, exit_t);
  }
  return profile;
}

// --- paraboloids ---------------------------------------------------------

Vector3d heis_product(const Vector3d& p, const Vector3d& q) {
  return {p.x() + q.x(), p.y() + q.y(),
          p.z() + q.z() + (p.x() * q.y() - p.y() * q.x()) / 2.0};
}

Vector3d heis_rotate(double angle, const Vector3d& p) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x() - s * p.y(), s * p.x() + c * p.y(), p.z()};
}

bool Paraboloid::contains(const Vector3d& q, double tol) const {
  const Vector3d w = heis_rotate(-rotation, heis_product(-translation, q));
  const double bowl = (w.x() * w.x() + w.y() * w.y()) / 4.0;
  return opens_up ? w.z() >= bowl + shift - tol : w.z() <= shift - bowl + tol;
}

ParaboloidSupportSet::ParaboloidSupportSet(std::vector<Vector3d> k,
                                           int rotations,
                                           std::vector<Vector3d> shifts) {
  if (k.empty()) throw Error("paraboloid support set: empty compact");
  if (rotations < 1) throw Error("paraboloid support set: need >= 1 rotation");
  if (shifts.empty()) shifts.push_back(Vector3d::Zero());
  for (int i = 0; i < rotations; ++i) {
    for (const auto& trans : shifts) {
      SandwichFrame f;
      f.rotation = 2.0 * kPi * i / rotations;
      f.translation = trans;
      f.h_minus = -1e300;
      f.h_plus = -1e300;
      for (const auto& p : k) {
        const Vector3d w = heis_rotate(-f.rotation, heis_product(-trans, p));
        const double bowl = (w.x() * w.x() + w.y() * w.y()) / 4.0;
        f.h_plus = std::max(f.h_plus, w.z() + bowl);
        f.h_minus = std::max(f.h_minus, bowl - w.z());
      }
      frames_.push_back(f);
    }
  }
}

bool ParaboloidSupportSet::contains(const Vector3d& q, double tol) const {
  for (const auto& f : frames_) {
    const Vector3d w = heis_rotate(-f.rotation, heis_product(-f.translation, q));
    const double bowl = (w.x() * w.x() + w.y() * w.y()) / 4.0;
    if (w.z() < bowl - f.h_minus - tol) return false;
    if (w.z() > f.h_plus - bowl + tol) return false;
  }
  return true;
}

// --- coset planes --------------------------------------------------------

support::Plane coset_plane(const LieAlgebra& a, const VectorXd& x,
                           const VectorXd& y, const VectorXd& base) {
  support::Plane p;
  p.geometry = support::PlaneGeometry::Flat;
  const MatrixXd ip = a.ip();
  p.to_chart = [a, x, y, base](const VectorXd& q) {
    const VectorXd w = bch_product(a, -base, q);
    return Vector2d(a.inner(w, x), a.inner(w, y));
  };
  p.distance = [a, x, y, base](const VectorXd& q) {
    const VectorXd w = bch_product(a, -base, q);
    const VectorXd res = w - a.inner(w, x) * x - a.inner(w, y) * y;
    return a.norm(res);
  };
  std::uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < base.size(); ++i) {
    const auto v = static_cast<std::int64_t>(std::llround(base(i) * 1e9));
    h = (h ^ static_cast<std::uint64_t>(v)) * 1099511628211ull;
  }
  p.key = h;
  return p;
}

support::PlaneFamily coset_plane_family(const LieAlgebra& a, const VectorXd& x,
                                        const VectorXd& y,
                                        std::vector<VectorXd> translations) {
  // orthonormal span directions make the coset chart an isometry
  const auto onb = orthonormalize({x, y}, a.ip());
  if (onb.size() != 2)
    throw ConditionFails("coset planes need independent span directions");
  const VectorXd u = onb[0], v = onb[1];
  support::PlaneFamily fam;
  for (const auto& g : translations) fam.samples.push_back(coset_plane(a, u, v, g));
  fam.through = [a, u, v](const VectorXd& q) {
    return std::vector<support::Plane>{coset_plane(a, u, v, q)};
  };
  return fam;
}

support::SupportSet plane_cover_support_set(const LieAlgebra& a, PointCloud k,
                                            const VectorXd& x, const VectorXd& y,
                                            std::vector<VectorXd> translations,
                                            support::SupportSetOptions opt) {
  const auto cert = lie::certify_flat_plane(a, x, y);
  if (!cert.ok)
    throw ConditionFails("pair does not span a totally geodesic flat plane");
  if (!a.is_two_step())
    throw NotTwoStep("coset plane cover needs a 2-step algebra");
  return support::SupportSet(std::move(k),
                             coset_plane_family(a, x, y, std::move(translations)),
                             opt);
}

}  // namespace gxt::nil

