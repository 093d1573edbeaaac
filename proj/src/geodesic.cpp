#include "gxt/geodesic.hpp"

#include <algorithm>

namespace gxt {

GeodesicPath GeodesicPath::closed_form(std::function<PathState(double)> eval,
                                       double t_min, double t_max,
                                       double speed) {
  GeodesicPath p;
  p.eval_ = std::move(eval);
  p.t_min_ = t_min;
  p.t_max_ = t_max;
  p.speed_ = speed;
  p.prov_ = Provenance::ClosedForm;
  return p;
}

GeodesicPath GeodesicPath::from_samples(std::vector<double> times,
                                        std::vector<VectorXd> positions,
                                        std::vector<VectorXd> velocities,
                                        std::vector<VectorXd> accelerations,
                                        double speed) {
  if (times.size() < 2 || times.size() != positions.size() ||
      times.size() != velocities.size() || times.size() != accelerations.size())
    throw Error("GeodesicPath: inconsistent sample arrays");
  GeodesicPath p;
  auto s = std::make_shared<Samples>();
  s->t = std::move(times);
  s->pos = std::move(positions);
  s->vel = std::move(velocities);
  s->acc = std::move(accelerations);
  p.t_min_ = s->t.front();
  p.t_max_ = s->t.back();
  p.samples_ = std::move(s);
  p.speed_ = speed;
  p.prov_ = Provenance::Ode;
  return p;
}

PathState GeodesicPath::operator()(double t) const {
  if (eval_) return eval_(t);
  if (!samples_) throw Error("GeodesicPath: empty path");
  const auto& s = *samples_;
  t = std::clamp(t, s.t.front(), s.t.back());
  auto it = std::upper_bound(s.t.begin(), s.t.end(), t);
  size_t i = static_cast<size_t>(std::distance(s.t.begin(), it));
  if (i == 0) i = 1;
  if (i >= s.t.size()) i = s.t.size() - 1;
  const size_t j = i - 1;
  const double h = s.t[i] - s.t[j];
  const double u = h > 0 ? (t - s.t[j]) / h : 0.0;
  const double u2 = u * u, u3 = u2 * u;
  const double h00 = 2 * u3 - 3 * u2 + 1;
  const double h10 = u3 - 2 * u2 + u;
  const double h01 = -2 * u3 + 3 * u2;
  const double h11 = u3 - u2;
  PathState st;
  st.position = h00 * s.pos[j] + h10 * h * s.vel[j] + h01 * s.pos[i] +
                h11 * h * s.vel[i];
  st.velocity = h00 * s.vel[j] + h10 * h * s.acc[j] + h01 * s.vel[i] +
                h11 * h * s.acc[i];
  return st;
}

GeodesicPath GeodesicPath::restricted(double a, double b) const {
  GeodesicPath p = *this;
  p.t_min_ = std::max(t_min_, a);
  p.t_max_ = std::min(t_max_, b);
  return p;
}

}  // namespace gxt
