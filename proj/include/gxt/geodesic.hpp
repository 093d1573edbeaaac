#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "gxt/linalg.hpp"

namespace gxt {

struct PathState {
  VectorXd position;  // chart coordinates
  VectorXd velocity;  // chart velocity d(position)/dt
};

enum class Provenance { ClosedForm, Ode };

// Unit-speed geodesic with a dense evaluation map on [t_min, t_max].
// Closed-form paths wrap a lambda; integrated paths interpolate stored
// nodes with cubic Hermite polynomials (positions from velocities,
// velocities from accelerations).
class GeodesicPath {
 public:
  GeodesicPath() = default;

  static GeodesicPath closed_form(std::function<PathState(double)> eval,
                                  double t_min, double t_max,
                                  double speed = 1.0);

  static GeodesicPath from_samples(std::vector<double> times,
                                   std::vector<VectorXd> positions,
                                   std::vector<VectorXd> velocities,
                                   std::vector<VectorXd> accelerations,
                                   double speed = 1.0);

  PathState operator()(double t) const;
  VectorXd position(double t) const { return (*this)(t).position; }

  double t_min() const { return t_min_; }
  double t_max() const { return t_max_; }
  double speed() const { return speed_; }
  Provenance provenance() const { return prov_; }

  // restriction with the same evaluation map
  GeodesicPath restricted(double a, double b) const;

 private:
  struct Samples {
    std::vector<double> t;
    std::vector<VectorXd> pos, vel, acc;
  };

  std::function<PathState(double)> eval_;
  std::shared_ptr<const Samples> samples_;
  double t_min_ = 0.0, t_max_ = 0.0, speed_ = 1.0;
  Provenance prov_ = Provenance::ClosedForm;
};

}  // namespace gxt
