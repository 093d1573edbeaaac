#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "gxt/errors.hpp"

namespace gxt {

using Eigen::Matrix3d;
using Eigen::MatrixXd;
using Eigen::Vector2d;
using Eigen::Vector3d;
using Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

// wrap to [0, 2*pi)
inline double wrap_angle(double a) {
  double w = std::fmod(a, 2.0 * kPi);
  if (w < 0) w += 2.0 * kPi;
  return w;
}

// signed wrap to (-pi, pi]
inline double wrap_signed(double a) {
  double w = std::fmod(a + kPi, 2.0 * kPi);
  if (w < 0) w += 2.0 * kPi;
  return w - kPi;
}

// Kernel of M as rows, using a relative singular-value threshold.
std::vector<VectorXd> kernel_basis(const MatrixXd& m, double rel_tol = 1e-10);

// Row-reduce the span of `vectors` to a canonical basis: reduced row echelon
// form with pivots in index order, sign fixed so the pivot entry is positive.
// Gives deterministic bases independent of how the span was produced.
std::vector<VectorXd> canonical_span_basis(const std::vector<VectorXd>& vectors,
                                           double rel_tol = 1e-10);

// Modified Gram-Schmidt with respect to the inner product matrix `ip`.
// Dependent vectors (norm below tol after projection) are dropped.
std::vector<VectorXd> orthonormalize(const std::vector<VectorXd>& vectors,
                                     const MatrixXd& ip, double tol = 1e-10);

// n nearly-uniform directions on the unit 2-sphere (golden-angle spiral).
std::vector<Vector3d> fibonacci_sphere(int n);

// Deterministic unit directions in d dimensions from a seeded generator.
std::vector<VectorXd> seeded_directions(int d, int n, std::uint64_t seed);

// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, int max_depth = 40);

// Bisection root refinement for continuous phi with phi(lo)*phi(hi) <= 0.
double bisect_root(const std::function<double(double)>& phi, double lo,
                   double hi, int iters = 80);

}  // namespace gxt
