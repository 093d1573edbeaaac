#include "gxt/linalg.hpp"

#include <algorithm>
#include <random>

namespace gxt {

std::vector<VectorXd> kernel_basis(const MatrixXd& m, double rel_tol) {
  const int n = static_cast<int>(m.cols());
  if (m.rows() == 0 || n == 0) return {};
  Eigen::JacobiSVD<MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double thresh = rel_tol * (sv.size() > 0 ? sv(0) : 0.0);
  std::vector<VectorXd> out;
  for (int i = 0; i < n; ++i) {
    const double s = i < sv.size() ? sv(i) : 0.0;
    if (s <= thresh) out.push_back(svd.matrixV().col(i));
  }
  return out;
}

std::vector<VectorXd> canonical_span_basis(const std::vector<VectorXd>& vectors,
                                           double rel_tol) {
  if (vectors.empty()) return {};
  const int n = static_cast<int>(vectors.front().size());
  MatrixXd rows(static_cast<int>(vectors.size()), n);
  for (int i = 0; i < rows.rows(); ++i) rows.row(i) = vectors[static_cast<size_t>(i)];

  const double scale = std::max(rows.cwiseAbs().maxCoeff(), 1e-300);
  const double tol = rel_tol * scale;

  // Gauss-Jordan with partial pivoting, pivots left to right.
  int rank = 0;
  for (int col = 0; col < n && rank < rows.rows(); ++col) {
    int piv = -1;
    double best = tol;
    for (int r = rank; r < rows.rows(); ++r) {
      if (std::abs(rows(r, col)) > best) {
        best = std::abs(rows(r, col));
        piv = r;
      }
    }
    if (piv < 0) continue;
    rows.row(rank).swap(rows.row(piv));
    rows.row(rank) /= rows(rank, col);
    for (int r = 0; r < rows.rows(); ++r) {
      if (r != rank && std::abs(rows(r, col)) > 0)
        rows.row(r) -= rows(r, col) * rows.row(rank);
    }
    ++rank;
  }

  std::vector<VectorXd> out;
  out.reserve(static_cast<size_t>(rank));
  for (int r = 0; r < rank; ++r) {
    VectorXd v = rows.row(r);
    for (int c = 0; c < n; ++c) {
      if (std::abs(v(c)) > tol) {
        if (v(c) < 0) v = -v;
        break;
      }
    }
    out.push_back(v);
  }
  return out;
}

std::vector<VectorXd> orthonormalize(const std::vector<VectorXd>& vectors,
                                     const MatrixXd& ip, double tol) {
  std::vector<VectorXd> basis;
  for (const auto& vin : vectors) {
    VectorXd v = vin;
    for (const auto& b : basis) v -= (b.dot(ip * v)) * b;
    // second pass for numerical safety
    for (const auto& b : basis) v -= (b.dot(ip * v)) * b;
    const double nrm = std::sqrt(v.dot(ip * v));
    if (nrm > tol) basis.push_back(v / nrm);
  }
  return basis;
}

std::vector<Vector3d> fibonacci_sphere(int n) {
  std::vector<Vector3d> dirs;
  dirs.reserve(static_cast<size_t>(n));
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / n;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    dirs.emplace_back(rho * std::cos(phi), rho * std::sin(phi), z);
  }
  return dirs;
}

std::vector<VectorXd> seeded_directions(int d, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<VectorXd> dirs;
  dirs.reserve(static_cast<size_t>(n));
  while (static_cast<int>(dirs.size()) < n) {
    VectorXd v(d);
    for (int i = 0; i < d; ++i) v(i) = gauss(rng);
    const double nrm = v.norm();
    if (nrm > 1e-8) dirs.push_back(v / nrm);
  }
  return dirs;
}

namespace {

double simpson_rec(const std::function<double(double)>& f, double a, double b,
                   double fa, double fm, double fb, double whole, double tol,
                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, int max_depth) {
  if (!(b > a)) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

double bisect_root(const std::function<double(double)>& phi, double lo,
                   double hi, int iters) {
  double flo = phi(lo);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = phi(mid);
    if ((flo <= 0 && fm <= 0) || (flo >= 0 && fm >= 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace gxt
