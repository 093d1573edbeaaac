#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gxt/linalg.hpp"

namespace gxt::lie {

// Metric nilpotent Lie algebra given by structure constants in a fixed
// basis: [e_i, e_j] = sum_k c[i][j][k] e_k, plus an SPD inner product.
// The constructor validates antisymmetry, the Jacobi identity and
// positive-definiteness; invalid data throws InvalidAlgebra.
class LieAlgebra {
 public:
  LieAlgebra(int dim, std::vector<MatrixXd> bracket_forms, MatrixXd ip);

  // entries as [[i, j, k, coeff], ...] with 1-based indices; pairs not
  // listed are zero and the antisymmetric completion is automatic
  static LieAlgebra from_brackets(
      int dim, const std::vector<std::array<double, 4>>& entries,
      MatrixXd ip = MatrixXd());

  int dim() const { return dim_; }
  const MatrixXd& ip() const { return ip_; }

  VectorXd bracket(const VectorXd& x, const VectorXd& y) const;
  double inner(const VectorXd& x, const VectorXd& y) const {
    return x.dot(ip_ * y);
  }
  double norm(const VectorXd& x) const { return std::sqrt(inner(x, x)); }
  VectorXd basis_vector(int i) const;

  double jacobi_residual() const;  // max over basis triples
  bool is_two_step() const { return two_step_; }  // [g,[g,g]] = 0

 private:
  int dim_;
  // bracket_forms_[k](i,j) = coefficient of e_k in [e_i, e_j]
  std::vector<MatrixXd> bracket_forms_;
  MatrixXd ip_;
  bool two_step_ = false;
};

struct Subspace {
  MatrixXd basis;  // columns orthonormal w.r.t. the algebra inner product
  int dim() const { return static_cast<int>(basis.cols()); }
  // projection of x onto the subspace
  VectorXd project(const VectorXd& x, const MatrixXd& ip) const;
};

// ascending chain 0 < g_1 < ... < g_k = g with
// g_i = {x : [x, g] inside g_{i-1}}; throws NotNilpotent if it stalls
std::vector<Subspace> upper_central_series(const LieAlgebra& a);

// Smallest series layer i (1-based) whose width exceeds 1 + dim g_{i-1},
// which is what guarantees a commuting pair in the layer; nullopt if none.
std::optional<int> find_plane_layer(const LieAlgebra& a);

// Orthonormal commuting pair (x, y) in the layer complement
// h_i = g_{i-1}^perp  intersect g_i. Scans x over the canonical basis of h_i in
// index order and takes the first with a kernel of dimension >= 2.
std::pair<VectorXd, VectorXd> find_commuting_pair(const LieAlgebra& a, int layer);

// Levi-Civita connection of the left-invariant metric on constant fields,
// solved from 2<nabla_x y, z> = <[x,y],z> - <x,[y,z]> - <y,[x,z]>.
VectorXd levi_civita(const LieAlgebra& a, const VectorXd& x, const VectorXd& y);

struct PlaneCertificate {
  bool ok = false;
  bool independent = false;
  double bracket_norm = 0.0;
  double nabla_xx = 0.0, nabla_xy = 0.0, nabla_yy = 0.0;
};

// true iff span{x,y} exponentiates to a totally geodesic flat plane:
// the bracket and all three connection values vanish to 1e-12
PlaneCertificate certify_flat_plane(const LieAlgebra& a, const VectorXd& x,
                                    const VectorXd& y);

// n-dimensional filiform algebra: [X_1, X_i] = X_{i+1}, everything else zero
LieAlgebra filiform(int n);

LieAlgebra heisenberg();          // = filiform(3)
LieAlgebra heisenberg_plus_line();  // Heisenberg + central line, dim 4
LieAlgebra abelian(int n);

// JSON definition: {"dim": n, "brackets": [[i,j,k,coeff],...], "ip": [[..]]}
LieAlgebra from_json_text(const std::string& text);
LieAlgebra from_json_file(const std::string& path);

// named examples accepted by the CLI ("heisenberg", "filiform:5", ...)
LieAlgebra by_name(const std::string& name);

}  // namespace gxt::lie
