#include "gxt/lie_algebra.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gxt::lie {

using nlohmann::json;

LieAlgebra::LieAlgebra(int dim, std::vector<MatrixXd> bracket_forms, MatrixXd ip)
    : dim_(dim), bracket_forms_(std::move(bracket_forms)), ip_(std::move(ip)) {
  if (dim_ <= 0) throw InvalidAlgebra("dimension must be positive");
  if (static_cast<int>(bracket_forms_.size()) != dim_)
    throw InvalidAlgebra("need one bracket form per basis vector");
  for (const auto& c : bracket_forms_) {
    if (c.rows() != dim_ || c.cols() != dim_)
      throw InvalidAlgebra("bracket form has wrong shape");
    if ((c + c.transpose()).cwiseAbs().maxCoeff() > 1e-12)
      throw InvalidAlgebra("structure constants are not antisymmetric");
  }
  if (ip_.size() == 0) ip_ = MatrixXd::Identity(dim_, dim_);
  if (ip_.rows() != dim_ || ip_.cols() != dim_ ||
      (ip_ - ip_.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw InvalidAlgebra("inner product must be symmetric n x n");
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(ip_);
  if (es.eigenvalues().minCoeff() <= 0)
    throw InvalidAlgebra("inner product is not positive definite");
  if (jacobi_residual() > 1e-12)
    throw InvalidAlgebra("Jacobi identity fails on basis triples");

  two_step_ = true;
  for (int i = 0; i < dim_ && two_step_; ++i)
    for (int j = 0; j < dim_ && two_step_; ++j)
      for (int k = 0; k < dim_ && two_step_; ++k) {
        const VectorXd v =
            bracket(basis_vector(i), bracket(basis_vector(j), basis_vector(k)));
        if (v.cwiseAbs().maxCoeff() > 1e-12) two_step_ = false;
      }
}

LieAlgebra LieAlgebra::from_brackets(
    int dim, const std::vector<std::array<double, 4>>& entries, MatrixXd ip) {
  std::vector<MatrixXd> forms(static_cast<size_t>(dim),
                              MatrixXd::Zero(dim, dim));
  for (const auto& e : entries) {
    const int i = static_cast<int>(e[0]) - 1;
    const int j = static_cast<int>(e[1]) - 1;
    const int k = static_cast<int>(e[2]) - 1;
    if (i < 0 || j < 0 || k < 0 || i >= dim || j >= dim || k >= dim)
      throw InvalidAlgebra("bracket index out of range");
    auto& c = forms[static_cast<size_t>(k)];
    c(i, j) += e[3];
    c(j, i) -= e[3];
  }
  return LieAlgebra(dim, std::move(forms), std::move(ip));
}

VectorXd LieAlgebra::bracket(const VectorXd& x, const VectorXd& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw DimensionMismatch("bracket: vector length != algebra dimension");
  VectorXd out(dim_);
  for (int k = 0; k < dim_; ++k)
    out(k) = x.dot(bracket_forms_[static_cast<size_t>(k)] * y);
  return out;
}

VectorXd LieAlgebra::basis_vector(int i) const {
  VectorXd e = VectorXd::Zero(dim_);
  e(i) = 1.0;
  return e;
}

double LieAlgebra::jacobi_residual() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        const VectorXd ei = basis_vector(i), ej = basis_vector(j),
                       ek = basis_vector(k);
        const VectorXd r = bracket(bracket(ei, ej), ek) +
                           bracket(bracket(ej, ek), ei) +
                           bracket(bracket(ek, ei), ej);
        worst = std::max(worst, r.cwiseAbs().maxCoeff());
      }
  return worst;
}

VectorXd Subspace::project(const VectorXd& x, const MatrixXd& ip) const {
  if (dim() == 0) return VectorXd::Zero(x.size());
  return basis * (basis.transpose() * (ip * x));
}

namespace {

Subspace make_subspace(const std::vector<VectorXd>& span, const MatrixXd& ip) {
  const auto canon = canonical_span_basis(span);
  const auto ortho = orthonormalize(canon, ip);
  Subspace s;
  if (ortho.empty()) return s;
  s.basis.resize(ortho.front().size(), static_cast<Eigen::Index>(ortho.size()));
  for (size_t i = 0; i < ortho.size(); ++i)
    s.basis.col(static_cast<Eigen::Index>(i)) = ortho[i];
  return s;
}

// {x : [x, e_j] in prev for all j}, via the kernel of the stacked maps
// x -> P_perp [x, e_j]
Subspace next_layer(const LieAlgebra& a, const Subspace& prev) {
  const int n = a.dim();
  MatrixXd proj = MatrixXd::Identity(n, n);
  if (prev.dim() > 0) proj -= prev.basis * prev.basis.transpose() * a.ip();
  MatrixXd stacked(n * n, n);
  for (int j = 0; j < n; ++j) {
    MatrixXd bj(n, n);
    for (int k = 0; k < n; ++k)
      bj.col(k) = a.bracket(a.basis_vector(k), a.basis_vector(j));
    stacked.middleRows(j * n, n) = proj * bj;
  }
  return make_subspace(kernel_basis(stacked), a.ip());
}

}  // namespace

std::vector<Subspace> upper_central_series(const LieAlgebra& a) {
  std::vector<Subspace> series;
  Subspace prev;  // zero subspace
  while (true) {
    Subspace next = next_layer(a, prev);
    if (next.dim() <= prev.dim())
      throw NotNilpotent("upper central series stalls below the full algebra");
    series.push_back(next);
    if (next.dim() == a.dim()) break;
    prev = next;
  }
  return series;
}

std::optional<int> find_plane_layer(const LieAlgebra& a) {
  const auto series = upper_central_series(a);
  int prev_dim = 0;
  for (size_t i = 0; i < series.size(); ++i) {
    const int quotient = series[i].dim() - prev_dim;
    if (quotient > 1 + prev_dim) return static_cast<int>(i) + 1;
    prev_dim = series[i].dim();
  }
  return std::nullopt;
}

namespace {

// canonical orthonormal basis of g_{i-1}^perp intersect g_i
std::vector<VectorXd> layer_complement_basis(const LieAlgebra& a,
                                             const std::vector<Subspace>& series,
                                             int layer) {
  const Subspace& gi = series[static_cast<size_t>(layer - 1)];
  std::vector<VectorXd> reduced;
  for (int c = 0; c < gi.dim(); ++c) {
    VectorXd v = gi.basis.col(c);
    if (layer >= 2) {
      const Subspace& gprev = series[static_cast<size_t>(layer - 2)];
      v -= gprev.project(v, a.ip());
    }
    if (v.norm() > 1e-12) reduced.push_back(v);
  }
  return orthonormalize(canonical_span_basis(reduced), a.ip());
}

}  // namespace

std::pair<VectorXd, VectorXd> find_commuting_pair(const LieAlgebra& a,
                                                  int layer) {
  const auto series = upper_central_series(a);
  if (layer < 1 || layer > static_cast<int>(series.size()))
    throw ConditionFails("layer index outside the central series");
  const auto h = layer_complement_basis(a, series, layer);
  const int m = static_cast<int>(h.size());
  if (m < 2) throw ConditionFails("layer complement has dimension < 2");

  for (int xi = 0; xi < m; ++xi) {
    const VectorXd& x = h[static_cast<size_t>(xi)];
    // kernel of y -> [x, y] restricted to the complement
    MatrixXd adx(a.dim(), m);
    for (int c = 0; c < m; ++c)
      adx.col(c) = a.bracket(x, h[static_cast<size_t>(c)]);
    const auto ker = kernel_basis(adx);
    if (static_cast<int>(ker.size()) < 2) continue;
    for (const auto& coeffs : canonical_span_basis(ker)) {
      VectorXd y = VectorXd::Zero(a.dim());
      for (int c = 0; c < m; ++c) y += coeffs(c) * h[static_cast<size_t>(c)];
      y -= a.inner(x, y) * x;  // orthogonal to x
      const double nrm = a.norm(y);
      if (nrm > 1e-8) {
        y /= nrm;
        return {x, y};
      }
    }
  }
  throw ConditionFails("no basis direction has a commuting partner");
}

VectorXd levi_civita(const LieAlgebra& a, const VectorXd& x,
                     const VectorXd& y) {
  if (x.size() != a.dim() || y.size() != a.dim())
    throw DimensionMismatch("levi_civita: vector length != algebra dimension");
  VectorXd rhs(a.dim());
  for (int k = 0; k < a.dim(); ++k) {
    const VectorXd z = a.basis_vector(k);
    rhs(k) = a.inner(a.bracket(x, y), z) - a.inner(x, a.bracket(y, z)) -
             a.inner(y, a.bracket(x, z));
  }
  return (2.0 * a.ip()).ldlt().solve(rhs);
}

PlaneCertificate certify_flat_plane(const LieAlgebra& a, const VectorXd& x,
                                    const VectorXd& y) {
  PlaneCertificate cert;
  MatrixXd pair(a.dim(), 2);
  pair.col(0) = x;
  pair.col(1) = y;
  Eigen::JacobiSVD<MatrixXd> svd(pair);
  cert.independent =
      svd.singularValues().minCoeff() > 1e-10 * svd.singularValues().maxCoeff();
  cert.bracket_norm = a.norm(a.bracket(x, y));
  cert.nabla_xx = a.norm(levi_civita(a, x, x));
  cert.nabla_xy = a.norm(levi_civita(a, x, y));
  cert.nabla_yy = a.norm(levi_civita(a, y, y));
  const double tol = 1e-12 * std::max(1.0, a.norm(x) * a.norm(y));
  cert.ok = cert.independent && cert.bracket_norm <= tol &&
            cert.nabla_xx <= tol && cert.nabla_xy <= tol && cert.nabla_yy <= tol;
  return cert;
}

LieAlgebra filiform(int n) {
  if (n < 3) throw InvalidAlgebra("filiform algebras need dimension >= 3");
  std::vector<std::array<double, 4>> entries;
  for (int i = 2; i < n; ++i)
    entries.push_back({1.0, static_cast<double>(i), static_cast<double>(i + 1), 1.0});
  return LieAlgebra::from_brackets(n, entries);
}

LieAlgebra heisenberg() { return filiform(3); }

LieAlgebra heisenberg_plus_line() {
  return LieAlgebra::from_brackets(4, {{1, 2, 3, 1.0}});
}

LieAlgebra abelian(int n) { return LieAlgebra::from_brackets(n, {}); }

LieAlgebra from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("algebra JSON: ") + e.what());
  }
  if (!j.contains("dim")) throw ConfigError("algebra JSON: missing 'dim'");
  const int dim = j.at("dim").get<int>();
  std::vector<std::array<double, 4>> entries;
  for (const auto& row : j.value("brackets", json::array())) {
    if (!row.is_array() || row.size() != 4)
      throw ConfigError("algebra JSON: bracket rows are [i, j, k, coeff]");
    entries.push_back({row[0].get<double>(), row[1].get<double>(),
                       row[2].get<double>(), row[3].get<double>()});
  }
  MatrixXd ip;
  if (j.contains("ip")) {
    const auto& m = j.at("ip");
    ip.resize(dim, dim);
    if (static_cast<int>(m.size()) != dim)
      throw ConfigError("algebra JSON: 'ip' must be n x n");
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) ip(r, c) = m[static_cast<size_t>(r)][static_cast<size_t>(c)].get<double>();
  }
  try {
    return LieAlgebra::from_brackets(dim, entries, std::move(ip));
  } catch (const InvalidAlgebra& e) {
    throw ConfigError(std::string("algebra JSON: ") + e.what());
  }
}

LieAlgebra from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open algebra file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

LieAlgebra by_name(const std::string& name) {
  if (name == "heisenberg") return heisenberg();
  if (name == "heisenberg_plus_line" || name == "heisenberg_plus_r")
    return heisenberg_plus_line();
  if (name.rfind("filiform:", 0) == 0)
    return filiform(std::stoi(name.substr(9)));
  if (name.rfind("abelian:", 0) == 0) return abelian(std::stoi(name.substr(8)));
  throw ConfigError("unknown algebra name: " + name);
}

}  // namespace gxt::lie
