#include "ymh/lie_algebra.hpp"

#include <algorithm>

namespace ymh {

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> basis_names)
    : dim_(dim), names_(std::move(basis_names)), c_(static_cast<size_t>(dim) * dim * dim) {
  if (names_.size() != static_cast<size_t>(dim)) throw error("basis name count mismatch");
}

const Scalar& LieAlgebra::structure(int i, int j, int k) const {
  return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
}

void LieAlgebra::set_bracket(int i, int j, int k, const Scalar& c) {
  c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k] = c;
  c_[(static_cast<size_t>(j) * dim_ + i) * dim_ + k] = -c;
}

std::vector<Scalar> LieAlgebra::basis_vector(int i) const {
  std::vector<Scalar> v(static_cast<size_t>(dim_));
  v[static_cast<size_t>(i)] = Scalar(1);
  return v;
}

std::vector<Scalar> LieAlgebra::bracket(const std::vector<Scalar>& x,
                                        const std::vector<Scalar>& y) const {
  if (x.size() != static_cast<size_t>(dim_) || y.size() != static_cast<size_t>(dim_))
    throw error("bracket argument dimension mismatch");
  std::vector<Scalar> r(static_cast<size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    if (x[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[static_cast<size_t>(j)].is_zero()) continue;
      Scalar f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
      for (int k = 0; k < dim_; ++k) {
        const Scalar& s = structure(i, j, k);
        if (!s.is_zero()) r[static_cast<size_t>(k)] += f * s;
      }
    }
  }
  return r;
}

Matrix LieAlgebra::ad(const std::vector<Scalar>& x) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    auto img = bracket(x, basis_vector(j));
    for (int i = 0; i < dim_; ++i) m.at(i, j) = img[static_cast<size_t>(i)];
  }
  return m;
}

std::vector<std::array<int, 3>> check_jacobi(const LieAlgebra& L) {
  std::vector<std::array<int, 3>> bad;
  int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        auto ei = L.basis_vector(i), ej = L.basis_vector(j), ek = L.basis_vector(k);
        auto s = L.bracket(L.bracket(ei, ej), ek);
        auto t = L.bracket(L.bracket(ej, ek), ei);
        auto u = L.bracket(L.bracket(ek, ei), ej);
        bool ok = true;
        for (int m = 0; m < n && ok; ++m)
          ok = (s[static_cast<size_t>(m)] + t[static_cast<size_t>(m)] + u[static_cast<size_t>(m)]).is_zero();
        if (!ok) bad.push_back({i, j, k});
      }
  return bad;
}

bool check_antisymmetry(const LieAlgebra& L) {
  int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (L.structure(i, j, k) != -L.structure(j, i, k)) return false;
  return true;
}

bool realization_consistent(const LieAlgebra& L) {
  if (L.realization().size() != static_cast<size_t>(L.dim())) return false;
  int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix comm = L.realization()[static_cast<size_t>(i)] * L.realization()[static_cast<size_t>(j)] -
                    L.realization()[static_cast<size_t>(j)] * L.realization()[static_cast<size_t>(i)];
      Matrix expect(comm.rows(), comm.cols());
      for (int k = 0; k < n; ++k) {
        const Scalar& c = L.structure(i, j, k);
        if (!c.is_zero()) expect = expect + L.realization()[static_cast<size_t>(k)].scaled(c);
      }
      if (!(comm == expect)) return false;
    }
  return true;
}

LieAlgebra change_basis(const LieAlgebra& L, const Matrix& T, std::vector<std::string> new_names) {
  int n = L.dim();
  if (T.rows() != n || T.cols() != n) throw error("change_basis: T must be dim x dim");
  SymmetricInverse dummy;  // not used; we need a general inverse here
  // General inverse via solve: T X = I.
  Matrix Tinv(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<Scalar> e(static_cast<size_t>(n));
    e[static_cast<size_t>(j)] = Scalar(1);
    auto sol = solve_affine(T, e);
    if (!sol.feasible || sol.space.dim() != 0) throw error("change_basis: singular T");
    for (int i = 0; i < n; ++i) Tinv.at(i, j) = sol.space.particular[static_cast<size_t>(i)];
  }
  if (new_names.empty()) new_names = L.basis_names();
  LieAlgebra out(n, std::move(new_names));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto br = L.bracket(T.col(i), T.col(j));       // in old coordinates
      auto coords = mat_vec(Tinv, br);               // back to new coordinates
      for (int k = 0; k < n; ++k)
        if (!coords[static_cast<size_t>(k)].is_zero()) out.set_bracket(i, j, k, coords[static_cast<size_t>(k)]);
    }
  if (!L.realization().empty()) {
    std::vector<Matrix> mats;
    for (int j = 0; j < n; ++j) {
      Matrix m(L.realization()[0].rows(), L.realization()[0].cols());
      for (int i = 0; i < n; ++i)
        if (!T.at(i, j).is_zero()) m = m + L.realization()[static_cast<size_t>(i)].scaled(T.at(i, j));
      mats.push_back(std::move(m));
    }
    out.set_realization(std::move(mats));
  }
  return out;
}

Matrix HomogeneousPair::recompute_rho_s(int k_local) const {
  int ns = sdim();
  Matrix m(ns, ns);
  auto x = g.basis_vector(k_indices[static_cast<size_t>(k_local)]);
  for (int b = 0; b < ns; ++b) {
    auto img = g.bracket(x, g.basis_vector(s_indices[static_cast<size_t>(b)]));
    for (int a = 0; a < ns; ++a) m.at(a, b) = img[static_cast<size_t>(s_indices[static_cast<size_t>(a)])];
  }
  return m;
}

Scalar HomogeneousPair::c_sss(int a, int b, int gidx) const {
  return g.structure(s_indices[static_cast<size_t>(a)], s_indices[static_cast<size_t>(b)], s_indices[static_cast<size_t>(gidx)]);
}

Scalar HomogeneousPair::c_ssk(int a, int b, int t) const {
  return g.structure(s_indices[static_cast<size_t>(a)], s_indices[static_cast<size_t>(b)], k_indices[static_cast<size_t>(t)]);
}

void validate_pair(const HomogeneousPair& pair) {
  int n = pair.g.dim();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int i : pair.k_indices) seen[static_cast<size_t>(i)] = true;
  for (int i : pair.s_indices) {
    if (seen[static_cast<size_t>(i)]) throw error("pair " + pair.id + ": k/s indices overlap");
    seen[static_cast<size_t>(i)] = true;
  }
  for (bool s : seen)
    if (!s) throw error("pair " + pair.id + ": k/s indices do not partition the basis");
  // k closes under the bracket.
  for (int i : pair.k_indices)
    for (int j : pair.k_indices) {
      auto br = pair.g.bracket(pair.g.basis_vector(i), pair.g.basis_vector(j));
      for (int s : pair.s_indices)
        if (!br[static_cast<size_t>(s)].is_zero())
          throw error("pair " + pair.id + ": k is not a subalgebra");
    }
  if (pair.rho_s.size() != static_cast<size_t>(pair.kdim()))
    throw error("pair " + pair.id + ": rho_s count mismatch");
  for (int t = 0; t < pair.kdim(); ++t)
    if (!(pair.rho_s[static_cast<size_t>(t)] == pair.recompute_rho_s(t)))
      throw error("pair " + pair.id + ": stored rho_s disagrees with structure constants");
}

BundleHomomorphism make_homomorphism(const HomogeneousPair& pair,
                                     std::shared_ptr<const LieAlgebra> h,
                                     const Matrix& lambda) {
  if (lambda.rows() != h->dim() || lambda.cols() != pair.kdim())
    throw error("lambda matrix must be dim(h) x dim(k)");
  int kd = pair.kdim();
  for (int s = 0; s < kd; ++s)
    for (int t = 0; t < kd; ++t) {
      // [e_ks, e_kt] expressed in k coordinates.
      auto br = pair.g.bracket(pair.g.basis_vector(pair.k_indices[static_cast<size_t>(s)]),
                               pair.g.basis_vector(pair.k_indices[static_cast<size_t>(t)]));
      std::vector<Scalar> lhs(static_cast<size_t>(h->dim()));
      for (int u = 0; u < kd; ++u) {
        const Scalar& coef = br[static_cast<size_t>(pair.k_indices[static_cast<size_t>(u)])];
        if (coef.is_zero()) continue;
        for (int a = 0; a < h->dim(); ++a) lhs[static_cast<size_t>(a)] += coef * lambda.at(a, u);
      }
      auto rhs = h->bracket(lambda.col(s), lambda.col(t));
      for (int a = 0; a < h->dim(); ++a)
        if (lhs[static_cast<size_t>(a)] != rhs[static_cast<size_t>(a)])
          throw error("lambda_* is not a Lie algebra homomorphism");
    }
  return {std::move(h), lambda, true};
}

BundleHomomorphism trivial_homomorphism(const HomogeneousPair& pair,
                                        std::shared_ptr<const LieAlgebra> h) {
  Matrix zero(h->dim(), pair.kdim());
  return {std::move(h), zero, true};
}

std::vector<std::vector<Scalar>> s_invariants(const HomogeneousPair& pair) {
  int ns = pair.sdim();
  Matrix stacked(ns * pair.kdim(), ns);
  for (int t = 0; t < pair.kdim(); ++t)
    for (int i = 0; i < ns; ++i)
      for (int j = 0; j < ns; ++j) stacked.at(t * ns + i, j) = pair.rho_s[static_cast<size_t>(t)].at(i, j);
  return nullspace(stacked);
}

}  // namespace ymh
