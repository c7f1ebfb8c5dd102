#include "ymh/connection.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace ymh {

namespace {

// Equations for one (k generator t, s-basis vector local index b0):
// [lambda_t, W(e_{s_b0})] - W_s([x, e_{s_b0}]) = lambda(proj_k [x, e_{s_b0}]).
// Unknowns W^a_b are flattened a * sdim + b.
void append_equations(const HomogeneousPair& pair, const BundleHomomorphism& hom,
                      int t, int b0, std::vector<std::vector<Scalar>>& rows,
                      std::vector<Scalar>& rhs) {
  const LieAlgebra& g = pair.g;
  const LieAlgebra& h = *hom.h;
  int hd = h.dim(), sd = pair.sdim();
  Matrix ad_lam = h.ad(hom.lambda.col(t));
  auto br = g.bracket(g.basis_vector(pair.k_indices[static_cast<size_t>(t)]),
                      g.basis_vector(pair.s_indices[static_cast<size_t>(b0)]));

  std::vector<Scalar> constant(static_cast<size_t>(hd));
  for (int u = 0; u < pair.kdim(); ++u) {
    const Scalar& coef = br[static_cast<size_t>(pair.k_indices[static_cast<size_t>(u)])];
    if (coef.is_zero()) continue;
    for (int a = 0; a < hd; ++a) constant[static_cast<size_t>(a)] += coef * hom.lambda.at(a, u);
  }

  for (int a = 0; a < hd; ++a) {
    std::vector<Scalar> row(static_cast<size_t>(hd * sd));
    for (int b2 = 0; b2 < hd; ++b2) row[static_cast<size_t>(b2 * sd + b0)] += ad_lam.at(a, b2);
    for (int b = 0; b < sd; ++b) {
      const Scalar& coef = br[static_cast<size_t>(pair.s_indices[static_cast<size_t>(b)])];
      if (coef.is_zero()) continue;
      row[static_cast<size_t>(a * sd + b)] -= coef;
    }
    rows.push_back(std::move(row));
    rhs.push_back(constant[static_cast<size_t>(a)]);
  }
}

}  // namespace

WangSolutionSpace solve_wang(std::shared_ptr<const HomogeneousPair> pair,
                             const BundleHomomorphism& hom) {
  if (!hom.verified) throw error("solve_wang requires a verified homomorphism");
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (int t = 0; t < pair->kdim(); ++t)
    for (int b = 0; b < pair->sdim(); ++b) append_equations(*pair, hom, t, b, rows, rhs);
  WangSolutionSpace out;
  out.pair = pair;
  out.hom = hom;
  int unknowns = hom.h->dim() * pair->sdim();
  Matrix A = rows.empty() ? Matrix(0, unknowns) : Matrix::from_rows(rows);
  if (A.rows() == 0) {
    out.feasible = true;
    out.space.ambient = unknowns;
    out.space.particular.assign(static_cast<size_t>(unknowns), Scalar(0));
    for (int j = 0; j < unknowns; ++j) {
      std::vector<Scalar> d(static_cast<size_t>(unknowns));
      d[static_cast<size_t>(j)] = Scalar(1);
      out.space.directions.push_back(std::move(d));
    }
    return out;
  }
  auto sol = solve_affine(A, rhs);
  out.feasible = sol.feasible;
  if (sol.feasible) out.space = std::move(sol.space);
  return out;
}

namespace {

WangMap assemble(const WangSolutionSpace& sol, const std::vector<Scalar>& flat) {
  const auto& pair = *sol.pair;
  int hd = sol.hom.h->dim(), sd = pair.sdim();
  WangMap W;
  W.pair = sol.pair;
  W.hom = sol.hom;
  W.w = Matrix(hd, pair.g.dim());
  for (int t = 0; t < pair.kdim(); ++t)
    for (int a = 0; a < hd; ++a) W.w.at(a, pair.k_indices[static_cast<size_t>(t)]) = sol.hom.lambda.at(a, t);
  for (int a = 0; a < hd; ++a)
    for (int b = 0; b < sd; ++b) W.w.at(a, pair.s_indices[static_cast<size_t>(b)]) = flat[static_cast<size_t>(a * sd + b)];
  return W;
}

}  // namespace

WangMap wang_point(const WangSolutionSpace& sol, const std::vector<Scalar>& coords) {
  if (!sol.feasible) throw error("wang_point on an infeasible solution space");
  return assemble(sol, sol.space.point(coords));
}

WangMap symbolic_wang_point(const WangSolutionSpace& sol) {
  if (!sol.feasible) throw error("symbolic_wang_point on an infeasible solution space");
  int sd = sol.pair->sdim();
  std::vector<Scalar> coords;
  for (int j = 0; j < sol.space.dim(); ++j) {
    const auto& dir = sol.space.directions[static_cast<size_t>(j)];
    int nonzero = -1;
    bool unit = true;
    for (size_t i = 0; i < dir.size(); ++i) {
      if (dir[i].is_zero()) continue;
      if (nonzero >= 0 || !(dir[i] == Scalar(1))) {
        unit = false;
        break;
      }
      nonzero = static_cast<int>(i);
    }
    std::string name;
    if (unit && nonzero >= 0)
      name = "W" + std::to_string(nonzero / sd + 1) + "_" + std::to_string(nonzero % sd + 1);
    else
      name = "t" + std::to_string(j + 1);
    coords.push_back(Scalar::parameter(name));
  }
  return wang_point(sol, coords);
}

void verify_wang(const WangMap& W) {
  const auto& pair = *W.pair;
  const LieAlgebra& g = pair.g;
  const LieAlgebra& h = *W.hom.h;
  for (int t = 0; t < pair.kdim(); ++t) {
    auto lam_t = W.hom.lambda.col(t);
    for (int a = 0; a < h.dim(); ++a)
      if (W.w.at(a, pair.k_indices[static_cast<size_t>(t)]) != lam_t[static_cast<size_t>(a)])
        throw error("Wang map does not restrict to lambda_* on k");
  }
  for (int t = 0; t < pair.kdim(); ++t) {
    auto lam_t = W.hom.lambda.col(t);
    auto x = g.basis_vector(pair.k_indices[static_cast<size_t>(t)]);
    for (int j = 0; j < g.dim(); ++j) {
      auto lhs = h.bracket(lam_t, W.apply(g.basis_vector(j)));
      auto rhs = W.apply(g.bracket(x, g.basis_vector(j)));
      for (int a = 0; a < h.dim(); ++a)
        if (lhs[static_cast<size_t>(a)] != rhs[static_cast<size_t>(a)])
          throw error("Wang equivariance fails on (k generator " + std::to_string(t) +
                      ", basis vector " + std::to_string(j) + ")");
    }
  }
}

bool space_annihilates(const WangSolutionSpace& sol, const std::vector<Scalar>& v_in_g) {
  if (!sol.feasible) return false;
  auto check = [&](const std::vector<Scalar>& flat) {
    WangMap W = assemble(sol, flat);
    for (auto& c : W.apply(v_in_g))
      if (!c.is_zero()) return false;
    return true;
  };
  if (!check(sol.space.particular)) return false;
  for (auto& d : sol.space.directions) {
    // Directions live in the homogeneous part: check with lambda zeroed.
    WangSolutionSpace hom0 = sol;
    hom0.hom.lambda = Matrix(sol.hom.h->dim(), sol.pair->kdim());
    WangMap W = assemble(hom0, d);
    for (auto& c : W.apply(v_in_g))
      if (!c.is_zero()) return false;
  }
  return true;
}

FeasibilityReport nontrivial_bundle_feasible(const CatalogEntry& entry,
                                             std::shared_ptr<const LieAlgebra> h,
                                             std::uint32_t seed, int randoms_per_gen) {
  if (!entry.pair) throw error("feasibility sweep needs a homogeneous pair");
  const auto& pair = *entry.pair;
  FeasibilityReport rep;
  rep.pair_id = entry.id;
  rep.expect_nontrivial = entry.id == "A5" || entry.id == "B3";

  // Abelian-image normalization: each generator maps to a rational multiple
  // of f1.  Enumerate grid tuples, then seeded random tuples.
  std::vector<Rational> grid = {Rational(1), Rational(-1), Rational(2),
                                Rational(-2), Rational(1, 2), Rational(-1, 2), Rational(0)};
  int kd = pair.kdim();
  std::vector<std::vector<Rational>> tuples;
  std::vector<Rational> cur(static_cast<size_t>(kd));
  std::function<void(int)> rec = [&](int pos) {
    if (pos == kd) {
      bool nonzero = false;
      for (auto& c : cur) nonzero = nonzero || c != 0;
      if (nonzero) tuples.push_back(cur);
      return;
    }
    for (auto& c : grid) {
      cur[static_cast<size_t>(pos)] = c;
      rec(pos + 1);
    }
  };
  rec(0);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> numer(-9, 9), denom(1, 9);
  for (int r = 0; r < randoms_per_gen; ++r) {
    std::vector<Rational> t(static_cast<size_t>(kd));
    bool nonzero = false;
    for (int i = 0; i < kd; ++i) {
      t[static_cast<size_t>(i)] = Rational(numer(rng), denom(rng));
      t[static_cast<size_t>(i)].canonicalize();
      nonzero = nonzero || t[static_cast<size_t>(i)] != 0;
    }
    if (nonzero) tuples.push_back(std::move(t));
  }

  for (auto& t : tuples) {
    ++rep.candidates;
    Matrix lambda(h->dim(), kd);
    for (int i = 0; i < kd; ++i) lambda.at(0, i) = Scalar(t[static_cast<size_t>(i)]);
    BundleHomomorphism hom;
    try {
      hom = make_homomorphism(pair, h, lambda);
    } catch (const error&) {
      continue;  // not a homomorphism (nonabelian k with incompatible images)
    }
    ++rep.valid_homs;
    if (solve_wang(entry.pair, hom).feasible) ++rep.feasible;
  }
  rep.ok = rep.expect_nontrivial ? rep.feasible > 0 : rep.feasible == 0;
  return rep;
}

std::optional<std::vector<std::vector<Scalar>>> find_invariant_complement(
    const HomogeneousPair& pair, const std::vector<int>& k0_indices) {
  const LieAlgebra& g = pair.g;
  int kd = pair.kdim(), sd = pair.sdim();
  // k0 must be a subset of the k basis and an ideal of k.
  std::vector<int> k0_local;
  for (int gi : k0_indices) {
    int loc = -1;
    for (int t = 0; t < kd; ++t)
      if (pair.k_indices[static_cast<size_t>(t)] == gi) loc = t;
    if (loc < 0) throw error("k0 index is not a k basis index");
    k0_local.push_back(loc);
  }
  auto in_k0 = [&](int t) {
    return std::find(k0_local.begin(), k0_local.end(), t) != k0_local.end();
  };
  for (int t = 0; t < kd; ++t)
    for (int u : k0_local) {
      auto br = g.bracket(g.basis_vector(pair.k_indices[static_cast<size_t>(t)]),
                          g.basis_vector(pair.k_indices[static_cast<size_t>(u)]));
      for (int q = 0; q < kd; ++q)
        if (!in_k0(q) && !br[static_cast<size_t>(pair.k_indices[static_cast<size_t>(q)])].is_zero())
          throw error("k0 is not an ideal of k");
      for (int s : pair.s_indices)
        if (!br[static_cast<size_t>(s)].is_zero()) throw error("k0 is not an ideal of k");
    }

  // Unknowns phi[t][b]: the k-coordinates of phi(e_{s_b}); only the
  // coordinates complementary to k0 are constrained.
  std::vector<int> quot;  // k-locals outside k0
  for (int t = 0; t < kd; ++t)
    if (!in_k0(t)) quot.push_back(t);
  int unknowns = kd * sd;
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (int t = 0; t < kd; ++t) {
    auto x = g.basis_vector(pair.k_indices[static_cast<size_t>(t)]);
    for (int b = 0; b < sd; ++b) {
      auto br = g.bracket(x, g.basis_vector(pair.s_indices[static_cast<size_t>(b)]));
      // For each quotient coordinate q: coeff_q([x,v]) + coeff_q([x, phi(v)])
      // - phi_q(proj_s [x,v]) = 0.
      for (int qi : quot) {
        std::vector<Scalar> row(static_cast<size_t>(unknowns));
        Scalar c = br[static_cast<size_t>(pair.k_indices[static_cast<size_t>(qi)])];
        // [x, phi(v)] = sum_u phi[u][b] [x, e_{k_u}]
        for (int u = 0; u < kd; ++u) {
          auto brk = g.bracket(x, g.basis_vector(pair.k_indices[static_cast<size_t>(u)]));
          const Scalar& coef = brk[static_cast<size_t>(pair.k_indices[static_cast<size_t>(qi)])];
          if (!coef.is_zero()) row[static_cast<size_t>(u * sd + b)] += coef;
        }
        // -phi_q(proj_s [x,v])
        for (int b2 = 0; b2 < sd; ++b2) {
          const Scalar& coef = br[static_cast<size_t>(pair.s_indices[static_cast<size_t>(b2)])];
          if (!coef.is_zero()) row[static_cast<size_t>(qi * sd + b2)] -= coef;
        }
        rows.push_back(std::move(row));
        rhs.push_back(-c);
      }
    }
  }
  Matrix A = rows.empty() ? Matrix(0, unknowns) : Matrix::from_rows(rows);
  auto sol = A.rows() ? solve_affine(A, rhs) : AffineSolve{true, {}};
  if (!sol.feasible) return std::nullopt;
  std::vector<Scalar> phi = A.rows() ? sol.space.particular
                                     : std::vector<Scalar>(static_cast<size_t>(unknowns));
  std::vector<std::vector<Scalar>> complement;
  for (int b = 0; b < sd; ++b) {
    std::vector<Scalar> v(static_cast<size_t>(g.dim()));
    v[static_cast<size_t>(pair.s_indices[static_cast<size_t>(b)])] = Scalar(1);
    for (int t = 0; t < kd; ++t)
      v[static_cast<size_t>(pair.k_indices[static_cast<size_t>(t)])] = phi[static_cast<size_t>(t * sd + b)];
    complement.push_back(std::move(v));
  }
  return complement;
}

WangMap canonical_wang(std::shared_ptr<const HomogeneousPair> pair,
                       const BundleHomomorphism& hom,
                       const std::vector<std::vector<Scalar>>& complement) {
  const LieAlgebra& g = pair->g;
  int n = g.dim(), kd = pair->kdim();
  if (static_cast<int>(complement.size()) != pair->sdim())
    throw error("complement has the wrong dimension");

  // ker(lambda_*) inside k, lifted to g coordinates.
  std::vector<std::vector<Scalar>> ker_g;
  {
    auto ker_k = nullspace(hom.lambda);
    for (auto& v : ker_k) {
      std::vector<Scalar> w(static_cast<size_t>(n));
      for (int t = 0; t < kd; ++t) w[static_cast<size_t>(pair->k_indices[static_cast<size_t>(t)])] = v[static_cast<size_t>(t)];
      ker_g.push_back(std::move(w));
    }
  }
  // lambda-reductivity of the complement: [x, w] in ker(lambda) + span(compl).
  {
    std::vector<std::vector<Scalar>> cols;
    for (auto& v : ker_g) cols.push_back(v);
    for (auto& v : complement) cols.push_back(v);
    Matrix base(n, static_cast<int>(cols.size()));
    for (int j = 0; j < base.cols(); ++j)
      for (int i = 0; i < n; ++i) base.at(i, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
    int base_rank = rank_of(base);
    for (int t = 0; t < kd; ++t)
      for (auto& wvec : complement) {
        auto br = g.bracket(g.basis_vector(pair->k_indices[static_cast<size_t>(t)]), wvec);
        Matrix ext(n, base.cols() + 1);
        for (int j = 0; j < base.cols(); ++j)
          for (int i = 0; i < n; ++i) ext.at(i, j) = base.at(i, j);
        for (int i = 0; i < n; ++i) ext.at(i, base.cols()) = br[static_cast<size_t>(i)];
        if (rank_of(ext) != base_rank)
          throw error("complement does not certify lambda-reductivity");
      }
  }

  // Solve e_i = k part + complement part; W(e_i) = lambda(k part).
  Matrix basis(n, n);  // columns: k basis then complement
  for (int t = 0; t < kd; ++t) basis.at(pair->k_indices[static_cast<size_t>(t)], t) = Scalar(1);
  for (int b = 0; b < pair->sdim(); ++b)
    for (int i = 0; i < n; ++i) basis.at(i, kd + b) = complement[static_cast<size_t>(b)][static_cast<size_t>(i)];
  WangMap W;
  W.pair = pair;
  W.hom = hom;
  W.w = Matrix(hom.h->dim(), n);
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> e(static_cast<size_t>(n));
    e[static_cast<size_t>(i)] = Scalar(1);
    auto sol = solve_affine(basis, e);
    if (!sol.feasible || sol.space.dim() != 0)
      throw error("complement does not complete the k basis");
    for (int a = 0; a < hom.h->dim(); ++a) {
      Scalar acc(0);
      for (int t = 0; t < kd; ++t) acc += hom.lambda.at(a, t) * sol.space.particular[static_cast<size_t>(t)];
      W.w.at(a, i) = acc;
    }
  }
  verify_wang(W);
  return W;
}

}  // namespace ymh
