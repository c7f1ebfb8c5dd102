#include "ymh/psc.hpp"

#include <sstream>

namespace ymh {

namespace {

// Matrix of the (trivial-coefficient) Lie derivative along the t-th k
// generator on semibasic r-chains, in the increasing-tuple basis.
Matrix lie_matrix_on_chains(const HomogeneousPair& pair, int t, int r) {
  int n = pair.sdim();
  const auto& tuples = index_tuples(n, r);
  int dim = static_cast<int>(tuples.size());
  const Matrix& rho = pair.rho_s[static_cast<size_t>(t)];
  Matrix M(dim, dim);
  for (int row = 0; row < dim; ++row) {
    const auto& beta = tuples[static_cast<size_t>(row)];
    // (L phi)_beta = -sum_i sum_g rho(g, beta_i) phi_{beta with beta_i -> g}
    for (int i = 0; i < r; ++i)
      for (int gl = 0; gl < n; ++gl) {
        const Scalar& coef = rho.at(gl, beta[static_cast<size_t>(i)]);
        if (coef.is_zero()) continue;
        std::vector<int> idx = beta;
        idx[static_cast<size_t>(i)] = gl;
        std::vector<int> sorted;
        int sign = sort_with_sign(idx, sorted);
        if (sign == 0) continue;
        int col = tuple_index(n, sorted);
        M.at(row, col) += (sign > 0 ? -coef : coef);
      }
  }
  return M;
}

// d from semibasic (r)-chains to semibasic (r+1)-chains via the s-to-s
// structure constants.
Matrix d_matrix_on_chains(const HomogeneousPair& pair, int r) {
  int n = pair.sdim();
  const auto& dom = index_tuples(n, r);
  const auto& cod = index_tuples(n, r + 1);
  Matrix M(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
  for (int row = 0; row < M.rows(); ++row) {
    const auto& gamma = cod[static_cast<size_t>(row)];
    for (int i = 0; i <= r; ++i)
      for (int j = i + 1; j <= r; ++j) {
        std::vector<int> rest;
        for (int l = 0; l <= r; ++l)
          if (l != i && l != j) rest.push_back(gamma[static_cast<size_t>(l)]);
        for (int al = 0; al < n; ++al) {
          Scalar cs = pair.c_sss(gamma[static_cast<size_t>(i)], gamma[static_cast<size_t>(j)], al);
          if (cs.is_zero()) continue;
          std::vector<int> idx{al};
          idx.insert(idx.end(), rest.begin(), rest.end());
          std::vector<int> sorted;
          int sign = sort_with_sign(idx, sorted);
          if (sign == 0) continue;
          int col = tuple_index(n, sorted);
          int outer = ((i + 1) + (j + 1)) % 2 == 0 ? 1 : -1;
          Scalar term = cs;
          M.at(row, col) += (outer * sign > 0) ? term : -term;
        }
      }
  }
  return M;
}

// Joint nullspace of the Lie-derivative matrices on r-chains.
std::vector<std::vector<Scalar>> invariant_chains(const HomogeneousPair& pair, int r) {
  int n = pair.sdim();
  int dim = static_cast<int>(index_tuples(n, r).size());
  if (pair.kdim() == 0) {
    std::vector<std::vector<Scalar>> all;
    for (int j = 0; j < dim; ++j) {
      std::vector<Scalar> v(static_cast<size_t>(dim));
      v[static_cast<size_t>(j)] = Scalar(1);
      all.push_back(std::move(v));
    }
    return all;
  }
  Matrix stacked(dim * pair.kdim(), dim);
  for (int t = 0; t < pair.kdim(); ++t) {
    Matrix M = lie_matrix_on_chains(pair, t, r);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) stacked.at(t * dim + i, j) = M.at(i, j);
  }
  return nullspace(stacked);
}

}  // namespace

Psc1Report psc1(const HomogeneousPair& pair) {
  Psc1Report rep;
  rep.q = pair.sdim();
  auto Z = invariant_chains(pair, rep.q);
  rep.dim_z = static_cast<int>(Z.size());
  auto lower = invariant_chains(pair, rep.q - 1);
  if (!lower.empty()) {
    Matrix d = d_matrix_on_chains(pair, rep.q - 1);
    Matrix img(d.rows(), static_cast<int>(lower.size()));
    for (int j = 0; j < img.cols(); ++j) {
      auto v = mat_vec(d, lower[static_cast<size_t>(j)]);
      for (int i = 0; i < img.rows(); ++i) img.at(i, j) = v[static_cast<size_t>(i)];
    }
    rep.dim_b = rank_of(img);
  }
  rep.dim_h = rep.dim_z - rep.dim_b;
  rep.holds = rep.dim_h > 0;
  return rep;
}

Psc2Report psc2(const HomogeneousPair& pair, const BundleHomomorphism& hom,
                const MetricOnS& metric, const AdInvariantInnerProduct& m) {
  const LieAlgebra& h = *hom.h;
  int n = pair.sdim(), hd = h.dim();
  Psc2Report rep;
  rep.dim_v = n * hd;
  // Twisted action on V = s^* tensor h, coordinates flattened a * n + alpha:
  // (L x phi)^a_alpha = -sum_g rho(g, alpha) phi^a_g + lambda(x)^b phi^c_alpha r_bc^a.
  std::vector<std::vector<Scalar>> rows;
  for (int t = 0; t < pair.kdim(); ++t) {
    const Matrix& rho = pair.rho_s[static_cast<size_t>(t)];
    auto lam = hom.lambda.col(t);
    for (int a = 0; a < hd; ++a)
      for (int alpha = 0; alpha < n; ++alpha) {
        std::vector<Scalar> row(static_cast<size_t>(rep.dim_v));
        for (int gl = 0; gl < n; ++gl)
          if (!rho.at(gl, alpha).is_zero()) row[static_cast<size_t>(a * n + gl)] -= rho.at(gl, alpha);
        for (int b = 0; b < hd; ++b) {
          if (lam[static_cast<size_t>(b)].is_zero()) continue;
          for (int c = 0; c < hd; ++c) {
            const Scalar& r = h.structure(b, c, a);
            if (!r.is_zero()) row[static_cast<size_t>(c * n + alpha)] += lam[static_cast<size_t>(b)] * r;
          }
        }
        rows.push_back(std::move(row));
      }
  }
  if (rows.empty()) {
    for (int j = 0; j < rep.dim_v; ++j) {
      std::vector<Scalar> v(static_cast<size_t>(rep.dim_v));
      v[static_cast<size_t>(j)] = Scalar(1);
      rep.vk_basis.push_back(std::move(v));
    }
  } else {
    rep.vk_basis = nullspace(Matrix::from_rows(rows));
  }
  rep.dim_vk = static_cast<int>(rep.vk_basis.size());
  // Gram of <e^alpha tensor f_a, e^beta tensor f_b> = mu^{alpha beta} m_ab.
  rep.gram = Matrix(rep.dim_vk, rep.dim_vk);
  for (int u = 0; u < rep.dim_vk; ++u)
    for (int v = u; v < rep.dim_vk; ++v) {
      Scalar acc(0);
      for (int a = 0; a < hd; ++a)
        for (int alpha = 0; alpha < n; ++alpha) {
          const Scalar& xu = rep.vk_basis[static_cast<size_t>(u)][static_cast<size_t>(a * n + alpha)];
          if (xu.is_zero()) continue;
          for (int b = 0; b < hd; ++b) {
            if (m.gram.at(a, b).is_zero()) continue;
            for (int beta = 0; beta < n; ++beta) {
              const Scalar& xv = rep.vk_basis[static_cast<size_t>(v)][static_cast<size_t>(b * n + beta)];
              if (xv.is_zero() || metric.mu_inv.at(alpha, beta).is_zero()) continue;
              acc += xu * xv * metric.mu_inv.at(alpha, beta) * m.gram.at(a, b);
            }
          }
        }
      rep.gram.at(u, v) = acc;
      rep.gram.at(v, u) = acc;
    }
  rep.rank = rep.dim_vk ? rank_of(rep.gram) : 0;
  rep.holds = rep.rank == rep.dim_vk;  // vacuously true for V^K = 0
  return rep;
}

Scalar reduced_lagrangian(const WangMap& W, const MetricOnS& metric,
                          const AdInvariantInnerProduct& m) {
  HValuedForm F = curvature(W);
  return inner_product(F, F, metric, m);
}

PscVerdict psc_verdict(const HomogeneousPair& pair, const BundleHomomorphism& hom,
                       const MetricOnS& metric, const AdInvariantInnerProduct& m) {
  PscVerdict v;
  v.psc1 = psc1(pair);
  v.psc2 = psc2(pair, hom, metric, m);
  v.psc = v.psc1.holds && v.psc2.holds;
  return v;
}

std::string table5_markdown(const Rational& a2_alpha) {
  const char* ids[] = {"A1", "A2", "A3", "A4", "A5", "B1", "B2", "B3"};
  std::vector<PscVerdict> verdicts;
  for (const char* id : ids) {
    CatalogEntry entry = catalog_load(id, id == std::string("A2") ? a2_alpha : Rational(0));
    BundleHomomorphism hom = entry.designated_lambda.empty()
                                 ? trivial_homomorphism(*entry.pair, su2())
                                 : designated_homomorphism(entry);
    MetricOnS metric = pattern_metric(entry);
    verdicts.push_back(psc_verdict(*entry.pair, hom, metric, unit_inner_product(su2())));
  }
  auto mark = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  os << "| G/K |";
  for (const char* id : ids) os << " " << id << " |";
  os << "\n|-----|";
  for (size_t i = 0; i < 8; ++i) os << "----|";
  os << "\n| PSC1 |";
  for (auto& v : verdicts) os << " " << mark(v.psc1.holds) << " |";
  os << "\n| PSC2 |";
  for (auto& v : verdicts) os << " " << mark(v.psc2.holds) << " |";
  os << "\n| PSC |";
  for (auto& v : verdicts) os << " " << mark(v.psc) << " |";
  os << "\n";
  return os.str();
}

}  // namespace ymh
