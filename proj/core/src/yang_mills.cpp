#include "ymh/yang_mills.hpp"

#include <sstream>

namespace ymh {

YmReport ym_residual(const WangMap& W, const MetricOnS& metric,
                     const AdInvariantInnerProduct& m) {
  (void)m;
  const auto& pair = *W.pair;
  const LieAlgebra& h = *W.hom.h;
  int n = pair.sdim();
  HValuedForm F = curvature(W);
  auto up = raised_structure_constants(pair, metric);
  auto craise = [&](int mm, int nn, int j) -> const Scalar& {
    return up[static_cast<size_t>((mm * n + nn) * n + j)];
  };
  Matrix Wup(h.dim(), n);
  for (int a = 0; a < h.dim(); ++a)
    for (int tau = 0; tau < n; ++tau) {
      Scalar acc(0);
      for (int rho = 0; rho < n; ++rho) {
        Scalar w = W.s_component(a, rho);
        if (!w.is_zero() && !metric.mu_inv.at(rho, tau).is_zero())
          acc += w * metric.mu_inv.at(rho, tau);
      }
      Wup.at(a, tau) = acc;
    }

  YmReport rep;
  rep.residual = HValuedForm(W.pair, W.hom.h, 1);
  // (delta_W F)^c_alpha = -(3/2) F^c_{[alpha m} c^{m nn}_{nn]} - W^{a tau} F^b_{tau alpha} r_ab^c
  for (int alpha = 0; alpha < n; ++alpha) {
    for (int c = 0; c < h.dim(); ++c) {
      Scalar asym(0);
      // Antisymmetrize the three lower slots over (alpha, m, nn), weight 1/3!.
      static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      static const int signs[6] = {1, -1, -1, 1, 1, -1};
      for (int mm = 0; mm < n; ++mm)
        for (int nn = 0; nn < n; ++nn) {
          int values[3] = {alpha, mm, nn};
          for (int p = 0; p < 6; ++p) {
            const Scalar& cval = craise(mm, nn, values[perms[p][2]]);
            if (cval.is_zero()) continue;
            Scalar fv = F.component(c, {values[perms[p][0]], values[perms[p][1]]});
            if (fv.is_zero()) continue;
            Scalar term = fv * cval * Scalar(Rational(signs[p], 6));
            asym += term;
          }
        }
      Scalar total = Scalar(Rational(-3, 2)) * asym;
      for (int a = 0; a < h.dim(); ++a)
        for (int tau = 0; tau < n; ++tau) {
          if (Wup.at(a, tau).is_zero()) continue;
          for (int b = 0; b < h.dim(); ++b) {
            const Scalar& r = h.structure(a, b, c);
            if (r.is_zero()) continue;
            Scalar fv = F.component(b, {tau, alpha});
            if (!fv.is_zero()) total -= Wup.at(a, tau) * fv * r;
          }
        }
      rep.residual.comp(c, {alpha}) = total;
    }
  }

  // The reduced formula must agree with the generic codifferential route.
  if (!(rep.residual == codifferential(F, W, metric)))
    throw error("reduced Yang-Mills formula disagrees with the codifferential route");

  rep.is_yang_mills = rep.residual.is_zero();
  for (int c = 0; c < h.dim(); ++c)
    for (int alpha = 0; alpha < n; ++alpha) {
      const Scalar& v = rep.residual.comp(c, {alpha});
      if (v.is_zero()) continue;
      std::ostringstream os;
      os << "(dWF)^" << (c + 1) << "_" << (alpha + 1) << " = " << v.str();
      rep.component_text.push_back(os.str());
    }
  return rep;
}

Matrix canonical_ym_lhs(const HomogeneousPair& pair, const BundleHomomorphism& hom,
                        const std::vector<std::vector<Scalar>>& complement,
                        const Matrix& metric_on_complement) {
  const LieAlgebra& g = pair.g;
  int n = g.dim(), kd = pair.kdim(), sd = static_cast<int>(complement.size());
  if (metric_on_complement.rows() != sd) throw error("metric dimension mismatch");

  // Structure constants in the (k basis, complement) frame.
  Matrix frame(n, n);
  for (int t = 0; t < kd; ++t) frame.at(pair.k_indices[static_cast<size_t>(t)], t) = Scalar(1);
  for (int b = 0; b < sd; ++b)
    for (int i = 0; i < n; ++i) frame.at(i, kd + b) = complement[static_cast<size_t>(b)][static_cast<size_t>(i)];
  auto coords = [&](const std::vector<Scalar>& v) {
    auto sol = solve_affine(frame, v);
    if (!sol.feasible || sol.space.dim() != 0)
      throw error("complement does not complete the k basis");
    return sol.space.particular;
  };
  std::vector<Scalar> c_k(static_cast<size_t>(sd) * sd * kd);   // k components of [s,s]
  std::vector<Scalar> c_s(static_cast<size_t>(sd) * sd * sd);   // s' components of [s,s]
  for (int a = 0; a < sd; ++a)
    for (int b = 0; b < sd; ++b) {
      auto x = coords(g.bracket(complement[static_cast<size_t>(a)], complement[static_cast<size_t>(b)]));
      for (int t = 0; t < kd; ++t) c_k[static_cast<size_t>((a * sd + b) * kd + t)] = x[static_cast<size_t>(t)];
      for (int gl = 0; gl < sd; ++gl) c_s[static_cast<size_t>((a * sd + b) * sd + gl)] = x[static_cast<size_t>(kd + gl)];
    }

  auto inv = invert_symmetric(metric_on_complement);
  // Raised c^{mn}_j on the complement.
  std::vector<Scalar> up(static_cast<size_t>(sd) * sd * sd);
  for (int mm = 0; mm < sd; ++mm)
    for (int nn = 0; nn < sd; ++nn)
      for (int j = 0; j < sd; ++j) {
        Scalar acc(0);
        for (int p = 0; p < sd; ++p)
          for (int q = 0; q < sd; ++q)
            for (int r = 0; r < sd; ++r) {
              const Scalar& cs = c_s[static_cast<size_t>((p * sd + q) * sd + r)];
              if (cs.is_zero()) continue;
              acc += inv.inverse.at(mm, p) * inv.inverse.at(nn, q) * cs *
                     metric_on_complement.at(r, j);
            }
        up[static_cast<size_t>((mm * sd + nn) * sd + j)] = acc;
      }

  // F^c_{ab} = -lambda_t^c c_{ab}^t  (curvature of the canonical connection).
  auto F = [&](int c, int a, int b) {
    Scalar acc(0);
    for (int t = 0; t < kd; ++t) {
      const Scalar& ck = c_k[static_cast<size_t>((a * sd + b) * kd + t)];
      if (!ck.is_zero()) acc -= hom.lambda.at(c, t) * ck;
    }
    return acc;
  };

  Matrix out(hom.h->dim(), sd);
  for (int c = 0; c < hom.h->dim(); ++c)
    for (int alpha = 0; alpha < sd; ++alpha) {
      Scalar acc(0);
      // -2 F^c_{alpha tau} c^{tau sigma}_sigma - F^c_{tau sigma} c^{tau sigma}_alpha
      for (int tau = 0; tau < sd; ++tau) {
        Scalar trace(0);
        for (int sg = 0; sg < sd; ++sg) trace += up[static_cast<size_t>((tau * sd + sg) * sd + sg)];
        acc -= Scalar(2) * F(c, alpha, tau) * trace;
      }
      for (int tau = 0; tau < sd; ++tau)
        for (int sg = 0; sg < sd; ++sg)
          acc -= F(c, tau, sg) * up[static_cast<size_t>((tau * sd + sg) * sd + alpha)];
      out.at(c, alpha) = acc;
    }
  return out;
}

namespace {

std::string csss_text(const HomogeneousPair& pair) {
  std::ostringstream os;
  bool any = false;
  for (int a = 0; a < pair.sdim(); ++a)
    for (int b = a + 1; b < pair.sdim(); ++b)
      for (int gl = 0; gl < pair.sdim(); ++gl) {
        Scalar c = pair.c_sss(a, b, gl);
        if (c.is_zero()) continue;
        if (any) os << ", ";
        any = true;
        os << "c_{" << (a + 1) << (b + 1) << "}^" << (gl + 1) << " = " << c.str();
      }
  return any ? os.str() : "none";
}

std::string raised_text(const HomogeneousPair& pair, const MetricOnS& metric) {
  auto up = raised_structure_constants(pair, metric);
  int n = pair.sdim();
  std::ostringstream os;
  bool any = false;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int gl = 0; gl < n; ++gl) {
        const Scalar& c = up[static_cast<size_t>((a * n + b) * n + gl)];
        if (c.is_zero()) continue;
        if (any) os << ", ";
        any = true;
        os << "c^{" << (a + 1) << (b + 1) << "}_" << (gl + 1) << " = " << c.str();
      }
  return any ? os.str() : "none";
}

}  // namespace

std::string table4_markdown() {
  std::ostringstream os;
  os << "| pair | c_ab^g | c^ab_g | delta_W F_W |\n";
  os << "|------|--------|--------|-------------|\n";
  for (const char* id : {"A4", "A5", "B2", "B3"}) {
    CatalogEntry entry = catalog_load(id);
    MetricOnS metric = pattern_metric(entry);
    BundleHomomorphism hom = entry.designated_lambda.empty()
                                 ? trivial_homomorphism(*entry.pair, su2())
                                 : designated_homomorphism(entry);
    auto sol = solve_wang(entry.pair, hom);
    WangMap W = symbolic_wang_point(sol);
    YmReport rep = ym_residual(W, metric, unit_inner_product(su2()));
    os << "| " << id << " | " << csss_text(*entry.pair) << " | "
       << raised_text(*entry.pair, metric) << " | ";
    if (rep.is_yang_mills) {
      os << "vanishes";
    } else {
      for (size_t i = 0; i < rep.component_text.size(); ++i)
        os << (i ? "; " : "") << rep.component_text[i];
    }
    os << " |\n";
  }
  return os.str();
}

}  // namespace ymh
