#include "ymh/forms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace ymh {

// ---------------------------------------------------------------------------
// Index combinatorics

const std::vector<std::vector<int>>& index_tuples(int n, int k) {
  // Node-based map: references stay valid across insertions, so the lock only
  // guards the lookup-or-fill step.
  static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(n, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> out;
  if (k == 0) {
    out.push_back({});
  } else if (k <= n) {
    std::vector<int> t(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int start, int pos) {
      if (pos == k) {
        out.push_back(t);
        return;
      }
      for (int v = start; v < n; ++v) {
        t[static_cast<size_t>(pos)] = v;
        rec(v + 1, pos + 1);
      }
    };
    rec(0, 0);
  }
  return cache.emplace(key, std::move(out)).first->second;
}

int tuple_index(int n, const std::vector<int>& tuple) {
  const auto& all = index_tuples(n, static_cast<int>(tuple.size()));
  auto it = std::lower_bound(all.begin(), all.end(), tuple);
  if (it == all.end() || *it != tuple) throw error("tuple_index: not an increasing tuple");
  return static_cast<int>(it - all.begin());
}

int sort_with_sign(std::vector<int> tuple, std::vector<int>& out) {
  int sign = 1;
  for (size_t i = 0; i < tuple.size(); ++i)
    for (size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] == tuple[j]) return 0;
      if (tuple[i] > tuple[j]) {
        std::swap(tuple[i], tuple[j]);
        sign = -sign;
      }
    }
  out = std::move(tuple);
  return sign;
}

int levi_civita(const std::vector<int>& word) {
  std::vector<int> sorted;
  int sign = sort_with_sign(word, sorted);
  if (sign == 0) return 0;
  for (size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) throw error("levi_civita word out of range");
  return sign;
}

namespace {

std::vector<std::vector<int>> permutations_of(int k) {
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do out.push_back(idx);
  while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

int perm_sign(const std::vector<int>& p) {
  int sign = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

}  // namespace

// ---------------------------------------------------------------------------
// Inner products on h

AdInvariantInnerProduct unit_inner_product(std::shared_ptr<const LieAlgebra> h) {
  int n = h->dim();
  return {std::move(h), Matrix::identity(n)};
}

AdInvariantInnerProduct make_inner_product(std::shared_ptr<const LieAlgebra> h, Matrix gram) {
  if (!gram.is_symmetric()) throw error("inner product Gram matrix must be symmetric");
  int n = h->dim();
  // Positive definiteness by leading principal minors.
  for (int k = 1; k <= n; ++k) {
    Matrix lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = gram.at(i, j);
    if (determinant(lead).rational_value() <= 0)
      throw error("inner product Gram matrix is not positive definite");
  }
  // ad-invariance m([x,y],z) + m(y,[x,z]) = 0 on basis triples.
  for (int x = 0; x < n; ++x) {
    Matrix adx = h->ad(h->basis_vector(x));
    Matrix inv = adx.transpose() * gram + gram * adx;
    if (!inv.is_zero()) throw error("Gram matrix is not ad-invariant");
  }
  return {std::move(h), std::move(gram)};
}

// ---------------------------------------------------------------------------
// HValuedForm

HValuedForm::HValuedForm(std::shared_ptr<const HomogeneousPair> pair,
                         std::shared_ptr<const LieAlgebra> h, int degree)
    : pair_(std::move(pair)), h_(std::move(h)), degree_(degree) {
  n_ = pair_->sdim();
  hdim_ = h_->dim();
  comp_.assign(static_cast<size_t>(hdim_) * index_tuples(n_, degree_).size(), Scalar(0));
}

HValuedForm HValuedForm::basis_covector(std::shared_ptr<const HomogeneousPair> pair,
                                        std::shared_ptr<const LieAlgebra> h, int alpha, int a) {
  HValuedForm f(std::move(pair), std::move(h), 1);
  f.comp(a, {alpha}) = Scalar(1);
  return f;
}

Scalar& HValuedForm::comp(int a, const std::vector<int>& increasing) {
  return comp_[static_cast<size_t>(a) * index_tuples(n_, degree_).size() +
               static_cast<size_t>(tuple_index(n_, increasing))];
}

const Scalar& HValuedForm::comp(int a, const std::vector<int>& increasing) const {
  return comp_[static_cast<size_t>(a) * index_tuples(n_, degree_).size() +
               static_cast<size_t>(tuple_index(n_, increasing))];
}

Scalar HValuedForm::component(int a, const std::vector<int>& tuple) const {
  std::vector<int> sorted;
  int sign = sort_with_sign(tuple, sorted);
  if (sign == 0) return Scalar(0);
  const Scalar& c = comp(a, sorted);
  return sign > 0 ? c : -c;
}

bool HValuedForm::is_zero() const {
  for (auto& c : comp_)
    if (!c.is_zero()) return false;
  return true;
}

HValuedForm HValuedForm::operator+(const HValuedForm& o) const {
  if (degree_ != o.degree_ || n_ != o.n_ || hdim_ != o.hdim_)
    throw error("form sum shape mismatch");
  HValuedForm r = *this;
  for (size_t i = 0; i < comp_.size(); ++i) r.comp_[i] += o.comp_[i];
  return r;
}

HValuedForm HValuedForm::operator-(const HValuedForm& o) const {
  return *this + o.scaled(Scalar(-1));
}

HValuedForm HValuedForm::scaled(const Scalar& c) const {
  HValuedForm r = *this;
  for (auto& x : r.comp_) x *= c;
  return r;
}

bool HValuedForm::operator==(const HValuedForm& o) const {
  if (degree_ != o.degree_ || n_ != o.n_ || hdim_ != o.hdim_) return false;
  for (size_t i = 0; i < comp_.size(); ++i)
    if (comp_[i] != o.comp_[i]) return false;
  return true;
}

std::vector<Scalar> HValuedForm::evaluate(const std::vector<std::vector<Scalar>>& s_args) const {
  if (s_args.size() != static_cast<size_t>(degree_)) throw error("form evaluation arity mismatch");
  std::vector<Scalar> out(static_cast<size_t>(hdim_));
  const auto& tuples = index_tuples(n_, degree_);
  const auto& perms = permutations_of(degree_);
  for (const auto& t : tuples) {
    for (const auto& p : perms) {
      Scalar factor(perm_sign(p));
      for (int i = 0; i < degree_; ++i)
        factor *= s_args[static_cast<size_t>(i)][static_cast<size_t>(t[static_cast<size_t>(p[static_cast<size_t>(i)])])];
      if (factor.is_zero()) continue;
      for (int a = 0; a < hdim_; ++a) {
        const Scalar& c = comp(a, t);
        if (!c.is_zero()) out[static_cast<size_t>(a)] += factor * c;
      }
    }
  }
  return out;
}

std::string HValuedForm::str() const {
  std::ostringstream os;
  bool any = false;
  const auto& tuples = index_tuples(n_, degree_);
  for (int a = 0; a < hdim_; ++a)
    for (const auto& t : tuples) {
      const Scalar& c = comp(a, t);
      if (c.is_zero()) continue;
      if (any) os << " + ";
      any = true;
      os << "(" << c.str() << ")*";
      if (t.empty()) os << "1";
      for (size_t i = 0; i < t.size(); ++i) os << (i ? "^" : "") << "e" << (t[i] + 1);
      os << "(x)" << h_->basis_names()[static_cast<size_t>(a)];
    }
  if (!any) return "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// Operations

HValuedForm graded_commutator(const HValuedForm& phi, const HValuedForm& psi) {
  int p = phi.degree(), q = psi.degree();
  const LieAlgebra& h = *phi.h();
  HValuedForm out(phi.pair(), phi.h(), p + q);
  if (p + q > phi.n()) return out;  // degree overflow is the zero form
  const auto& tuples = index_tuples(phi.n(), p + q);
  // Shuffle expansion: split each increasing tuple into a p-subset S and its
  // complement T; the factorials in the definition cancel.
  for (const auto& gamma : tuples) {
    const auto& subsets = index_tuples(p + q, p);
    for (const auto& sel : subsets) {
      std::vector<int> S, T;
      std::vector<bool> used(static_cast<size_t>(p + q), false);
      for (int i : sel) used[static_cast<size_t>(i)] = true;
      std::vector<int> word;
      for (int i : sel) word.push_back(i);
      for (int i = 0; i < p + q; ++i)
        if (!used[static_cast<size_t>(i)]) word.push_back(i);
      int sign = perm_sign(word);
      for (int i : sel) S.push_back(gamma[static_cast<size_t>(i)]);
      for (int i = 0; i < p + q; ++i)
        if (!used[static_cast<size_t>(i)]) T.push_back(gamma[static_cast<size_t>(i)]);
      for (int a = 0; a < phi.hdim(); ++a) {
        const Scalar& ca = phi.comp(a, S);
        if (ca.is_zero()) continue;
        for (int b = 0; b < psi.hdim(); ++b) {
          const Scalar& cb = psi.comp(b, T);
          if (cb.is_zero()) continue;
          for (int c = 0; c < h.dim(); ++c) {
            const Scalar& r = h.structure(a, b, c);
            if (r.is_zero()) continue;
            Scalar term = ca * cb * r;
            out.comp(c, gamma) += sign > 0 ? term : -term;
          }
        }
      }
    }
  }
  return out;
}

HValuedForm d_w(const HValuedForm& phi, const WangMap& W) {
  const auto& pair = *phi.pair();
  const LieAlgebra& h = *phi.h();
  int k = phi.degree(), n = phi.n();
  HValuedForm out(phi.pair(), phi.h(), k + 1);
  if (k + 1 > n) return out;
  for (const auto& gamma : index_tuples(n, k + 1)) {
    for (int c = 0; c < phi.hdim(); ++c) {
      Scalar acc(0);
      // sum_i (-1)^{i-1} W^a_{gamma_i} phi^b_{gamma minus i} r_ab^c
      for (int i = 0; i <= k; ++i) {
        std::vector<int> rest;
        for (int j = 0; j <= k; ++j)
          if (j != i) rest.push_back(gamma[static_cast<size_t>(j)]);
        for (int a = 0; a < h.dim(); ++a) {
          Scalar wa = W.s_component(a, gamma[static_cast<size_t>(i)]);
          if (wa.is_zero()) continue;
          for (int b = 0; b < h.dim(); ++b) {
            const Scalar& r = h.structure(a, b, c);
            if (r.is_zero()) continue;
            const Scalar& pb = phi.comp(b, rest);
            if (pb.is_zero()) continue;
            Scalar term = wa * pb * r;
            acc += (i % 2 == 0) ? term : -term;
          }
        }
      }
      // sum_{i<j} (-1)^{i+j} phi^c_{alpha, gamma minus ij} c_{gamma_i gamma_j}^alpha
      for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
          std::vector<int> rest;
          for (int l = 0; l <= k; ++l)
            if (l != i && l != j) rest.push_back(gamma[static_cast<size_t>(l)]);
          for (int alpha = 0; alpha < n; ++alpha) {
            Scalar cs = pair.c_sss(gamma[static_cast<size_t>(i)], gamma[static_cast<size_t>(j)], alpha);
            if (cs.is_zero()) continue;
            std::vector<int> idx{alpha};
            idx.insert(idx.end(), rest.begin(), rest.end());
            Scalar pv = phi.component(c, idx);
            if (pv.is_zero()) continue;
            Scalar term = cs * pv;
            // 1-based sign convention (-1)^{i+j}
            acc += (((i + 1) + (j + 1)) % 2 == 0) ? term : -term;
          }
        }
      out.comp(c, gamma) = acc;
    }
  }
  return out;
}

HValuedForm curvature(const WangMap& W) {
  const auto& pair = *W.pair;
  const LieAlgebra& g = pair.g;
  const LieAlgebra& h = *W.hom.h;
  HValuedForm F(W.pair, W.hom.h, 2);
  int n = pair.sdim();
  for (int al = 0; al < n; ++al)
    for (int be = al + 1; be < n; ++be) {
      auto x = g.basis_vector(pair.s_indices[static_cast<size_t>(al)]);
      auto y = g.basis_vector(pair.s_indices[static_cast<size_t>(be)]);
      auto comm = h.bracket(W.apply(x), W.apply(y));
      auto wbr = W.apply(g.bracket(x, y));
      for (int c = 0; c < h.dim(); ++c) F.comp(c, {al, be}) = comm[static_cast<size_t>(c)] - wbr[static_cast<size_t>(c)];
    }
  return F;
}

HValuedForm curvature_via_dw(const WangMap& W) {
  const auto& pair = *W.pair;
  const LieAlgebra& g = pair.g;
  const LieAlgebra& h = *W.hom.h;
  HValuedForm F(W.pair, W.hom.h, 2);
  int n = pair.sdim();
  for (int al = 0; al < n; ++al)
    for (int be = al + 1; be < n; ++be) {
      auto x = g.basis_vector(pair.s_indices[static_cast<size_t>(al)]);
      auto y = g.basis_vector(pair.s_indices[static_cast<size_t>(be)]);
      // (dW)(x,y) = -W([x,y]) with the trivial-representation d on g.
      auto dW = W.apply(g.bracket(x, y));
      for (auto& v : dW) v = -v;
      // (1/2)[W,W](x,y) by the shuffle expansion of the graded commutator.
      auto Wx = W.apply(x), Wy = W.apply(y);
      auto c1 = h.bracket(Wx, Wy), c2 = h.bracket(Wy, Wx);
      for (int c = 0; c < h.dim(); ++c)
        F.comp(c, {al, be}) =
            dW[static_cast<size_t>(c)] + (c1[static_cast<size_t>(c)] - c2[static_cast<size_t>(c)]) * Scalar(Rational(1, 2));
    }
  return F;
}

std::vector<Scalar> raised_structure_constants(const HomogeneousPair& pair,
                                               const MetricOnS& metric) {
  int n = pair.sdim();
  std::vector<Scalar> up(static_cast<size_t>(n) * n * n);
  for (int m = 0; m < n; ++m)
    for (int nn = 0; nn < n; ++nn)
      for (int j = 0; j < n; ++j) {
        Scalar acc(0);
        for (int p = 0; p < n; ++p) {
          if (metric.mu_inv.at(m, p).is_zero()) continue;
          for (int q = 0; q < n; ++q) {
            if (metric.mu_inv.at(nn, q).is_zero()) continue;
            for (int r = 0; r < n; ++r) {
              Scalar cs = pair.c_sss(p, q, r);
              if (cs.is_zero() || metric.mu.at(r, j).is_zero()) continue;
              acc += metric.mu_inv.at(m, p) * metric.mu_inv.at(nn, q) * cs * metric.mu.at(r, j);
            }
          }
        }
        up[static_cast<size_t>((m * n + nn) * n + j)] = acc;
      }
  return up;
}

HValuedForm hodge_star(const HValuedForm& phi, const MetricOnS& metric) {
  if (!metric.sqrt_abs_det)
    throw error("hodge_star requires a square-root witness for |det mu|");
  int n = phi.n(), k = phi.degree();
  HValuedForm out(phi.pair(), phi.h(), n - k);
  // Raise all indices of phi.
  auto raised = [&](int a, const std::vector<int>& beta) {
    Scalar acc(0);
    for (const auto& rho : index_tuples(n, k)) {
      const Scalar& base = phi.comp(a, rho);
      if (base.is_zero()) continue;
      // Sum over permutations of rho against beta with the metric inverse.
      const auto& perms = permutations_of(k);
      for (const auto& p : perms) {
        Scalar f(perm_sign(p));
        for (int i = 0; i < k; ++i) f *= metric.mu_inv.at(rho[static_cast<size_t>(p[static_cast<size_t>(i)])], beta[static_cast<size_t>(i)]);
        if (!f.is_zero()) acc += base * f;
      }
    }
    return acc;
  };
  // (*phi)^a_{alpha} = (1/k!) sqrt|mu| sum_beta phi^{a beta} eps_{beta alpha};
  // the summand is symmetric under permutations of beta, so summing over
  // increasing tuples absorbs the 1/k!.
  for (const auto& alpha : index_tuples(n, n - k)) {
    for (int a = 0; a < phi.hdim(); ++a) {
      Scalar acc(0);
      for (const auto& beta : index_tuples(n, k)) {
        std::vector<int> word = beta;
        word.insert(word.end(), alpha.begin(), alpha.end());
        int eps = levi_civita(word);
        if (eps == 0) continue;
        Scalar up = raised(a, beta);
        if (up.is_zero()) continue;
        // Increasing beta-tuples each stand for k! permutations, cancelling
        // the 1/k! prefactor.
        acc += eps > 0 ? up : -up;
      }
      out.comp(a, alpha) = acc * *metric.sqrt_abs_det;
    }
  }
  return out;
}

HValuedForm codifferential(const HValuedForm& phi, const WangMap& W, const MetricOnS& metric) {
  int k = phi.degree();
  if (k < 1) throw error("codifferential needs degree >= 1");
  const auto& pair = *phi.pair();
  const LieAlgebra& h = *phi.h();
  int n = phi.n();
  HValuedForm out(phi.pair(), phi.h(), k - 1);
  auto up = raised_structure_constants(pair, metric);
  auto craise = [&](int m, int nn, int j) -> const Scalar& {
    return up[static_cast<size_t>((m * n + nn) * n + j)];
  };
  // W^{a tau} = W^a_rho mu^{rho tau}
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
  Rational lead((k % 2 == 0 ? -1 : 1) * (k + 1), 2);
  lead.canonicalize();
  Rational inv_fact(1);
  for (int i = 2; i <= k + 1; ++i) inv_fact /= i;
  const auto& perms = permutations_of(k + 1);
  for (const auto& sigma : index_tuples(n, k - 1)) {
    for (int c = 0; c < phi.hdim(); ++c) {
      // phi^c_{[sigma... m} c^{m nn}_{nn]}: antisymmetrize the k+1 lower
      // slots over (sigma_1..sigma_{k-1}, m, nn), then contract m and nn.
      Scalar asym(0);
      for (int m = 0; m < n; ++m)
        for (int nn = 0; nn < n; ++nn) {
          std::vector<int> values(sigma);
          values.push_back(m);
          values.push_back(nn);
          for (const auto& p : perms) {
            // slots 0..k-1 feed phi, slot k feeds the lowered c index
            std::vector<int> phi_idx(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i) phi_idx[static_cast<size_t>(i)] = values[static_cast<size_t>(p[static_cast<size_t>(i)])];
            int low = values[static_cast<size_t>(p[static_cast<size_t>(k)])];
            const Scalar& cval = craise(m, nn, low);
            if (cval.is_zero()) continue;
            Scalar pv = phi.component(c, phi_idx);
            if (pv.is_zero()) continue;
            Scalar term = pv * cval * Scalar(inv_fact);
            asym += perm_sign(p) > 0 ? term : -term;
          }
        }
      Scalar total = Scalar(lead) * asym;
      // - W^{a tau} phi^b_{tau sigma...} r_ab^c
      for (int a = 0; a < h.dim(); ++a)
        for (int tau = 0; tau < n; ++tau) {
          if (Wup.at(a, tau).is_zero()) continue;
          for (int b = 0; b < h.dim(); ++b) {
            const Scalar& r = h.structure(a, b, c);
            if (r.is_zero()) continue;
            std::vector<int> idx{tau};
            idx.insert(idx.end(), sigma.begin(), sigma.end());
            Scalar pv = phi.component(b, idx);
            if (pv.is_zero()) continue;
            total -= Wup.at(a, tau) * pv * r;
          }
        }
      out.comp(c, sigma) = total;
    }
  }
  return out;
}

Scalar inner_product(const HValuedForm& phi, const HValuedForm& psi, const MetricOnS& metric,
                     const AdInvariantInnerProduct& m) {
  if (phi.degree() != psi.degree()) throw error("inner_product degree mismatch");
  int k = phi.degree(), n = phi.n();
  Scalar acc(0);
  // Increasing tuples with all-raised contraction absorb the 1/k!.
  for (const auto& beta : index_tuples(n, k)) {
    for (int a = 0; a < phi.hdim(); ++a) {
      const Scalar& pa = phi.comp(a, beta);
      if (pa.is_zero()) continue;
      for (int b = 0; b < psi.hdim(); ++b) {
        if (m.gram.at(a, b).is_zero()) continue;
        // psi^{b beta} = psi^b_rho prod mu^{rho beta}
        Scalar up(0);
        for (const auto& rho : index_tuples(n, k)) {
          const Scalar& pb = psi.comp(b, rho);
          if (pb.is_zero()) continue;
          const auto& perms = permutations_of(k);
          for (const auto& p : perms) {
            Scalar f(perm_sign(p));
            for (int i = 0; i < k; ++i)
              f *= metric.mu_inv.at(rho[static_cast<size_t>(p[static_cast<size_t>(i)])], beta[static_cast<size_t>(i)]);
            if (!f.is_zero()) up += pb * f;
          }
        }
        acc += pa * up * m.gram.at(a, b);
      }
    }
  }
  return acc;
}

HValuedForm lie_derivative(const std::vector<Scalar>& x_g, const HValuedForm& phi) {
  const auto& pair = *phi.pair();
  const LieAlgebra& g = pair.g;
  int k = phi.degree(), n = phi.n();
  HValuedForm out(phi.pair(), phi.h(), k);
  for (const auto& beta : index_tuples(n, k)) {
    for (int a = 0; a < phi.hdim(); ++a) {
      Scalar acc(0);
      for (int i = 0; i < k; ++i) {
        auto br = g.bracket(x_g, g.basis_vector(pair.s_indices[static_cast<size_t>(beta[static_cast<size_t>(i)])]));
        for (int gl = 0; gl < n; ++gl) {
          const Scalar& coef = br[static_cast<size_t>(pair.s_indices[static_cast<size_t>(gl)])];
          if (coef.is_zero()) continue;
          std::vector<int> idx = beta;
          idx[static_cast<size_t>(i)] = gl;
          Scalar pv = phi.component(a, idx);
          if (!pv.is_zero()) acc -= coef * pv;
        }
      }
      out.comp(a, beta) = acc;
    }
  }
  return out;
}

HValuedForm twisted_lie_derivative(const std::vector<Scalar>& x_g, const HValuedForm& phi,
                                   const BundleHomomorphism& hom) {
  const auto& pair = *phi.pair();
  HValuedForm out = lie_derivative(x_g, phi);
  // lambda_*(x) from the k coordinates of x.
  std::vector<Scalar> lx(static_cast<size_t>(hom.h->dim()));
  for (int t = 0; t < pair.kdim(); ++t) {
    const Scalar& c = x_g[static_cast<size_t>(pair.k_indices[static_cast<size_t>(t)])];
    if (c.is_zero()) continue;
    for (int a = 0; a < hom.h->dim(); ++a) lx[static_cast<size_t>(a)] += c * hom.lambda.at(a, t);
  }
  const LieAlgebra& h = *hom.h;
  for (const auto& beta : index_tuples(phi.n(), phi.degree()))
    for (int c = 0; c < phi.hdim(); ++c) {
      Scalar acc(0);
      for (int a = 0; a < h.dim(); ++a) {
        if (lx[static_cast<size_t>(a)].is_zero()) continue;
        for (int b = 0; b < h.dim(); ++b) {
          const Scalar& r = h.structure(a, b, c);
          if (r.is_zero()) continue;
          const Scalar& pv = phi.comp(b, beta);
          if (!pv.is_zero()) acc += lx[static_cast<size_t>(a)] * pv * r;
        }
      }
      out.comp(c, beta) += acc;
    }
  return out;
}

HValuedForm interior_product(const std::vector<Scalar>& v_s, const HValuedForm& phi) {
  int k = phi.degree(), n = phi.n();
  if (k == 0) throw error("interior product of a 0-form");
  HValuedForm out(phi.pair(), phi.h(), k - 1);
  for (const auto& beta : index_tuples(n, k - 1))
    for (int a = 0; a < phi.hdim(); ++a) {
      Scalar acc(0);
      for (int al = 0; al < n; ++al) {
        if (v_s[static_cast<size_t>(al)].is_zero()) continue;
        std::vector<int> idx{al};
        idx.insert(idx.end(), beta.begin(), beta.end());
        Scalar pv = phi.component(a, idx);
        if (!pv.is_zero()) acc += v_s[static_cast<size_t>(al)] * pv;
      }
      out.comp(a, beta) = acc;
    }
  return out;
}

std::vector<Scalar> dw_full_eval(const HValuedForm& phi, const WangMap& W,
                                 const std::vector<std::vector<Scalar>>& g_args) {
  const auto& pair = *phi.pair();
  const LieAlgebra& g = pair.g;
  const LieAlgebra& h = *phi.h();
  int p = phi.degree();
  if (g_args.size() != static_cast<size_t>(p + 1)) throw error("dw_full_eval arity mismatch");
  auto to_s = [&](const std::vector<Scalar>& v) {
    std::vector<Scalar> s(static_cast<size_t>(pair.sdim()));
    for (int b = 0; b < pair.sdim(); ++b) s[static_cast<size_t>(b)] = v[static_cast<size_t>(pair.s_indices[static_cast<size_t>(b)])];
    return s;
  };
  std::vector<Scalar> out(static_cast<size_t>(h.dim()));
  // (d phi)(z_1..z_{p+1}) = sum_{i<j} (-1)^{i+j} phi([z_i,z_j], rest)
  for (int i = 0; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j) {
      std::vector<std::vector<Scalar>> args;
      args.push_back(to_s(g.bracket(g_args[static_cast<size_t>(i)], g_args[static_cast<size_t>(j)])));
      for (int l = 0; l <= p; ++l)
        if (l != i && l != j) args.push_back(to_s(g_args[static_cast<size_t>(l)]));
      auto val = phi.evaluate(args);
      int sgn = (((i + 1) + (j + 1)) % 2 == 0) ? 1 : -1;
      for (int a = 0; a < h.dim(); ++a)
        out[static_cast<size_t>(a)] += sgn > 0 ? val[static_cast<size_t>(a)] : -val[static_cast<size_t>(a)];
    }
  // [W, phi](z_1..z_{p+1}) = sum_i (-1)^{i-1} [W(z_i), phi(rest)]
  for (int i = 0; i <= p; ++i) {
    std::vector<std::vector<Scalar>> args;
    for (int l = 0; l <= p; ++l)
      if (l != i) args.push_back(to_s(g_args[static_cast<size_t>(l)]));
    auto val = phi.evaluate(args);
    auto br = h.bracket(W.apply(g_args[static_cast<size_t>(i)]), val);
    for (int a = 0; a < h.dim(); ++a)
      out[static_cast<size_t>(a)] += (i % 2 == 0) ? br[static_cast<size_t>(a)] : -br[static_cast<size_t>(a)];
  }
  return out;
}

std::vector<FormComponent> form_components(const HValuedForm& phi) {
  std::vector<FormComponent> out;
  for (int a = 0; a < phi.hdim(); ++a)
    for (const auto& t : index_tuples(phi.n(), phi.degree())) {
      const Scalar& c = phi.comp(a, t);
      if (c.is_zero()) continue;
      FormComponent fc;
      fc.h_index = a + 1;
      for (int i : t) fc.indices.push_back(i + 1);
      fc.value = c.str();
      out.push_back(std::move(fc));
    }
  return out;
}

std::string serialize_form(const HValuedForm& phi) {
  std::ostringstream os;
  os << "degree: " << phi.degree() << "\n";
  for (const auto& fc : form_components(phi)) {
    os << fc.h_index << " |";
    for (int i : fc.indices) os << " " << i;
    os << " | " << fc.value << "\n";
  }
  return os.str();
}

Scalar wedge_pair_top(const HValuedForm& phi, const HValuedForm& psi,
                      const AdInvariantInnerProduct& m) {
  int k = phi.degree(), l = psi.degree(), n = phi.n();
  if (k + l != n) throw error("wedge_pair_top needs complementary degrees");
  Scalar acc(0);
  // Coefficient on e^1 ^ ... ^ e^n via the shuffle expansion.
  const auto& subsets = index_tuples(n, k);
  for (const auto& S : subsets) {
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (int i : S) used[static_cast<size_t>(i)] = true;
    std::vector<int> T;
    for (int i = 0; i < n; ++i)
      if (!used[static_cast<size_t>(i)]) T.push_back(i);
    std::vector<int> word = S;
    word.insert(word.end(), T.begin(), T.end());
    int sgn = levi_civita(word);
    for (int a = 0; a < phi.hdim(); ++a) {
      const Scalar& pa = phi.comp(a, S);
      if (pa.is_zero()) continue;
      for (int b = 0; b < psi.hdim(); ++b) {
        const Scalar& pb = psi.comp(b, T);
        if (pb.is_zero() || m.gram.at(a, b).is_zero()) continue;
        Scalar term = pa * pb * m.gram.at(a, b);
        acc += sgn > 0 ? term : -term;
      }
    }
  }
  return acc;
}

}  // namespace ymh
