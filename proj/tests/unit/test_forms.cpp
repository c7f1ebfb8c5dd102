#include "ymh/forms.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace ymh;

namespace {

HValuedForm random_form(std::mt19937& rng, std::shared_ptr<const HomogeneousPair> pair,
                        std::shared_ptr<const LieAlgebra> h, int degree) {
  HValuedForm f(pair, h, degree);
  for (int a = 0; a < f.hdim(); ++a)
    for (const auto& t : index_tuples(f.n(), degree))
      f.comp(a, t) = Scalar(testsupport::random_rational(rng, 4, 3));
  return f;
}

// Witness metrics with |det| an exact rational square.  The invariant
// families of A4, A5, B2 have |det| = 2 a^4, which is never a rational
// square, so those pairs get general symmetric witnesses (the star and
// codifferential identities are metric-agnostic).
MetricOnS square_det_witness(const CatalogEntry& entry, std::mt19937& rng) {
  const std::string& id = entry.id;
  if (id == "A4" || id == "A5" || id == "B2") {
    Matrix mu = testsupport::random_square_det_metric(rng, entry.pair->sdim(), 1);
    return testsupport::witness_metric(entry.pair, mu);
  }
  ParameterAssignment w = entry.metric->default_witness;
  if (id == "A1")
    w = ParameterAssignment{{"a", Rational(1)},
                            {"b", testsupport::random_rational(rng, 3, 2)},
                            {"c", testsupport::random_rational(rng, 3, 2)},
                            {"d", Rational(0)}};  // det = a^3 (a + 2d) = 1
  if (id == "B1" || id == "B3") {
    Rational a = testsupport::random_nonzero_rational(rng);
    w.values["a"] = a;  // det = a^4
    w.values["b"] = testsupport::random_rational(rng, 3, 2);
  }
  MetricOnS m = pattern_metric_at(entry, w);
  REQUIRE(m.sqrt_abs_det.has_value());
  return m;
}

WangMap some_wang(const CatalogEntry& entry, std::mt19937& rng) {
  BundleHomomorphism hom = entry.designated_lambda.empty()
                               ? trivial_homomorphism(*entry.pair, su2())
                               : designated_homomorphism(entry);
  auto sol = solve_wang(entry.pair, hom);
  REQUIRE(sol.feasible);
  return testsupport::random_wang_point(sol, rng);
}

}  // namespace

TEST_CASE("inner products on h are validated") {
  // The unit Gram is ad-invariant for the cyclic constants.
  CHECK_NOTHROW(make_inner_product(su2(), Matrix::identity(3)));
  // An anisotropic diagonal is not.
  Matrix bad(3, 3);
  bad.at(0, 0) = Scalar(1);
  bad.at(1, 1) = Scalar(2);
  bad.at(2, 2) = Scalar(3);
  CHECK_THROWS_AS(make_inner_product(su2(), bad), error);
  // Negative-definite Gram rejected.
  CHECK_THROWS_AS(make_inner_product(su2(), Matrix::identity(3).scaled(Scalar(-1))), error);
}

TEST_CASE("graded commutator basics") {
  CatalogEntry e = catalog_load("B3");
  auto h = su2();
  HValuedForm f1 = HValuedForm::basis_covector(e.pair, h, 0, 0);  // e^1 (x) f1
  HValuedForm f2 = HValuedForm::basis_covector(e.pair, h, 1, 1);  // e^2 (x) f2

  CHECK(graded_commutator(f1, f1).is_zero());  // single abelian image

  HValuedForm c = graded_commutator(f1, f2);
  CHECK(c.degree() == 2);
  CHECK(c.comp(2, {0, 1}) == Scalar(1));  // (e^1 ^ e^2) (x) f3
  CHECK(c.comp(0, {0, 1}).is_zero());

  // Degree overflow gives the zero form.
  std::mt19937 rng(51);
  HValuedForm p3 = random_form(rng, e.pair, h, 3);
  HValuedForm q2 = random_form(rng, e.pair, h, 2);
  CHECK(graded_commutator(p3, q2).is_zero());
}

TEST_CASE("graded antisymmetry and Jacobi on random forms") {
  std::mt19937 rng(52);
  CatalogEntry e = catalog_load("B3");
  auto h = su2();
  for (int trial = 0; trial < 10; ++trial) {
    int p = 1 + static_cast<int>(rng() % 2);
    int q = 1 + static_cast<int>(rng() % 2);
    HValuedForm a = random_form(rng, e.pair, h, p);
    HValuedForm b = random_form(rng, e.pair, h, q);
    int sign = (p * q) % 2 == 0 ? 1 : -1;
    CHECK((graded_commutator(a, b) + graded_commutator(b, a).scaled(Scalar(sign))).is_zero());

    HValuedForm c = random_form(rng, e.pair, h, 1);
    int r = 1;
    auto term = [&](const HValuedForm& x, const HValuedForm& y, const HValuedForm& z, int s) {
      return graded_commutator(graded_commutator(x, y), z).scaled(Scalar(s));
    };
    int s1 = (p * r) % 2 == 0 ? 1 : -1;
    int s2 = (q * p) % 2 == 0 ? 1 : -1;
    int s3 = (r * q) % 2 == 0 ? 1 : -1;
    CHECK((term(a, b, c, s1) + term(b, c, a, s2) + term(c, a, b, s3)).is_zero());
  }
}

TEST_CASE("d_w with W = 0 is the trivial-coefficient differential") {
  CatalogEntry e = catalog_load("B3");
  auto hom = trivial_homomorphism(*e.pair, su2());
  WangMap zero = wang_point(solve_wang(e.pair, hom), std::vector<Scalar>(3));
  HValuedForm phi = HValuedForm::basis_covector(e.pair, su2(), 1, 0);  // e^2 (x) f1
  HValuedForm d = d_w(phi, zero);
  // (d e^2)(e_a, e_b) = -c_ab^2; only [e1,e2] = 2e2 contributes.
  CHECK(d.comp(0, {0, 1}) == Scalar(-2));
  CHECK(d.comp(0, {0, 2}).is_zero());
  CHECK(d.comp(0, {1, 3}).is_zero());
}

TEST_CASE("component formula matches the route-independent evaluation") {
  std::mt19937 rng(53);
  for (const auto& id : {"B3", "A5", "a43"}) {
    CatalogEntry e = catalog_load(id);
    WangMap W = some_wang(e, rng);
    for (int k = 0; k <= 2; ++k) {
      HValuedForm phi = random_form(rng, e.pair, su2(), k);
      HValuedForm d = d_w(phi, W);
      for (const auto& gamma : index_tuples(e.pair->sdim(), k + 1)) {
        std::vector<std::vector<Scalar>> args;
        for (int gi : gamma) {
          std::vector<Scalar> v(static_cast<size_t>(e.pair->g.dim()));
          v[static_cast<size_t>(e.pair->s_indices[static_cast<size_t>(gi)])] = Scalar(1);
          args.push_back(std::move(v));
        }
        auto full = dw_full_eval(phi, W, args);
        for (int a = 0; a < 3; ++a)
          CHECK((full[static_cast<size_t>(a)] - d.comp(a, gamma)).is_zero());
      }
    }
  }
}

TEST_CASE("Bianchi identity and d_w squared") {
  std::mt19937 rng(54);
  for (const auto& id : testsupport::fr_ids()) {
    CatalogEntry e = catalog_load(id);
    std::vector<BundleHomomorphism> homs{trivial_homomorphism(*e.pair, su2())};
    if (!e.designated_lambda.empty()) homs.push_back(designated_homomorphism(e));
    for (auto& hom : homs) {
      auto sol = solve_wang(e.pair, hom);
      if (!sol.feasible) continue;
      for (int trial = 0; trial < 4; ++trial) {
        WangMap W = testsupport::random_wang_point(sol, rng);
        HValuedForm F = curvature(W);
        CHECK(d_w(F, W).is_zero());
        HValuedForm phi = random_form(rng, e.pair, su2(), 1);
        CHECK((d_w(d_w(phi, W), W) - graded_commutator(F, phi)).is_zero());
      }
    }
  }
}

TEST_CASE("curvature values") {
  // A5: the unique connection is flat.
  CatalogEntry a5 = catalog_load("A5");
  WangMap w5 = wang_point(solve_wang(a5.pair, designated_homomorphism(a5)), {});
  CHECK(curvature(w5).is_zero());

  // B3 with W(e2) = f1: F = -2 (e^1 ^ e^2) (x) f1.
  CatalogEntry b3 = catalog_load("B3");
  auto sol3 = solve_wang(b3.pair, designated_homomorphism(b3));
  WangMap w3 = wang_point(sol3, {Scalar(1)});
  REQUIRE(w3.w.at(0, 1) == Scalar(1));
  HValuedForm F3 = curvature(w3);
  HValuedForm expect(b3.pair, su2(), 2);
  expect.comp(0, {0, 1}) = Scalar(-2);
  CHECK(F3 == expect);

  // Canonical connection on a symmetric pair: F(x1,x2) = -lambda(proj_k [x1,x2]).
  CatalogEntry sym = catalog_load("s2_sym");
  auto hom = designated_homomorphism(sym);
  auto comp = find_invariant_complement(*sym.pair, {});
  REQUIRE(comp.has_value());
  WangMap wc = canonical_wang(sym.pair, hom, *comp);
  HValuedForm Fc = curvature(wc);
  CHECK(Fc.comp(0, {0, 1}) == Scalar(-1));  // [e1,e2] = e3, lambda(e3) = f1
}

TEST_CASE("both curvature routes agree symbolically") {
  for (const auto& id : testsupport::fr_ids()) {
    CatalogEntry e = catalog_load(id);
    BundleHomomorphism hom = e.designated_lambda.empty()
                                 ? trivial_homomorphism(*e.pair, su2())
                                 : designated_homomorphism(e);
    auto sol = solve_wang(e.pair, hom);
    REQUIRE(sol.feasible);
    WangMap W = symbolic_wang_point(sol);
    CHECK(curvature(W) == curvature_via_dw(W));
  }
}

TEST_CASE("Euclidean Hodge star") {
  CatalogEntry b3 = catalog_load("B3");
  MetricOnS ident = metric_instance(b3.pair, Matrix::identity(4), ParameterAssignment{});
  auto h = su2();
  HValuedForm w12(b3.pair, h, 2);
  w12.comp(0, {0, 1}) = Scalar(1);
  HValuedForm star = hodge_star(w12, ident);
  HValuedForm expect(b3.pair, h, 2);
  expect.comp(0, {2, 3}) = Scalar(1);
  CHECK(star == expect);

  // *1 is the volume form scaled by sqrt|det|.
  HValuedForm one(b3.pair, h, 0);
  one.comp(0, {}) = Scalar(1);
  HValuedForm vol = hodge_star(one, ident);
  CHECK(vol.comp(0, {0, 1, 2, 3}) == Scalar(1));

  // Missing square root is an error.
  MetricOnS no_root = pattern_metric(catalog_load("A5"));
  CHECK_THROWS_AS(hodge_star(w12, no_root), error);
}

TEST_CASE("symbolic Hodge star on the B3 family") {
  // det = a^4 is a monomial square, so the star works symbolically.
  CatalogEntry b3 = catalog_load("B3");
  MetricOnS m = pattern_metric(b3);
  REQUIRE(m.sqrt_abs_det.has_value());
  HValuedForm one(b3.pair, su2(), 0);
  one.comp(0, {}) = Scalar(1);
  HValuedForm vol = hodge_star(one, m);
  CHECK(vol.comp(0, {0, 1, 2, 3}) == parse_scalar("a^2"));
  // Double star with the witness parity (2,2).
  std::mt19937 rng(63);
  for (int k = 0; k <= 4; ++k) {
    HValuedForm phi = random_form(rng, b3.pair, su2(), k);
    int sign = ((k * (4 - k)) % 2 == 0 ? 1 : -1);  // parity 2 is even
    CHECK((hodge_star(hodge_star(phi, m), m) - phi.scaled(Scalar(sign))).is_zero());
  }
}

TEST_CASE("double star identity at witnesses") {
  std::mt19937 rng(55);
  for (const auto& id : testsupport::fr_ids()) {
    CatalogEntry e = catalog_load(id);
    for (int trial = 0; trial < 3; ++trial) {
      MetricOnS m = square_det_witness(e, rng);
      int n = e.pair->sdim();
      for (int k = 0; k <= n; ++k) {
        HValuedForm phi = random_form(rng, e.pair, su2(), k);
        HValuedForm ss = hodge_star(hodge_star(phi, m), m);
        int sign = ((k * (n - k)) % 2 == 0 ? 1 : -1) * (m.parity % 2 == 0 ? 1 : -1);
        CHECK((ss - phi.scaled(Scalar(sign))).is_zero());
      }
    }
  }
}

TEST_CASE("epsilon contraction identities at rational witnesses") {
  std::mt19937 rng(56);
  int n = 4;
  for (int trial = 0; trial < 5; ++trial) {
    Matrix mu = testsupport::random_square_det_metric(rng, n, trial % (n + 1));
    auto inv = invert_symmetric(mu);
    Rational det = inv.det.rational_value();
    Rational abs_det = det < 0 ? Rational(-det) : det;
    int parity = signature(mu).second;

    // mu^{a1 b1} ... mu^{an bn} eps_{b...} = det(mu^-1) eps^{a...}
    auto check_word = [&](const std::vector<int>& word) {
      Scalar lhs(0);
      std::vector<int> bw(static_cast<size_t>(n));
      std::function<void(int)> sum_b = [&](int pos) {
        if (pos == n) {
          int eps = levi_civita(bw);
          if (eps == 0) return;
          Scalar term(eps);
          for (int i = 0; i < n; ++i)
            term *= inv.inverse.at(word[static_cast<size_t>(i)], bw[static_cast<size_t>(i)]);
          lhs += term;
          return;
        }
        for (int v = 0; v < n; ++v) {
          bw[static_cast<size_t>(pos)] = v;
          sum_b(pos + 1);
        }
      };
      sum_b(0);
      Scalar rhs = Scalar(Rational(levi_civita(word))) / inv.det;
      CHECK((lhs - rhs).is_zero());
    };
    // Spot-check a handful of index words rather than all 256.
    for (int s = 0; s < 8; ++s) {
      std::vector<int> word(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) word[static_cast<size_t>(i)] = static_cast<int>(rng() % n);
      check_word(word);
    }

    // eps_{g... a...} eps^{g... b...} = (-1)^mu (n-k)! k! delta^{b}_{[a]}
    // with the raised symbol eps^{...} = |det| mu^{..} ... mu^{..} eps_{...}.
    for (int k = 0; k <= n; ++k) {
      auto raised_eps = [&](const std::vector<int>& idx) {
        Scalar acc(0);
        std::vector<int> bw(static_cast<size_t>(n));
        std::function<void(int)> rec2 = [&](int p2) {
          if (p2 == n) {
            int eps = levi_civita(bw);
            if (eps == 0) return;
            Scalar term(eps);
            for (int i = 0; i < n; ++i)
              term *= inv.inverse.at(idx[static_cast<size_t>(i)], bw[static_cast<size_t>(i)]);
            acc += term;
            return;
          }
          for (int v = 0; v < n; ++v) {
            bw[static_cast<size_t>(p2)] = v;
            rec2(p2 + 1);
          }
        };
        rec2(0);
        return acc * Scalar(abs_det);
      };
      auto delta_antisym = [&](const std::vector<int>& alpha, const std::vector<int>& beta) {
        // delta^{b1}_{[a1} ... delta^{bk}_{ak]}
        Rational acc(0);
        std::vector<int> perm(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) perm[static_cast<size_t>(i)] = i;
        int fact = 1;
        for (int i = 2; i <= k; ++i) fact *= i;
        do {
          int sgn = 1;
          for (size_t i = 0; i < perm.size(); ++i)
            for (size_t j = i + 1; j < perm.size(); ++j)
              if (perm[i] > perm[j]) sgn = -sgn;
          bool all = true;
          for (int i = 0; i < k; ++i)
            all = all && alpha[static_cast<size_t>(perm[static_cast<size_t>(i)])] ==
                             beta[static_cast<size_t>(i)];
          if (all) acc += Rational(sgn, fact);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (k == 0) acc = 1;
        return acc;
      };
      for (int s = 0; s < 3; ++s) {
        std::vector<int> alpha, beta;
        for (int i = 0; i < k; ++i) {
          alpha.push_back(static_cast<int>(rng() % n));
          beta.push_back(static_cast<int>(rng() % n));
        }
        Scalar lhs(0);
        for (const auto& gamma : index_tuples(n, n - k)) {
          // Increasing gamma tuples stand for (n-k)! permutations.
          std::vector<int> low = gamma;
          low.insert(low.end(), alpha.begin(), alpha.end());
          int eps_low = levi_civita(low);
          if (eps_low == 0) continue;
          std::vector<int> up = gamma;
          up.insert(up.end(), beta.begin(), beta.end());
          Scalar eps_up = raised_eps(up);
          int fact = 1;
          for (int i = 2; i <= n - k; ++i) fact *= i;
          lhs += Scalar(Rational(eps_low * fact)) * eps_up;
        }
        int fact_nk = 1, fact_k = 1;
        for (int i = 2; i <= n - k; ++i) fact_nk *= i;
        for (int i = 2; i <= k; ++i) fact_k *= i;
        Rational rhs = Rational((parity % 2 == 0 ? 1 : -1) * fact_nk * fact_k) *
                       delta_antisym(alpha, beta);
        CHECK((lhs - Scalar(rhs)).is_zero());
      }
    }
  }
}

TEST_CASE("codifferential closed form equals the star route at witnesses") {
  std::mt19937 rng(57);
  std::vector<std::string> ids = testsupport::fr_ids();
  ids.push_back("a43");
  ids.push_back("s2_sym");
  ids.push_back("sl2r_sym");
  for (const auto& id : ids) {
    CatalogEntry e = catalog_load(id);
    BundleHomomorphism hom = e.designated_lambda.empty()
                                 ? trivial_homomorphism(*e.pair, su2())
                                 : designated_homomorphism(e);
    auto sol = solve_wang(e.pair, hom);
    if (!sol.feasible) continue;
    int n = e.pair->sdim();
    for (int trial = 0; trial < 3; ++trial) {
      MetricOnS m = (e.id == "a43" || e.id == "s2_sym" || e.id == "sl2r_sym")
                        ? testsupport::witness_metric(
                              e.pair, testsupport::random_square_det_metric(rng, n, 0))
                        : square_det_witness(e, rng);
      WangMap W = testsupport::random_wang_point(sol, rng);
      for (int k = 1; k <= n; ++k) {
        HValuedForm phi = random_form(rng, e.pair, su2(), k);
        HValuedForm direct = codifferential(phi, W, m);
        int sign = -((m.parity % 2 == 0 ? 1 : -1)) * ((n * (k + 1)) % 2 == 0 ? 1 : -1);
        HValuedForm via_star =
            hodge_star(d_w(hodge_star(phi, m), W), m).scaled(Scalar(sign));
        CHECK_MESSAGE((direct - via_star).is_zero(), "pair ", id, " degree ", k);
      }
    }
  }
}

TEST_CASE("codifferential special cases") {
  // Symmetric pairs have c_ab^g = 0 on s, so the first term drops; with the
  // zero Wang map the codifferential vanishes identically.
  for (const auto& id : {"s2_sym", "sl2r_sym"}) {
    CatalogEntry e = catalog_load(id);
    for (int a = 0; a < e.pair->sdim(); ++a)
      for (int b = 0; b < e.pair->sdim(); ++b)
        for (int g = 0; g < e.pair->sdim(); ++g) CHECK(e.pair->c_sss(a, b, g).is_zero());
    auto hom = trivial_homomorphism(*e.pair, su2());
    WangMap zero = wang_point(solve_wang(e.pair, hom),
                              std::vector<Scalar>(static_cast<size_t>(
                                  solve_wang(e.pair, hom).dim())));
    std::mt19937 rng(58);
    MetricOnS m = testsupport::witness_metric(
        e.pair, testsupport::random_square_det_metric(rng, e.pair->sdim(), 0));
    for (int k = 1; k <= e.pair->sdim(); ++k) {
      HValuedForm phi = random_form(rng, e.pair, su2(), k);
      CHECK(codifferential(phi, zero, m).is_zero());
    }
  }
}

TEST_CASE("raised structure constants of the A5 row") {
  CatalogEntry e = catalog_load("A5");
  MetricOnS m = pattern_metric(e);
  auto up = raised_structure_constants(*e.pair, m);
  int n = 4;
  auto at = [&](int a, int b, int g) { return up[static_cast<size_t>((a * n + b) * n + g)]; };
  CHECK(at(0, 1, 1) == parse_scalar("-1/a"));     // c^{12}_2
  CHECK(at(0, 3, 3) == parse_scalar("-1/(2*a)")); // c^{14}_4
  // Everything else with a < b vanishes.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int g = 0; g < n; ++g) {
        if ((a == 0 && b == 1 && g == 1) || (a == 0 && b == 3 && g == 3)) continue;
        CHECK(at(a, b, g).is_zero());
      }
}

TEST_CASE("scalar products") {
  CatalogEntry b3 = catalog_load("B3");
  auto h = su2();
  MetricOnS ident = metric_instance(b3.pair, Matrix::identity(4), ParameterAssignment{});
  AdInvariantInnerProduct m = unit_inner_product(h);
  HValuedForm e1f1 = HValuedForm::basis_covector(b3.pair, h, 0, 0);
  CHECK(inner_product(e1f1, e1f1, ident, m) == Scalar(1));

  // <F, F> vanishes identically for the B3 family with its invariant metric.
  auto sol = solve_wang(b3.pair, designated_homomorphism(b3));
  WangMap W = symbolic_wang_point(sol);
  HValuedForm F = curvature(W);
  MetricOnS family = pattern_metric(b3);
  CHECK(inner_product(F, F, family, m).is_zero());

  CHECK_THROWS_AS(inner_product(e1f1, F, ident, m), error);
}

TEST_CASE("wedge pairing against the star is the scalar product times the volume") {
  std::mt19937 rng(59);
  AdInvariantInnerProduct m = unit_inner_product(su2());
  for (const auto& id : testsupport::fr_ids()) {
    CatalogEntry e = catalog_load(id);
    for (int trial = 0; trial < 2; ++trial) {
      MetricOnS metric = square_det_witness(e, rng);
      for (int k = 0; k <= e.pair->sdim(); ++k) {
        HValuedForm phi = random_form(rng, e.pair, su2(), k);
        HValuedForm psi = random_form(rng, e.pair, su2(), k);
        Scalar lhs = wedge_pair_top(phi, hodge_star(psi, metric), m);
        Scalar rhs = inner_product(phi, psi, metric, m) * *metric.sqrt_abs_det;
        CHECK((lhs - rhs).is_zero());
      }
    }
  }
}

TEST_CASE("twisted Lie derivative") {
  std::mt19937 rng(60);
  // Curvature of any solved Wang map is K-invariant.
  for (const auto& id : testsupport::fr_ids()) {
    CatalogEntry e = catalog_load(id);
    BundleHomomorphism hom = e.designated_lambda.empty()
                                 ? trivial_homomorphism(*e.pair, su2())
                                 : designated_homomorphism(e);
    auto sol = solve_wang(e.pair, hom);
    REQUIRE(sol.feasible);
    WangMap W = symbolic_wang_point(sol);
    HValuedForm F = curvature(W);
    for (int t = 0; t < e.pair->kdim(); ++t) {
      auto x = e.pair->g.basis_vector(e.pair->k_indices[static_cast<size_t>(t)]);
      CHECK(twisted_lie_derivative(x, F, hom).is_zero());
    }
  }

  // With the trivial homomorphism it reduces to the plain Lie derivative.
  CatalogEntry b3 = catalog_load("B3");
  auto hom0 = trivial_homomorphism(*b3.pair, su2());
  for (int trial = 0; trial < 5; ++trial) {
    HValuedForm phi = random_form(rng, b3.pair, su2(), 2);
    auto x = b3.pair->g.basis_vector(4);
    CHECK((twisted_lie_derivative(x, phi, hom0) - lie_derivative(x, phi)).is_zero());
  }
}

TEST_CASE("Cartan-type identity for the twisted derivative") {
  std::mt19937 rng(61);
  for (const auto& id : {"B3", "A5"}) {
    CatalogEntry e = catalog_load(id);
    auto hom = designated_homomorphism(e);
    auto sol = solve_wang(e.pair, hom);
    WangMap W = testsupport::random_wang_point(sol, rng);
    for (int k = 1; k <= 2; ++k) {
      HValuedForm phi = random_form(rng, e.pair, su2(), k);
      for (int t = 0; t < e.pair->kdim(); ++t) {
        auto x = e.pair->g.basis_vector(e.pair->k_indices[static_cast<size_t>(t)]);
        // i_x phi = 0 for semibasic phi, so L^W_x phi = i_x d_W phi, which the
        // full-evaluation route computes without the component formula.
        HValuedForm lhs = twisted_lie_derivative(x, phi, hom);
        for (const auto& beta : index_tuples(e.pair->sdim(), k)) {
          std::vector<std::vector<Scalar>> args{x};
          for (int bi : beta) {
            std::vector<Scalar> v(static_cast<size_t>(e.pair->g.dim()));
            v[static_cast<size_t>(e.pair->s_indices[static_cast<size_t>(bi)])] = Scalar(1);
            args.push_back(std::move(v));
          }
          auto rhs = dw_full_eval(phi, W, args);
          for (int a = 0; a < 3; ++a)
            CHECK((lhs.comp(a, beta) - rhs[static_cast<size_t>(a)]).is_zero());
        }
      }
    }
  }
}

TEST_CASE("form components serialize as index triples") {
  CatalogEntry b3 = catalog_load("B3");
  WangMap w3 = wang_point(solve_wang(b3.pair, designated_homomorphism(b3)), {Scalar(1)});
  HValuedForm F = curvature(w3);
  auto comps = form_components(F);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].h_index == 1);
  CHECK(comps[0].indices == std::vector<int>{1, 2});
  CHECK(comps[0].value == "-2");
  CHECK(serialize_form(F) == "degree: 2\n1 | 1 2 | -2\n");
}

TEST_CASE("interior product") {
  CatalogEntry b3 = catalog_load("B3");
  std::mt19937 rng(62);
  HValuedForm phi = random_form(rng, b3.pair, su2(), 2);
  std::vector<Scalar> v{Scalar(1), Scalar(2), Scalar(0), Scalar(-1)};
  HValuedForm iv = interior_product(v, phi);
  // (i_v phi)(w) = phi(v, w)
  for (int b = 0; b < 4; ++b)
    for (int a = 0; a < 3; ++a) {
      Scalar expect(0);
      for (int al = 0; al < 4; ++al)
        expect += v[static_cast<size_t>(al)] * phi.component(a, {al, b});
      CHECK((iv.comp(a, {b}) - expect).is_zero());
    }
  // i_v i_v = 0
  CHECK(interior_product(v, iv).is_zero());
}
