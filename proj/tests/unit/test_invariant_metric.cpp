#include "ymh/invariant_metric.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace ymh;

TEST_CASE("family dimensions match the tabulated parameter counts") {
  const std::map<std::string, int> expected = {{"A1", 4}, {"A2", 4}, {"A3", 4}, {"A4", 2},
                                               {"A5", 1}, {"B1", 4}, {"B2", 2}, {"B3", 2}};
  for (auto& [id_key, dim] : expected) {
    const std::string id = id_key;
    CatalogEntry e = catalog_load(id);
    CHECK_MESSAGE(invariant_metric_family(*e.pair).dim() == dim, "family dim for ", id);
    CHECK(static_cast<int>(e.metric->params.size()) == dim);
  }
}

TEST_CASE("tabulated patterns are invariant and span the family") {
  for (const auto& id : testsupport::fr_ids()) {
    CatalogEntry e = catalog_load(id);
    CHECK(is_invariant_metric(*e.pair, e.metric->pattern));
    // The pattern's parameter slots inject into the family: substituting unit
    // vectors for the parameters gives independent family members.
    auto family = invariant_metric_family(*e.pair);
    std::vector<std::vector<Scalar>> members;
    for (size_t p = 0; p < e.metric->params.size(); ++p) {
      ParameterAssignment w;
      for (size_t q = 0; q < e.metric->params.size(); ++q)
        w.set(e.metric->params[q], q == p ? Rational(1) : Rational(0));
      Matrix member(e.pair->sdim(), e.pair->sdim());
      for (int i = 0; i < e.pair->sdim(); ++i)
        for (int j = 0; j < e.pair->sdim(); ++j)
          member.at(i, j) = Scalar(e.metric->pattern.at(i, j).evaluate(w));
      CHECK(is_invariant_metric(*e.pair, member));
      members.push_back(coords_from_symmetric(member));
    }
    CHECK(rank_of(Matrix::from_rows(members)) == family.dim());
  }
}

TEST_CASE("tabulated determinant expressions are exact") {
  for (const auto& id : testsupport::fr_ids()) {
    CatalogEntry e = catalog_load(id);
    CHECK(determinant(e.metric->pattern) == parse_scalar(e.metric->det_text));
  }
}

TEST_CASE("metric patterns of the A1 and B3 rows") {
  CatalogEntry a1 = catalog_load("A1");
  const Matrix& m = a1.metric->pattern;
  CHECK(m.at(0, 0) == parse_scalar("-2*a"));
  CHECK(m.at(0, 3) == Scalar::parameter("a"));
  CHECK(m.at(1, 1) == Scalar::parameter("b"));
  CHECK(m.at(1, 3) == Scalar::parameter("c"));
  CHECK(m.at(3, 3) == Scalar::parameter("d"));
  CHECK(m.at(2, 2).is_zero());

  CatalogEntry b3 = catalog_load("B3");
  const Matrix& m3 = b3.metric->pattern;
  CHECK(m3.at(0, 2) == Scalar::parameter("a"));
  CHECK(m3.at(1, 3) == Scalar::parameter("a"));
  CHECK(m3.at(1, 1) == Scalar::parameter("b"));
  CHECK(m3.at(0, 0).is_zero());
}

TEST_CASE("admitted signatures are realized by family members") {
  // The A classes admit Lorentzian members, the B classes split-signature
  // ones, and A1-A3 admit both.
  std::mt19937 rng(24);
  for (const auto& id : testsupport::fr_ids()) {
    CatalogEntry e = catalog_load(id);
    std::set<std::pair<int, int>> seen;
    int found = 0;
    for (int trial = 0; trial < 200 && found < 60; ++trial) {
      ParameterAssignment w;
      for (const auto& p : e.metric->params)
        w.set(p, testsupport::random_rational(rng, 4, 3));
      try {
        MetricOnS m = pattern_metric_at(e, w);
        auto sig = signature(m.mu);
        if (sig.first > sig.second) std::swap(sig.first, sig.second);  // multiset
        seen.insert(sig);
        ++found;
      } catch (const error&) {
        // degenerate witness
      }
    }
    bool lorentzian = seen.count({1, 3}) > 0;
    bool split = seen.count({2, 2}) > 0;
    const std::string& note = e.metric->signature_note;
    CHECK_MESSAGE(lorentzian == (note.find("(1,3)") != std::string::npos), "Lorentzian ", id);
    CHECK_MESSAGE(split == (note.find("(2,2)") != std::string::npos), "split ", id);
  }
}

TEST_CASE("a trivial isotropy pair admits the full symmetric space") {
  // k = 0 is impossible for a homogeneous pair here, but a trivially acting k
  // behaves the same: every symmetric matrix is invariant.
  CatalogEntry a43 = catalog_load("a43");
  CHECK(invariant_metric_family(*a43.pair).dim() == 6);
}

TEST_CASE("metric instances carry exact inverse, det, and parity") {
  CatalogEntry a5 = catalog_load("A5");
  MetricOnS m = pattern_metric(a5);
  CHECK(m.det == parse_scalar("-2*a^4"));
  CHECK((m.mu * m.mu_inv) == Matrix::identity(4));
  CHECK((m.parity == 1 || m.parity == 3));  // signature {1,3} as a multiset

  CatalogEntry b2 = catalog_load("B2");
  MetricOnS mb2 = pattern_metric(b2);
  CHECK(mb2.det == parse_scalar("2*a^4"));
  CHECK(mb2.parity == 2);  // signature (2,2)

  MetricOnS ident = metric_instance(a5.pair, Matrix::identity(4), ParameterAssignment{});
  CHECK(ident.det == Scalar(1));
  CHECK(ident.parity == 0);
  REQUIRE(ident.sqrt_abs_det.has_value());
  CHECK(*ident.sqrt_abs_det == Scalar(1));
}

TEST_CASE("invariance is re-checked after instantiation") {
  for (const auto& id : testsupport::fr_ids()) {
    CatalogEntry e = catalog_load(id);
    MetricOnS m = pattern_metric(e);
    CHECK(is_invariant_metric(*e.pair, m.mu));
    MetricOnS mw = pattern_metric_at(e, e.metric->default_witness);
    CHECK(is_invariant_metric(*e.pair, mw.mu));
  }
}

TEST_CASE("degenerate witness is rejected") {
  CatalogEntry a2 = catalog_load("A2");
  // det = -a^3 d vanishes at d = 0.
  ParameterAssignment bad{{"a", Rational(1)}, {"b", Rational(0)}, {"c", Rational(0)},
                          {"d", Rational(0)}};
  CHECK_THROWS_AS(pattern_metric_at(a2, bad), error);
}

TEST_CASE("square roots of |det| are derived for monomial squares") {
  CatalogEntry b3 = catalog_load("B3");
  MetricOnS m = pattern_metric(b3);  // det = a^4
  REQUIRE(m.sqrt_abs_det.has_value());
  CHECK(*m.sqrt_abs_det == parse_scalar("a^2"));

  CatalogEntry a5 = catalog_load("A5");
  MetricOnS m5 = pattern_metric(a5);  // |det| = 2 a^4 is not a square
  CHECK(!m5.sqrt_abs_det.has_value());

  // The supplied root must be the positive one at the witness.
  CHECK_THROWS_AS(metric_instance(b3.pair, Matrix::identity(4), ParameterAssignment{},
                                  Scalar(-1)),
                  error);
  // An auto-derived odd-power root is rejected at a negative witness.
  CatalogEntry b3n = catalog_load("B3");
  ParameterAssignment neg{{"a", Rational(-1)}, {"b", Rational(0)}};
  Matrix scaled = b3n.metric->pattern;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) scaled.at(i, j) *= parse_scalar("a^2");
  // det = a^12, auto root a^6 > 0 everywhere: fine even at a = -1.
  CHECK_NOTHROW(metric_instance(b3n.pair, scaled, neg));
}
