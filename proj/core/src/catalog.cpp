#include "ymh/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace ymh {

namespace {

struct BracketSpec {
  int i, j;  // 1-based
  std::vector<std::pair<int, std::string>> targets;
};

std::vector<std::string> e_names(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("e" + std::to_string(i));
  return v;
}

std::vector<std::string> v_names(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("v" + std::to_string(i));
  return v;
}

LieAlgebra make_algebra(int dim, std::vector<std::string> names,
                        const std::vector<BracketSpec>& brackets) {
  LieAlgebra L(dim, std::move(names));
  for (auto& b : brackets)
    for (auto& [k, text] : b.targets)
      L.set_bracket(b.i - 1, b.j - 1, k - 1, parse_scalar(text));
  return L;
}

Matrix parse_matrix(int rows, int cols, const std::vector<std::vector<std::string>>& entries) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = parse_scalar(entries[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return m;
}

Matrix rational_matrix(int rows, int cols, const std::vector<std::vector<long>>& entries) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Scalar(entries[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return m;
}

// Columns of the basis-change matrix: adapted e_i as combinations of v_j
// (1-based (v-index, coefficient) pairs).
Matrix basis_columns(int n, const std::vector<std::vector<std::pair<int, long>>>& cols) {
  Matrix T(n, n);
  for (int j = 0; j < n; ++j)
    for (auto& [vi, c] : cols[static_cast<size_t>(j)]) T.at(vi - 1, j) = Scalar(c);
  return T;
}

std::shared_ptr<const HomogeneousPair> make_pair(
    std::string id, LieAlgebra g, std::vector<int> k1, std::vector<int> s1,
    std::vector<Matrix> rho, std::string signature_note, std::string provenance) {
  auto p = std::make_shared<HomogeneousPair>();
  p->g = std::move(g);
  for (int i : k1) p->k_indices.push_back(i - 1);
  for (int i : s1) p->s_indices.push_back(i - 1);
  p->rho_s = std::move(rho);
  p->id = std::move(id);
  p->signature_note = std::move(signature_note);
  p->provenance = std::move(provenance);
  validate_pair(*p);
  return p;
}

MetricPattern make_metric(const std::vector<std::vector<std::string>>& entries,
                          std::vector<std::string> params, std::string det_text,
                          std::string signature_note, ParameterAssignment witness) {
  int n = static_cast<int>(entries.size());
  MetricPattern mp;
  mp.pattern = parse_matrix(n, n, entries);
  mp.params = std::move(params);
  mp.det_text = std::move(det_text);
  mp.signature_note = std::move(signature_note);
  mp.default_witness = std::move(witness);
  return mp;
}

std::string rstr(const Rational& q) { return q.get_str(); }

}  // namespace

std::shared_ptr<const LieAlgebra> su2() {
  static std::shared_ptr<const LieAlgebra> alg = [] {
    auto L = std::make_shared<LieAlgebra>(3, std::vector<std::string>{"f1", "f2", "f3"});
    L->set_bracket(0, 1, 2, Scalar(1));
    L->set_bracket(1, 2, 0, Scalar(1));
    L->set_bracket(2, 0, 1, Scalar(1));
    return L;
  }();
  return alg;
}

std::vector<std::string> catalog_ids() {
  return {"A1", "A2", "A3", "A4", "A5", "B1", "B2", "B3",
          "su2", "a43", "s2_sym", "sl2r_sym"};
}

CatalogEntry catalog_load(const std::string& id, const Rational& alpha, int epsilon) {
  CatalogEntry e;
  e.id = id;

  if (id == "A1") {
    LieAlgebra g = make_algebra(5, e_names(5),
        {{1, 2, {{2, "2"}}},
         {1, 5, {{3, "2"}, {5, "-2"}}},
         {2, 5, {{1, "1"}}},
         {3, 4, {{3, "1"}}},
         {4, 5, {{3, "-1"}}}});
    e.pair = make_pair("A1", std::move(g), {5}, {1, 2, 3, 4},
        {rational_matrix(4, 4, {{0, -1, 0, 0}, {0, 0, 0, 0}, {-2, 0, 0, 1}, {0, 0, 0, 0}})},
        "(1,3),(2,2)", "classification table, class A1");
    e.metric = make_metric(
        {{"-2*a", "0", "0", "a"}, {"0", "b", "a", "c"}, {"0", "a", "0", "0"}, {"a", "c", "0", "d"}},
        {"a", "b", "c", "d"}, "a^3*(a+2*d)", "(1,3),(2,2)",
        ParameterAssignment{{"a", Rational(1)}, {"b", Rational(0)}, {"c", Rational(0)}, {"d", Rational(0)}});
    FelsRennerData fr;
    fr.adapted_in_fr = basis_columns(5, {{{1, 1}}, {{2, 1}}, {{4, 1}}, {{5, 1}}, {{3, 1}, {4, 1}}});
    fr.fr_algebra = make_algebra(5, v_names(5),
        {{1, 2, {{2, "2"}}}, {1, 3, {{3, "-2"}}}, {2, 3, {{1, "1"}}}, {4, 5, {{4, "1"}}}});
    e.fr = std::move(fr);
    e.note = "g = sl(2,R) x solv(2), k = R";
    return e;
  }

  if (id == "A2") {
    e.alpha = alpha;
    std::string ap1 = rstr(alpha + 1), a0 = rstr(alpha), am1 = rstr(alpha - 1);
    LieAlgebra g = make_algebra(5, e_names(5),
        {{1, 4, {{1, ap1}}},
         {2, 4, {{2, a0}}},
         {2, 5, {{1, "1"}}},
         {3, 4, {{3, am1}}},
         {3, 5, {{2, "1"}}},
         {4, 5, {{5, "-1"}}}});
    e.pair = make_pair("A2", std::move(g), {5}, {1, 2, 3, 4},
        {rational_matrix(4, 4, {{0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}})},
        "(1,3),(2,2)", "classification table, class A2 (family parameter alpha)");
    e.metric = make_metric(
        {{"0", "0", "-a", "0"}, {"0", "a", "0", "0"}, {"-a", "0", "b", "c"}, {"0", "0", "c", "d"}},
        {"a", "b", "c", "d"}, "-a^3*d", "(1,3),(2,2)",
        ParameterAssignment{{"a", Rational(1)}, {"b", Rational(0)}, {"c", Rational(0)}, {"d", Rational(-1)}});
    FelsRennerData fr;
    fr.adapted_in_fr = basis_columns(5, {{{1, 1}}, {{2, 1}}, {{3, 1}}, {{5, 1}}, {{4, 1}}});
    fr.fr_algebra = make_algebra(5, v_names(5),
        {{1, 5, {{1, ap1}}}, {2, 4, {{1, "1"}}}, {2, 5, {{2, a0}}},
         {3, 4, {{2, "1"}}}, {3, 5, {{3, am1}}}, {4, 5, {{4, "1"}}}});
    e.fr = std::move(fr);
    e.note = "g = A^alpha_{5,30}, k = R";
    return e;
  }

  if (id == "A3") {
    if (epsilon != 1 && epsilon != -1) throw error("A3: epsilon must be +1 or -1");
    e.epsilon = epsilon;
    std::string me = rstr(Rational(-epsilon));
    LieAlgebra g = make_algebra(5, e_names(5),
        {{1, 3, {{1, "2"}}},
         {2, 3, {{2, "1"}}},
         {2, 4, {{5, me}}},
         {2, 5, {{1, "1"}}},
         {3, 5, {{5, "-1"}}},
         {4, 5, {{2, "-1"}}}});
    e.pair = make_pair("A3", std::move(g), {5}, {1, 2, 3, 4},
        {rational_matrix(4, 4, {{0, -1, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}})},
        "(1,3),(2,2)", "classification table, class A3 (A_{5,37} for eps=1, A_{5,36} for eps=-1)");
    e.metric = make_metric(
        {{"0", "0", "0", "a"}, {"0", "a", "0", "0"}, {"0", "0", "b", "c"}, {"a", "0", "c", "d"}},
        {"a", "b", "c", "d"}, "-a^3*b", "(1,3),(2,2)",
        ParameterAssignment{{"a", Rational(1)}, {"b", Rational(-1)}, {"c", Rational(0)}, {"d", Rational(0)}});
    FelsRennerData fr;
    fr.adapted_in_fr = basis_columns(5, {{{1, 1}}, {{2, 1}}, {{4, 1}}, {{5, 1}}, {{3, 1}}});
    fr.fr_algebra = make_algebra(5, v_names(5),
        {{1, 4, {{1, "2"}}}, {2, 3, {{1, "1"}}}, {2, 4, {{2, "1"}}},
         {2, 5, {{3, me}}}, {3, 4, {{3, "1"}}}, {3, 5, {{2, "1"}}}});
    e.fr = std::move(fr);
    e.note = "k = R";
    return e;
  }

  if (id == "A4") {
    LieAlgebra g = make_algebra(6, e_names(6),
        {{1, 2, {{2, "2"}}},
         {1, 4, {{4, "1"}}},
         {1, 5, {{3, "2"}, {5, "-2"}}},
         {1, 6, {{6, "-1"}}},
         {2, 5, {{1, "1"}}},
         {2, 6, {{4, "1"}}},
         {4, 5, {{6, "-1"}}},
         {4, 6, {{3, "1"}}}});
    e.pair = make_pair("A4", std::move(g), {5, 6}, {1, 2, 3, 4},
        {rational_matrix(4, 4, {{0, -1, 0, 0}, {0, 0, 0, 0}, {-2, 0, 0, 0}, {0, 0, 0, 0}}),
         rational_matrix(4, 4, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}, {0, -1, 0, 0}})},
        "(1,3)", "classification table, class A4 (n(3) semidirect sl(2,R))");
    e.metric = make_metric(
        {{"2*a", "0", "0", "0"}, {"0", "b", "-a", "0"}, {"0", "-a", "0", "0"}, {"0", "0", "0", "a"}},
        {"a", "b"}, "-2*a^4", "(1,3)",
        ParameterAssignment{{"a", Rational(1)}, {"b", Rational(0)}});
    FelsRennerData fr;
    fr.adapted_in_fr = basis_columns(6,
        {{{1, 1}}, {{2, 1}}, {{6, 1}}, {{4, 1}}, {{3, 1}, {6, 1}}, {{5, 1}}});
    fr.fr_algebra = make_algebra(6, v_names(6),
        {{1, 2, {{2, "2"}}}, {1, 3, {{3, "-2"}}}, {2, 3, {{1, "1"}}},
         {1, 4, {{4, "1"}}}, {1, 5, {{5, "-1"}}}, {2, 5, {{4, "1"}}},
         {3, 4, {{5, "1"}}}, {4, 5, {{6, "1"}}}});
    e.fr = std::move(fr);
    e.note = "g = n(3) semidirect sl(2,R), k = R^2";
    return e;
  }

  if (id == "A5") {
    LieAlgebra g = make_algebra(7, e_names(7),
        {{1, 3, {{3, "-2"}}},
         {1, 4, {{4, "-1"}}},
         {1, 6, {{3, "2"}}},
         {1, 7, {{7, "-1"}}},
         {2, 5, {{2, "-2"}}},
         {2, 6, {{1, "-1"}, {5, "1"}}},
         {2, 7, {{4, "1"}}},
         {3, 5, {{3, "2"}}},
         {4, 6, {{7, "-1"}}},
         {4, 7, {{3, "-1"}}},
         {5, 6, {{6, "-2"}}},
         {5, 7, {{7, "-2"}}}});
    e.pair = make_pair("A5", std::move(g), {5, 6, 7}, {1, 2, 3, 4},
        {rational_matrix(4, 4, {{0, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, 0}}),
         rational_matrix(4, 4, {{0, 1, 0, 0}, {0, 0, 0, 0}, {-2, 0, 0, 0}, {0, 0, 0, 0}}),
         rational_matrix(4, 4, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, -1, 0, 0}})},
        "(1,3)", "classification table, class A5 (A^1_{4,9} semidirect sl(2,R), k = Bianchi V)");
    e.metric = make_metric(
        {{"2*a", "0", "0", "0"}, {"0", "0", "a", "0"}, {"0", "a", "0", "0"}, {"0", "0", "0", "a"}},
        {"a"}, "-2*a^4", "(1,3)", ParameterAssignment{{"a", Rational(1)}});
    FelsRennerData fr;
    fr.adapted_in_fr = basis_columns(7,
        {{{7, 1}}, {{2, 1}}, {{4, 1}}, {{6, 1}}, {{1, 1}, {7, 1}}, {{3, 1}, {4, -1}}, {{5, 1}}});
    fr.fr_algebra = make_algebra(7, v_names(7),
        {{1, 2, {{2, "2"}}}, {1, 3, {{3, "-2"}}}, {2, 3, {{1, "1"}}},
         {1, 5, {{5, "-1"}}}, {1, 6, {{6, "1"}}}, {2, 5, {{6, "1"}}}, {3, 6, {{5, "1"}}},
         {4, 7, {{4, "2"}}}, {5, 6, {{4, "1"}}}, {5, 7, {{5, "1"}}}, {6, 7, {{6, "1"}}}});
    // Matrix model in gl(4,R): sl(2,R) sits in the middle 2x2 block.
    {
      auto E = [](int i, int j, long v) {
        Matrix m(4, 4);
        m.at(i, j) = Scalar(v);
        return m;
      };
      Matrix v1(4, 4);
      v1.at(1, 1) = Scalar(1);
      v1.at(2, 2) = Scalar(-1);
      Matrix v5 = E(0, 1, -1) + E(2, 3, 1);
      Matrix v6 = E(0, 2, 1) + E(1, 3, 1);
      Matrix v7(4, 4);
      v7.at(0, 0) = Scalar(-2);
      v7.at(1, 1) = Scalar(-1);
      v7.at(2, 2) = Scalar(-1);
      fr.fr_algebra.set_realization({v1, E(1, 2, 1), E(2, 1, 1), E(0, 3, -2), v5, v6, v7});
    }
    e.fr = std::move(fr);
    e.designated_lambda = "e5=f1";
    e.note = "g = A^1_{4,9} semidirect sl(2,R), k = Bianchi V";
    return e;
  }

  if (id == "B1") {
    LieAlgebra g = make_algebra(5, e_names(5),
        {{1, 2, {{2, "2"}}},
         {1, 3, {{3, "1"}}},
         {1, 4, {{4, "-1"}}},
         {1, 5, {{5, "-2"}}},
         {2, 4, {{3, "1"}}},
         {2, 5, {{1, "1"}}},
         {3, 5, {{4, "-1"}}}});
    e.pair = make_pair("B1", std::move(g), {5}, {1, 2, 3, 4},
        {rational_matrix(4, 4, {{0, -1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}})},
        "(2,2)", "classification table, class B1 (sa(2,R)); source bracket [v1,v3] corrected to -2*v3");
    e.metric = make_metric(
        {{"0", "0", "a", "0"}, {"0", "b", "c", "a"}, {"a", "c", "d", "0"}, {"0", "a", "0", "0"}},
        {"a", "b", "c", "d"}, "a^4", "(2,2)",
        ParameterAssignment{{"a", Rational(1)}, {"b", Rational(0)}, {"c", Rational(0)}, {"d", Rational(0)}});
    FelsRennerData fr;
    fr.adapted_in_fr = basis_columns(5, {{{1, 1}}, {{2, 1}}, {{4, 1}}, {{5, 1}}, {{3, 1}}});
    fr.fr_algebra = make_algebra(5, v_names(5),
        {{1, 2, {{2, "2"}}}, {1, 3, {{3, "-2"}}}, {2, 3, {{1, "1"}}},
         {1, 4, {{4, "1"}}}, {1, 5, {{5, "-1"}}}, {2, 5, {{4, "1"}}}, {3, 4, {{5, "1"}}}});
    e.fr = std::move(fr);
    e.note = "g = sa(2,R), k = R";
    return e;
  }

  if (id == "B2") {
    LieAlgebra g = make_algebra(6, e_names(6),
        {{1, 2, {{2, "2"}}},
         {1, 3, {{3, "1"}}},
         {1, 5, {{4, "-2"}, {5, "-2"}}},
         {1, 6, {{6, "-1"}}},
         {2, 5, {{1, "1"}}},
         {2, 6, {{3, "1"}}},
         {3, 5, {{6, "-1"}}},
         {3, 6, {{4, "1"}}}});
    e.pair = make_pair("B2", std::move(g), {5, 6}, {1, 2, 3, 4},
        {rational_matrix(4, 4, {{0, -1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {2, 0, 0, 0}}),
         rational_matrix(4, 4, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}})},
        "(2,2)", "classification table, class B2 (n(3) semidirect sl(2,R))");
    e.metric = make_metric(
        {{"-2*a", "0", "0", "0"}, {"0", "b", "0", "-a"}, {"0", "0", "a", "0"}, {"0", "-a", "0", "0"}},
        {"a", "b"}, "2*a^4", "(2,2)",
        ParameterAssignment{{"a", Rational(1)}, {"b", Rational(0)}});
    FelsRennerData fr;
    fr.adapted_in_fr = basis_columns(6,
        {{{1, 1}}, {{2, 1}}, {{4, 1}}, {{6, 1}}, {{3, 1}, {6, -1}}, {{5, 1}}});
    fr.fr_algebra = make_algebra(6, v_names(6),
        {{1, 2, {{2, "2"}}}, {1, 3, {{3, "-2"}}}, {2, 3, {{1, "1"}}},
         {1, 4, {{4, "1"}}}, {1, 5, {{5, "-1"}}}, {2, 5, {{4, "1"}}},
         {3, 4, {{5, "1"}}}, {4, 5, {{6, "1"}}}});
    e.fr = std::move(fr);
    e.note = "g = n(3) semidirect sl(2,R), k = R^2";
    return e;
  }

  if (id == "B3") {
    LieAlgebra g = make_algebra(6, e_names(6),
        {{1, 2, {{2, "2"}}},
         {1, 3, {{3, "1"}}},
         {1, 4, {{4, "-1"}}},
         {1, 5, {{5, "-2"}}},
         {1, 6, {{4, "-1"}}},
         {2, 4, {{3, "1"}}},
         {2, 5, {{1, "1"}}},
         {2, 6, {{3, "1"}}},
         {3, 5, {{4, "-1"}}}});
    e.pair = make_pair("B3", std::move(g), {5, 6}, {1, 2, 3, 4},
        {rational_matrix(4, 4, {{0, -1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}}),
         rational_matrix(4, 4, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}})},
        "(2,2)", "classification table, class B3 (sa(2,R) x R)");
    e.metric = make_metric(
        {{"0", "0", "a", "0"}, {"0", "b", "0", "a"}, {"a", "0", "0", "0"}, {"0", "a", "0", "0"}},
        {"a", "b"}, "a^4", "(2,2)",
        ParameterAssignment{{"a", Rational(1)}, {"b", Rational(0)}});
    FelsRennerData fr;
    fr.adapted_in_fr = basis_columns(6,
        {{{1, 1}}, {{2, 1}}, {{4, 1}}, {{5, 1}}, {{3, 1}}, {{5, 1}, {6, 1}}});
    fr.fr_algebra = make_algebra(6, v_names(6),
        {{1, 2, {{2, "2"}}}, {1, 3, {{3, "-2"}}}, {2, 3, {{1, "1"}}},
         {1, 4, {{4, "1"}}}, {1, 5, {{5, "-1"}}}, {2, 5, {{4, "1"}}}, {3, 4, {{5, "1"}}}});
    {
      auto E = [](int i, int j, long v) {
        Matrix m(4, 4);
        m.at(i, j) = Scalar(v);
        return m;
      };
      Matrix v1(4, 4);
      v1.at(0, 0) = Scalar(1);
      v1.at(1, 1) = Scalar(-1);
      fr.fr_algebra.set_realization(
          {v1, E(0, 1, 1), E(1, 0, 1), E(0, 2, 1), E(1, 2, 1), E(3, 3, 1)});
    }
    e.fr = std::move(fr);
    e.designated_lambda = "e6=f1";
    e.note = "g = sa(2,R) x R, k = R^2";
    return e;
  }

  if (id == "su2") {
    e.algebra = su2();
    e.note = "compact structure algebra; unit Gram inner product by default";
    return e;
  }

  if (id == "a43") {
    LieAlgebra g = make_algebra(4, e_names(4), {{2, 4, {{1, "1"}}}, {3, 4, {{3, "1"}}}});
    e.pair = make_pair("a43", std::move(g), {1}, {2, 3, 4},
        {rational_matrix(3, 3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})},
        "(3,0)", "solvable A_{4,3}; central k acting trivially, reductive complement");
    e.metric = make_metric({{"a", "0", "0"}, {"0", "a", "0"}, {"0", "0", "a"}},
                           {"a"}, "a^3", "(3,0)", ParameterAssignment{{"a", Rational(1)}});
    e.designated_lambda = "e1=f1";
    e.note = "reductive counterexample pair for the canonical-connection criterion";
    return e;
  }

  if (id == "s2_sym") {
    LieAlgebra g = make_algebra(3, e_names(3),
        {{1, 2, {{3, "1"}}}, {2, 3, {{1, "1"}}}, {1, 3, {{2, "-1"}}}});
    e.pair = make_pair("s2_sym", std::move(g), {3}, {1, 2},
        {rational_matrix(2, 2, {{0, -1}, {1, 0}})},
        "(2,0)", "so(3)/so(2) Riemannian symmetric test pair");
    e.metric = make_metric({{"a", "0"}, {"0", "a"}}, {"a"}, "a^2", "(2,0)",
                           ParameterAssignment{{"a", Rational(1)}});
    e.designated_lambda = "e3=f1";
    e.note = "symmetric space regression pair";
    return e;
  }

  if (id == "sl2r_sym") {
    LieAlgebra g = make_algebra(3, e_names(3),
        {{1, 2, {{2, "2"}}}, {1, 3, {{3, "-2"}}}, {2, 3, {{1, "1"}}}});
    e.pair = make_pair("sl2r_sym", std::move(g), {1}, {2, 3},
        {rational_matrix(2, 2, {{2, 0}, {0, -2}})},
        "(1,1)", "sl(2,R)/so(1,1)-type split-signature symmetric test pair");
    e.metric = make_metric({{"0", "a"}, {"a", "0"}}, {"a"}, "-a^2", "(1,1)",
                           ParameterAssignment{{"a", Rational(1)}});
    e.designated_lambda = "e1=f1";
    e.note = "pseudo-Riemannian symmetric space regression pair";
    return e;
  }

  throw error("unknown catalog id: " + id);
}

BundleHomomorphism designated_homomorphism(const CatalogEntry& entry) {
  if (entry.designated_lambda.empty() || !entry.pair)
    throw error("catalog entry '" + entry.id + "' has no designated homomorphism");
  auto h = su2();
  Matrix lambda(h->dim(), entry.pair->kdim());
  // All designated homomorphisms send one k generator to f1.
  std::string spec = entry.designated_lambda;  // "eK=f1"
  size_t eq = spec.find('=');
  int gidx = std::stoi(spec.substr(1, eq - 1)) - 1;
  for (int t = 0; t < entry.pair->kdim(); ++t)
    if (entry.pair->k_indices[static_cast<size_t>(t)] == gidx) lambda.at(0, t) = Scalar(1);
  return make_homomorphism(*entry.pair, h, lambda);
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

void emit_brackets(std::ostream& os, const LieAlgebra& L, const std::string& key) {
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j) {
      std::vector<std::pair<int, std::string>> targets;
      for (int k = 0; k < L.dim(); ++k)
        if (!L.structure(i, j, k).is_zero())
          targets.push_back({k + 1, L.structure(i, j, k).str()});
      if (targets.empty()) continue;
      os << key << ": " << (i + 1) << " " << (j + 1) << " ->";
      for (auto& [k, text] : targets) os << " " << k << ":" << text;
      os << "\n";
    }
}

void emit_matrix(std::ostream& os, const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    os << "row:";
    for (int j = 0; j < m.cols(); ++j) os << " " << m.at(i, j).str();
    os << "\n";
  }
}

}  // namespace

std::string serialize_catalog_entry(const CatalogEntry& entry) {
  std::ostringstream os;
  const LieAlgebra& L = entry.lie_algebra();
  os << "catalog: " << entry.id << "\n";
  if (entry.alpha) os << "alpha: " << rstr(*entry.alpha) << "\n";
  if (entry.epsilon) os << "epsilon: " << *entry.epsilon << "\n";
  os << "dimension: " << L.dim() << "\n";
  os << "basis:";
  for (auto& n : L.basis_names()) os << " " << n;
  os << "\n";
  emit_brackets(os, L, "bracket");
  if (entry.pair) {
    os << "k:";
    for (int i : entry.pair->k_indices) os << " " << (i + 1);
    os << "\n";
    os << "s:";
    for (int i : entry.pair->s_indices) os << " " << (i + 1);
    os << "\n";
    for (int t = 0; t < entry.pair->kdim(); ++t) {
      os << "rho_s " << L.basis_names()[static_cast<size_t>(entry.pair->k_indices[static_cast<size_t>(t)])] << ":\n";
      emit_matrix(os, entry.pair->rho_s[static_cast<size_t>(t)]);
    }
  }
  if (entry.metric) {
    os << "metric:\n";
    emit_matrix(os, entry.metric->pattern);
    os << "det: " << entry.metric->det_text << "\n";
    os << "signature: " << entry.metric->signature_note << "\n";
  }
  if (entry.fr) {
    os << "fr_basis:";
    const Matrix& T = entry.fr->adapted_in_fr;
    for (int j = 0; j < T.cols(); ++j) {
      os << (j ? " | " : " ");
      bool first = true;
      for (int i = 0; i < T.rows(); ++i) {
        if (T.at(i, j).is_zero()) continue;
        Scalar c = T.at(i, j);
        std::string v = "v" + std::to_string(i + 1);
        if (c == Scalar(1)) os << (first ? "" : "+") << v;
        else if (c == Scalar(-1)) os << "-" << v;
        else os << (first ? "" : "+") << c.str() << "*" << v;
        first = false;
      }
    }
    os << "\n";
    emit_brackets(os, entry.fr->fr_algebra, "fr_bracket");
  }
  if (!entry.designated_lambda.empty()) os << "designated_lambda: " << entry.designated_lambda << "\n";
  if (!entry.note.empty()) os << "note: " << entry.note << "\n";
  return os.str();
}

CatalogEntry parse_catalog_entry(const std::string& text) {
  // Reads the document, reconstructs the entry through catalog_load (the
  // catalog is the source of truth), then verifies the document matches.
  std::istringstream is(text);
  std::string line, id;
  Rational alpha(0);
  int epsilon = 1;
  while (std::getline(is, line)) {
    if (line.rfind("catalog: ", 0) == 0) id = line.substr(9);
    if (line.rfind("alpha: ", 0) == 0) alpha = Rational(line.substr(7));
    if (line.rfind("epsilon: ", 0) == 0) epsilon = std::stoi(line.substr(9));
  }
  if (id.empty()) throw error("catalog document missing 'catalog:' header");
  CatalogEntry entry = catalog_load(id, alpha, epsilon);
  if (serialize_catalog_entry(entry) != text)
    throw error("catalog document for '" + id + "' does not match the built-in data");
  return entry;
}

}  // namespace ymh
