#include "ymh/gauge.hpp"

#include "ymh/catalog.hpp"

#include <sstream>

namespace ymh {

bool CoordinateForm::is_zero() const {
  for (auto& c : comps)
    if (!c.is_zero()) return false;
  return true;
}

bool HValuedCoordinateForm::is_zero() const {
  for (auto& v : comps)
    for (auto& c : v)
      if (!c.is_zero()) return false;
  return true;
}

namespace {

Scalar X(int i) { return Scalar::parameter("x" + std::to_string(i)); }

Matrix general_inverse(const Matrix& m) {
  int n = m.rows();
  Matrix inv(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<Scalar> e(static_cast<size_t>(n));
    e[static_cast<size_t>(j)] = Scalar(1);
    auto sol = solve_affine(m, e);
    if (!sol.feasible || sol.space.dim() != 0) throw error("singular section matrix");
    for (int i = 0; i < n; ++i) inv.at(i, j) = sol.space.particular[static_cast<size_t>(i)];
  }
  return inv;
}

Matrix entrywise_derivative(const Matrix& m, const std::string& var) {
  Matrix d(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) d.at(i, j) = m.at(i, j).derivative(var);
  return d;
}

}  // namespace

MatrixGroupModel b3_model() {
  MatrixGroupModel model;
  model.coords = {"x1", "x2", "x3", "x4"};
  model.chart_note = "x2 != 0";
  Matrix s(4, 4);
  s.at(0, 0) = Scalar(1) / X(2);
  s.at(0, 1) = X(1);
  s.at(0, 2) = X(3);
  s.at(1, 1) = X(2);
  s.at(1, 2) = X(4);
  s.at(2, 2) = Scalar(1);
  s.at(3, 3) = Scalar(1);
  model.section = std::move(s);
  model.realization = catalog_load("B3").fr->fr_algebra.realization();
  return model;
}

MatrixCoordinateForm maurer_cartan_pullback(const MatrixGroupModel& model) {
  Matrix inv = general_inverse(model.section);
  MatrixCoordinateForm out;
  for (const auto& coord : model.coords)
    out.comps.push_back(inv * entrywise_derivative(model.section, coord));
  return out;
}

bool structure_equation_holds(const MatrixCoordinateForm& omega,
                              const std::vector<std::string>& coords) {
  int m = static_cast<int>(omega.comps.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Matrix lhs = entrywise_derivative(omega.comps[static_cast<size_t>(j)], coords[static_cast<size_t>(i)]) -
                   entrywise_derivative(omega.comps[static_cast<size_t>(i)], coords[static_cast<size_t>(j)]) +
                   omega.comps[static_cast<size_t>(i)] * omega.comps[static_cast<size_t>(j)] -
                   omega.comps[static_cast<size_t>(j)] * omega.comps[static_cast<size_t>(i)];
      if (!lhs.is_zero()) return false;
    }
  return true;
}

std::vector<CoordinateForm> decompose_in_basis(const MatrixCoordinateForm& omega,
                                               const std::vector<Matrix>& realization) {
  if (realization.empty()) throw error("empty realization");
  int p = realization[0].rows(), q = realization[0].cols();
  int gens = static_cast<int>(realization.size());
  Matrix A(p * q, gens);
  for (int g = 0; g < gens; ++g)
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j) A.at(i * q + j, g) = realization[static_cast<size_t>(g)].at(i, j);
  std::vector<CoordinateForm> coeffs(static_cast<size_t>(gens));
  for (auto& c : coeffs) c.comps.assign(omega.comps.size(), Scalar(0));
  for (size_t ci = 0; ci < omega.comps.size(); ++ci) {
    std::vector<Scalar> b(static_cast<size_t>(p) * q);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < q; ++j) b[static_cast<size_t>(i * q + j)] = omega.comps[ci].at(i, j);
    auto sol = solve_affine(A, b);
    if (!sol.feasible)
      throw error("matrix form leaves the span of the algebra realization");
    if (sol.space.dim() != 0)
      throw error("algebra realization matrices are linearly dependent");
    for (int g = 0; g < gens; ++g) coeffs[static_cast<size_t>(g)].comps[ci] = sol.space.particular[static_cast<size_t>(g)];
  }
  return coeffs;
}

HValuedCoordinateForm gauge_potential(const Matrix& w_in_basis,
                                      const std::vector<CoordinateForm>& coefficients) {
  if (coefficients.size() != static_cast<size_t>(w_in_basis.cols()))
    throw error("generator count mismatch between Wang map and decomposition");
  HValuedCoordinateForm out;
  size_t ncoords = coefficients.empty() ? 0 : coefficients[0].comps.size();
  out.comps.assign(ncoords, std::vector<Scalar>(static_cast<size_t>(w_in_basis.rows())));
  for (size_t ci = 0; ci < ncoords; ++ci)
    for (int g = 0; g < w_in_basis.cols(); ++g) {
      const Scalar& coef = coefficients[static_cast<size_t>(g)].comps[ci];
      if (coef.is_zero()) continue;
      for (int a = 0; a < w_in_basis.rows(); ++a)
        if (!w_in_basis.at(a, g).is_zero())
          out.comps[ci][static_cast<size_t>(a)] += coef * w_in_basis.at(a, g);
    }
  return out;
}

Matrix wang_in_fr_basis(const WangMap& W, const CatalogEntry& entry) {
  if (!entry.fr) throw error("catalog entry has no Fels-Renner data");
  // e = v T, so v = e T^-1 and W(v_j) = sum_i Tinv(i,j) W(e_i).
  Matrix Tinv = general_inverse(entry.fr->adapted_in_fr);
  return W.w * Tinv;
}

HValuedCoordinateForm b3_gauge_potential(const std::vector<Scalar>& y) {
  CatalogEntry entry = catalog_load("B3");
  auto hom = designated_homomorphism(entry);
  auto sol = solve_wang(entry.pair, hom);
  // The family is W(e2) in ker ad_{lambda(e6)} = <f1>; pin the free
  // coordinate to match y and check membership.
  if (y.size() != static_cast<size_t>(hom.h->dim())) throw error("y has the wrong dimension");
  for (auto& c : hom.h->bracket(hom.lambda.col(1), y))
    if (!c.is_zero()) throw error("y must centralize the image of lambda_*");
  if (sol.dim() != 1) throw error("unexpected B3 Wang space dimension");
  // Free coordinate multiplies the single direction; identify it from the
  // W(e2) block.
  WangMap probe = wang_point(sol, {Scalar(1)});
  int e2 = entry.pair->s_indices[1];
  Scalar coord(0);
  for (int a = 0; a < hom.h->dim(); ++a)
    if (!probe.w.at(a, e2).is_zero()) {
      coord = y[static_cast<size_t>(a)] / probe.w.at(a, e2);
      break;
    }
  WangMap W = wang_point(sol, {coord});
  MatrixGroupModel model = b3_model();
  auto mc = maurer_cartan_pullback(model);
  auto coeffs = decompose_in_basis(mc, model.realization);
  return gauge_potential(wang_in_fr_basis(W, entry), coeffs);
}

std::vector<Matrix> a5_fixture_tangents() {
  // Tangents of the model section at the identity, as elements of the
  // combined gl(4) realization (sl(2,R) embedded in the middle block).
  auto embed_sl2 = [](const Scalar& a11, const Scalar& a12, const Scalar& a21,
                      const Scalar& a22) {
    Matrix m(4, 4);
    m.at(1, 1) = a11;
    m.at(1, 2) = a12;
    m.at(2, 1) = a21;
    m.at(2, 2) = a22;
    return m;
  };
  Scalar x1 = X(1), x2 = X(2), x3 = X(3), x4 = X(4);
  std::vector<Matrix> out;
  // g1'(0)
  out.push_back(embed_sl2(x4, x2, -(x4 * x4) / x2, -x4));
  // g2'(0)
  {
    Matrix m = embed_sl2(-(Scalar(1) + x1 * x4) / x2, -x1,
                         x4 * (Scalar(1) + x1 * x4) / (x2 * x2),
                         (Scalar(1) + x1 * x4) / x2);
    m.at(0, 1) += -(x3 * x4) / (x2 * x2);
    m.at(0, 2) += -x3 / x2;
    m.at(1, 3) += -x3 / x2;
    m.at(2, 3) += (x3 * x4) / (x2 * x2);
    out.push_back(std::move(m));
  }
  // g3'(0)
  {
    Matrix m(4, 4);
    m.at(0, 1) = -x4 / x2;
    m.at(0, 2) = Scalar(-1);
    m.at(1, 3) = Scalar(-1);
    m.at(2, 3) = x4 / x2;
    out.push_back(std::move(m));
  }
  // g4'(0)
  out.push_back(embed_sl2(Scalar(0), Scalar(0), Scalar(1) / x2, Scalar(0)));
  return out;
}

std::string serialize_a5_fixture(const std::vector<Matrix>& tangents) {
  std::ostringstream os;
  for (size_t t = 0; t < tangents.size(); ++t) {
    os << "tangent: " << (t + 1) << "\n";
    for (int i = 0; i < tangents[t].rows(); ++i) {
      os << "row:";
      for (int j = 0; j < tangents[t].cols(); ++j) os << " " << tangents[t].at(i, j).str();
      os << "\n";
    }
  }
  return os.str();
}

std::vector<Matrix> parse_a5_fixture(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<Matrix> out;
  std::vector<std::vector<Scalar>> rows;
  auto flush = [&]() {
    if (rows.empty()) return;
    out.push_back(Matrix::from_rows(rows));
    rows.clear();
  };
  while (std::getline(is, line)) {
    if (line.rfind("tangent:", 0) == 0) {
      flush();
      continue;
    }
    if (line.rfind("row:", 0) != 0) continue;
    std::istringstream ls(line.substr(4));
    std::vector<Scalar> row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_scalar(tok));
    rows.push_back(std::move(row));
  }
  flush();
  return out;
}

A5CheckResult a5_fixture_check() { return a5_fixture_check(a5_fixture_tangents()); }

A5CheckResult a5_fixture_check(const std::vector<Matrix>& tangents) {
  CatalogEntry entry = catalog_load("A5");
  auto hom = designated_homomorphism(entry);
  auto sol = solve_wang(entry.pair, hom);
  if (!sol.feasible || sol.dim() != 0) throw error("A5 Wang space is not a point");
  WangMap W = wang_point(sol, {});
  Matrix w_fr = wang_in_fr_basis(W, entry);

  MatrixCoordinateForm omega;
  omega.comps = tangents;
  A5CheckResult res;
  std::vector<CoordinateForm> coeffs;
  try {
    coeffs = decompose_in_basis(omega, entry.fr->fr_algebra.realization());
    res.in_span = true;
  } catch (const error&) {
    return res;
  }
  auto pot = gauge_potential(w_fr, coeffs);
  res.wang_values = pot.comps;
  res.wang_zero = pot.is_zero();
  return res;
}

bool a5_invariants_killed() {
  // Group parameters of the A5 model; u stands for exp(b7), so the b7
  // derivative acts as u d/du.
  Scalar b4 = Scalar::parameter("b4"), b5 = Scalar::parameter("b5"),
         b6 = Scalar::parameter("b6"), u = Scalar::parameter("u"),
         a11 = Scalar::parameter("a11"), a12 = Scalar::parameter("a12"),
         a21 = Scalar::parameter("a21"), a22 = Scalar::parameter("a22");
  (void)a11;
  Scalar inv1 = a12 * u;
  Scalar inv2 = a22 * u;
  Scalar inv3 = b5 * inv1 - b6 * inv2;
  Scalar inv4 = a21 / u + inv2 * b4 - Scalar(Rational(1, 2)) * inv3 * b5;
  std::vector<Scalar> invariants{inv1, inv2, inv3, inv4};

  auto d = [](const Scalar& f, const char* var) { return f.derivative(var); };
  auto apply = [&](const std::vector<std::pair<Scalar, const char*>>& field, const Scalar& f) {
    Scalar acc(0);
    for (auto& [coef, var] : field) acc += coef * d(f, var);
    return acc;
  };
  std::vector<std::vector<std::pair<Scalar, const char*>>> generators = {
      // w1: b7 shift with a_{i1} e^t, a_{i2} e^-t scaling
      {{u, "u"}, {a11, "a11"}, {-a12, "a12"}, {a21, "a21"}, {-a22, "a22"}},
      // w2
      {{-(Scalar(1) / (u * u)), "b4"}, {a12, "a11"}, {a22, "a21"}},
      // w3
      {{Scalar(Rational(1, 2)) * (b5 * a12 - b6 * a22) / u, "b4"},
       {a22 / u, "b5"},
       {a12 / u, "b6"}}};
  for (auto& gen : generators)
    for (auto& f : invariants)
      if (!apply(gen, f).is_zero()) return false;
  return true;
}

std::string coordinate_form_str(const CoordinateForm& f, const std::vector<std::string>& coords) {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < f.comps.size(); ++i) {
    if (f.comps[i].is_zero()) continue;
    std::string cs = f.comps[i].str();
    if (any) {
      if (!cs.empty() && cs[0] == '-') {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    }
    any = true;
    os << cs << "*d" << coords[i];
  }
  return any ? os.str() : "0";
}

std::string h_valued_form_str(const HValuedCoordinateForm& f,
                              const std::vector<std::string>& coords,
                              const std::vector<std::string>& h_names) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool any = false;
  for (size_t a = 0; a < h_names.size(); ++a) {
    CoordinateForm part;
    for (auto& v : f.comps) part.comps.push_back(v[a]);
    if (part.is_zero()) continue;
    if (any) os << " + ";
    any = true;
    os << "(" << coordinate_form_str(part, coords) << ") (x) " << h_names[a];
  }
  return os.str();
}

}  // namespace ymh
