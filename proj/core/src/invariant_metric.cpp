#include "ymh/invariant_metric.hpp"

namespace ymh {

Matrix symmetric_from_coords(int n, const std::vector<Scalar>& coords) {
  if (coords.size() != static_cast<size_t>(n * (n + 1) / 2)) throw error("symmetric coordinate count mismatch");
  Matrix m(n, n);
  size_t t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      m.at(i, j) = coords[t];
      m.at(j, i) = coords[t];
      ++t;
    }
  return m;
}

std::vector<Scalar> coords_from_symmetric(const Matrix& m) {
  int n = m.rows();
  std::vector<Scalar> coords;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) coords.push_back(m.at(i, j));
  return coords;
}

AffineSpace invariant_metric_family(const HomogeneousPair& pair) {
  int n = pair.sdim();
  int unknowns = n * (n + 1) / 2;
  std::vector<std::vector<Scalar>> rows;
  for (const Matrix& rho : pair.rho_s) {
    // (rho^T mu + mu rho)_{ij} = sum_k rho(k,i) mu(k,j) + mu(i,k) rho(k,j)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        std::vector<Scalar> row(static_cast<size_t>(unknowns));
        auto coord = [&](int p, int q) {
          if (p > q) std::swap(p, q);
          return p * n - p * (p - 1) / 2 + (q - p);
        };
        for (int k = 0; k < n; ++k) {
          if (!rho.at(k, i).is_zero()) row[static_cast<size_t>(coord(k, j))] += rho.at(k, i);
          if (!rho.at(k, j).is_zero()) row[static_cast<size_t>(coord(i, k))] += rho.at(k, j);
        }
        rows.push_back(std::move(row));
      }
  }
  Matrix A = rows.empty() ? Matrix(0, unknowns) : Matrix::from_rows(rows);
  if (A.rows() == 0) {
    AffineSpace full;
    full.ambient = unknowns;
    full.particular.assign(static_cast<size_t>(unknowns), Scalar(0));
    for (int j = 0; j < unknowns; ++j) {
      std::vector<Scalar> d(static_cast<size_t>(unknowns));
      d[static_cast<size_t>(j)] = Scalar(1);
      full.directions.push_back(std::move(d));
    }
    return full;
  }
  auto sol = solve_affine(A, std::vector<Scalar>(static_cast<size_t>(A.rows())));
  return sol.space;  // homogeneous system, always feasible
}

bool is_invariant_metric(const HomogeneousPair& pair, const Matrix& mu) {
  for (const Matrix& rho : pair.rho_s)
    if (!(rho.transpose() * mu + mu * rho).is_zero()) return false;
  return true;
}

namespace {

// |det| is an exact square when every parameter exponent is even and the
// absolute coefficient is a rational square; positive parameters assumed.
std::optional<Scalar> monomial_sqrt_of_abs(const Scalar& det) {
  if (det.is_zero()) return std::nullopt;
  if (!(det.den() == Polynomial(Rational(1)))) return std::nullopt;
  if (det.num().terms().size() != 1) return std::nullopt;
  const Term& t = det.num().terms()[0];
  Rational c = t.coeff;
  if (c < 0) c = -c;
  Integer num_root, den_root;
  if (mpz_perfect_square_p(c.get_num().get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(c.get_den().get_mpz_t()) == 0) return std::nullopt;
  mpz_sqrt(num_root.get_mpz_t(), c.get_num().get_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), c.get_den().get_mpz_t());
  Scalar root{Rational(num_root, den_root)};
  for (auto& [id, e] : t.mono.factors()) {
    if (e % 2) return std::nullopt;
    root = root * Scalar::parameter(ParameterTable::instance().name_of(id)).pow(e / 2);
  }
  return root;
}

}  // namespace

MetricOnS metric_instance(std::shared_ptr<const HomogeneousPair> pair, const Matrix& mu,
                          const ParameterAssignment& witness,
                          std::optional<Scalar> sqrt_abs_det) {
  MetricOnS m;
  m.pair = std::move(pair);
  m.mu = mu;
  auto inv = invert_symmetric(mu);
  m.mu_inv = std::move(inv.inverse);
  m.det = std::move(inv.det);
  m.witness = witness;
  // Signature at the witness fixes the parity.
  int n = mu.rows();
  Matrix at_witness(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar v = mu.at(i, j);
      at_witness.at(i, j) = v.is_constant() ? v : Scalar(v.evaluate(witness));
    }
  if (m.det.evaluate(witness) == 0) throw error("metric degenerate at the witness");
  m.parity = signature(at_witness).second;
  m.sqrt_abs_det = sqrt_abs_det ? sqrt_abs_det : monomial_sqrt_of_abs(m.det);
  if (m.sqrt_abs_det) {
    // The star formula needs the positive root: sqrt^2 == |det| and sqrt > 0
    // at the witness (the parameter-sign constraint this encodes is checked,
    // not assumed).
    Rational s = m.sqrt_abs_det->evaluate(witness);
    Rational d = m.det.evaluate(witness);
    if (d < 0) d = -d;
    if (s * s != d) throw error("sqrt_abs_det inconsistent with |det| at the witness");
    if (s <= 0) throw error("sqrt_abs_det must be positive at the witness");
  }
  return m;
}

MetricOnS pattern_metric(const CatalogEntry& entry) {
  if (!entry.metric || !entry.pair) throw error("catalog entry has no metric pattern");
  return metric_instance(entry.pair, entry.metric->pattern, entry.metric->default_witness);
}

MetricOnS pattern_metric_at(const CatalogEntry& entry, const ParameterAssignment& witness) {
  if (!entry.metric || !entry.pair) throw error("catalog entry has no metric pattern");
  int n = entry.metric->pattern.rows();
  Matrix mu(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mu.at(i, j) = Scalar(entry.metric->pattern.at(i, j).evaluate(witness));
  return metric_instance(entry.pair, mu, witness);
}

}  // namespace ymh
