#pragma once

#include "ymh/catalog.hpp"
#include "ymh/connection.hpp"
#include "ymh/forms.hpp"
#include "ymh/invariant_metric.hpp"

#include <random>

// Test-local helpers, including the independent rational-elimination oracle
// used to freeze derived ranks and dimensions.

namespace testsupport {

using ymh::Rational;
using ymh::Scalar;

// Plain Gaussian elimination over mpq, written independently of the library
// rref; returns the rank.
inline int oracle_rank(std::vector<std::vector<Rational>> m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  int rank = 0;
  for (size_t c = 0; c < cols && static_cast<size_t>(rank) < rows; ++c) {
    size_t piv = rows;
    for (size_t r = static_cast<size_t>(rank); r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[static_cast<size_t>(rank)], m[piv]);
    Rational p = m[static_cast<size_t>(rank)][c];
    for (size_t r = 0; r < rows; ++r) {
      if (r == static_cast<size_t>(rank) || m[r][c] == 0) continue;
      Rational f = m[r][c] / p;
      for (size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[static_cast<size_t>(rank)][cc];
    }
    ++rank;
  }
  return rank;
}

inline Rational random_rational(std::mt19937& rng, int num_range = 9, int den_range = 9) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero_rational(std::mt19937& rng) {
  for (;;) {
    Rational q = random_rational(rng);
    if (q != 0) return q;
  }
}

// Random polynomial scalar in the given parameters, degree <= max_degree.
inline Scalar random_scalar(std::mt19937& rng, const std::vector<std::string>& params,
                            int max_degree = 3, int terms = 4) {
  Scalar acc(0);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(params.size()) - 1);
  for (int t = 0; t < terms; ++t) {
    Scalar term(random_rational(rng));
    int d = deg(rng);
    for (int i = 0; i < d; ++i) term = term * Scalar::parameter(params[static_cast<size_t>(pick(rng))]);
    acc = acc + term;
  }
  return acc;
}

inline Scalar random_nonzero_scalar(std::mt19937& rng, const std::vector<std::string>& params,
                                    int max_degree = 3) {
  for (;;) {
    Scalar s = random_scalar(rng, params, max_degree);
    if (!s.is_zero()) return s;
  }
}

// Random fraction of polynomials.
inline Scalar random_fraction(std::mt19937& rng, const std::vector<std::string>& params,
                              int max_degree = 3) {
  return random_scalar(rng, params, max_degree) / random_nonzero_scalar(rng, params, 2);
}

// Random point of a Wang solution space with rational coordinates.
inline ymh::WangMap random_wang_point(const ymh::WangSolutionSpace& sol, std::mt19937& rng) {
  std::vector<Scalar> coords;
  for (int i = 0; i < sol.dim(); ++i) coords.push_back(Scalar(random_rational(rng)));
  return wang_point(sol, coords);
}

// Random symmetric rational matrix with |det| a nonzero rational square:
// S^T D S with D diagonal carrying square entries of the requested signs.
inline ymh::Matrix random_square_det_metric(std::mt19937& rng, int n, int negatives) {
  using ymh::Matrix;
  for (;;) {
    Matrix D(n, n);
    for (int i = 0; i < n; ++i) {
      Rational q = random_nonzero_rational(rng);
      Rational sq = q * q;
      D.at(i, i) = Scalar(i < negatives ? Rational(-sq) : sq);
    }
    Matrix S = Matrix::identity(n);
    std::uniform_int_distribution<int> small(-2, 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) S.at(i, j) = Scalar(Rational(small(rng)));
    Matrix m = S.transpose() * D * S;
    Scalar det = determinant(m);
    if (det.is_zero()) continue;
    Rational d = det.rational_value();
    if (d < 0) d = -d;
    ymh::Integer num_root, den_root;
    if (mpz_perfect_square_p(d.get_num().get_mpz_t()) &&
        mpz_perfect_square_p(d.get_den().get_mpz_t()))
      return m;
  }
}

inline ymh::MetricOnS witness_metric(std::shared_ptr<const ymh::HomogeneousPair> pair,
                                     const ymh::Matrix& mu) {
  Rational d = determinant(mu).rational_value();
  if (d < 0) d = -d;
  ymh::Integer num_root, den_root;
  mpz_sqrt(num_root.get_mpz_t(), d.get_num().get_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), d.get_den().get_mpz_t());
  return metric_instance(std::move(pair), mu, ymh::ParameterAssignment{},
                         Scalar(Rational(num_root, den_root)));
}

// All eight classified pair ids.
inline std::vector<std::string> fr_ids() {
  return {"A1", "A2", "A3", "A4", "A5", "B1", "B2", "B3"};
}

}  // namespace testsupport
