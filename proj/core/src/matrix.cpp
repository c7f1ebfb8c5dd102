#include "ymh/matrix.hpp"

#include <cassert>
#include <sstream>

namespace ymh {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (rows[static_cast<size_t>(i)].size() != static_cast<size_t>(m.cols())) throw error("ragged rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw error("matrix product dimension mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += at(i, k) * o.at(k, j);
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix sum dimension mismatch");
  Matrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) += o.at(i, j);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix sum dimension mismatch");
  Matrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) -= o.at(i, j);
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != o.at(i, j)) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

std::vector<Scalar> Matrix::col(int j) const {
  std::vector<Scalar> v(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = at(i, j);
  return v;
}

std::vector<Scalar> Matrix::row(int i) const {
  std::vector<Scalar> v(static_cast<size_t>(cols_));
  for (int j = 0; j < cols_; ++j) v[static_cast<size_t>(j)] = at(i, j);
  return v;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    os << "\n";
  }
  return os.str();
}

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v) {
  if (v.size() != static_cast<size_t>(m.cols())) throw error("mat_vec dimension mismatch");
  std::vector<Scalar> r(static_cast<size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() && !v[static_cast<size_t>(j)].is_zero()) r[static_cast<size_t>(i)] += m.at(i, j) * v[static_cast<size_t>(j)];
  return r;
}

RrefResult rref(Matrix m) {
  RrefResult res;
  int r = 0;
  for (int j = 0; j < m.cols() && r < m.rows(); ++j) {
    // Prefer a constant pivot; parameters are nonzero transcendentals, so any
    // nonzero entry will do, but constants keep denominators small.
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m.at(i, j).is_zero()) continue;
      if (pivot < 0) pivot = i;
      if (m.at(i, j).is_constant()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int k = 0; k < m.cols(); ++k) std::swap(m.at(pivot, k), m.at(r, k));
    Scalar inv = m.at(r, j).inverse();
    for (int k = j; k < m.cols(); ++k) m.at(r, k) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, j).is_zero()) continue;
      Scalar f = m.at(i, j);
      for (int k = j; k < m.cols(); ++k) m.at(i, k) -= f * m.at(r, k);
    }
    res.pivot_cols.push_back(j);
    ++r;
  }
  res.rank = r;
  res.reduced = std::move(m);
  return res;
}

int rank_of(const Matrix& m) { return rref(m).rank; }

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int p : rr.pivot_cols) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[static_cast<size_t>(j)]) continue;
    std::vector<Scalar> v(static_cast<size_t>(m.cols()));
    v[static_cast<size_t>(j)] = Scalar(1);
    for (int pi = 0; pi < rr.rank; ++pi)
      v[static_cast<size_t>(rr.pivot_cols[static_cast<size_t>(pi)])] = -rr.reduced.at(pi, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Scalar> AffineSpace::point(const std::vector<Scalar>& coords) const {
  if (coords.size() != directions.size()) throw error("affine point coordinate count mismatch");
  std::vector<Scalar> p = particular;
  for (size_t k = 0; k < directions.size(); ++k)
    for (size_t i = 0; i < p.size(); ++i) p[i] += coords[k] * directions[k][i];
  return p;
}

AffineSolve solve_affine(const Matrix& A, const std::vector<Scalar>& b) {
  if (b.size() != static_cast<size_t>(A.rows())) throw error("solve_affine dimension mismatch");
  Matrix aug(A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[static_cast<size_t>(i)];
  }
  RrefResult rr = rref(std::move(aug));
  AffineSolve out;
  for (int p : rr.pivot_cols)
    if (p == A.cols()) return out;  // rank([A|b]) > rank(A)
  out.feasible = true;
  out.space.ambient = A.cols();
  out.space.particular.assign(static_cast<size_t>(A.cols()), Scalar(0));
  for (int pi = 0; pi < rr.rank; ++pi)
    out.space.particular[static_cast<size_t>(rr.pivot_cols[static_cast<size_t>(pi)])] = rr.reduced.at(pi, A.cols());
  std::vector<bool> is_pivot(static_cast<size_t>(A.cols()), false);
  for (int p : rr.pivot_cols) is_pivot[static_cast<size_t>(p)] = true;
  for (int j = 0; j < A.cols(); ++j) {
    if (is_pivot[static_cast<size_t>(j)]) continue;
    std::vector<Scalar> v(static_cast<size_t>(A.cols()));
    v[static_cast<size_t>(j)] = Scalar(1);
    for (int pi = 0; pi < rr.rank; ++pi)
      v[static_cast<size_t>(rr.pivot_cols[static_cast<size_t>(pi)])] = -rr.reduced.at(pi, j);
    out.space.directions.push_back(std::move(v));
  }
  return out;
}

namespace {

bool all_constant(const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_constant()) return false;
  return true;
}

// Fraction-free Bareiss on the integer matrix obtained by clearing row
// denominators; the cleared factors divide back out at the end.
Scalar bareiss_det(const Matrix& m) {
  int n = m.rows();
  std::vector<std::vector<Integer>> a(static_cast<size_t>(n), std::vector<Integer>(static_cast<size_t>(n)));
  Rational scale(1);
  for (int i = 0; i < n; ++i) {
    Integer lcm = 1;
    for (int j = 0; j < n; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              m.at(i, j).rational_value().get_den().get_mpz_t());
    scale /= Rational(lcm);
    for (int j = 0; j < n; ++j) {
      Rational v = m.at(i, j).rational_value() * Rational(lcm);
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = v.get_num();
    }
  }
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Scalar(0);
      std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(swap_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Integer t = a[static_cast<size_t>(i)][static_cast<size_t>(j)] * a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                    a[static_cast<size_t>(i)][static_cast<size_t>(k)] * a[static_cast<size_t>(k)][static_cast<size_t>(j)];
        mpz_divexact(a[static_cast<size_t>(i)][static_cast<size_t>(j)].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  Rational det = Rational(a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)]) * scale * sign;
  return Scalar(det);
}

Scalar cofactor_det(const Matrix& m) {
  int n = m.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return m.at(0, 0);
  Scalar acc(0);
  // Expand along the sparsest row.
  int row = 0, best = n + 1;
  for (int i = 0; i < n; ++i) {
    int nz = 0;
    for (int j = 0; j < n; ++j)
      if (!m.at(i, j).is_zero()) ++nz;
    if (nz < best) {
      best = nz;
      row = i;
    }
  }
  for (int j = 0; j < n; ++j) {
    if (m.at(row, j).is_zero()) continue;
    Matrix sub(n - 1, n - 1);
    for (int i2 = 0, si = 0; i2 < n; ++i2) {
      if (i2 == row) continue;
      for (int j2 = 0, sj = 0; j2 < n; ++j2) {
        if (j2 == j) continue;
        sub.at(si, sj) = m.at(i2, j2);
        ++sj;
      }
      ++si;
    }
    Scalar term = m.at(row, j) * cofactor_det(sub);
    if ((row + j) % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

}  // namespace

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw error("determinant of a non-square matrix");
  if (all_constant(m)) return m.rows() ? bareiss_det(m) : Scalar(1);
  return cofactor_det(m);
}

SymmetricInverse invert_symmetric(const Matrix& m) {
  if (!m.is_symmetric()) throw error("invert_symmetric: matrix is not symmetric");
  int n = m.rows();
  Scalar det = determinant(m);
  if (det.is_zero()) throw error("invert_symmetric: singular matrix");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix sub(n - 1, n - 1);
      for (int i2 = 0, si = 0; i2 < n; ++i2) {
        if (i2 == j) continue;
        for (int j2 = 0, sj = 0; j2 < n; ++j2) {
          if (j2 == i) continue;
          sub.at(si, sj) = m.at(i2, j2);
          ++sj;
        }
        ++si;
      }
      Scalar c = cofactor_det(sub) / det;
      inv.at(i, j) = ((i + j) % 2) ? -c : c;
    }
  assert((m * inv) == Matrix::identity(n));
  return {inv, det};
}

std::pair<int, int> signature(const Matrix& m_in) {
  if (!m_in.is_symmetric()) throw error("signature: matrix is not symmetric");
  int n = m_in.rows();
  std::vector<std::vector<Rational>> m(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!m_in.at(i, j).is_constant())
        throw error("signature requires rational entries");
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = m_in.at(i, j).rational_value();
    }
  int pos = 0, neg = 0;
  for (int k = 0; k < n; ++k) {
    if (m[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
      // Bring a nonzero onto the diagonal by a congruence move.
      int d = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[static_cast<size_t>(i)][static_cast<size_t>(i)] != 0) {
          d = i;
          break;
        }
      if (d >= 0) {
        std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(d)]);
        for (int i = 0; i < n; ++i) std::swap(m[static_cast<size_t>(i)][static_cast<size_t>(k)], m[static_cast<size_t>(i)][static_cast<size_t>(d)]);
      } else {
        int j = -1;
        for (int i = k + 1; i < n; ++i)
          if (m[static_cast<size_t>(k)][static_cast<size_t>(i)] != 0) {
            j = i;
            break;
          }
        if (j < 0) throw error("signature: degenerate matrix");
        // b_k += b_j makes the (k,k) entry 2 m[k][j] != 0.
        for (int i = 0; i < n; ++i) m[static_cast<size_t>(k)][static_cast<size_t>(i)] += m[static_cast<size_t>(j)][static_cast<size_t>(i)];
        for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(k)] += m[static_cast<size_t>(i)][static_cast<size_t>(j)];
      }
    }
    Rational piv = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    if (piv > 0) ++pos;
    else ++neg;
    for (int i = k + 1; i < n; ++i) {
      if (m[static_cast<size_t>(i)][static_cast<size_t>(k)] == 0) continue;
      Rational f = m[static_cast<size_t>(i)][static_cast<size_t>(k)] / piv;
      for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(k)][static_cast<size_t>(j)];
      for (int j = 0; j < n; ++j) m[static_cast<size_t>(j)][static_cast<size_t>(i)] -= f * m[static_cast<size_t>(j)][static_cast<size_t>(k)];
    }
  }
  return {pos, neg};
}

}  // namespace ymh
