#pragma once

#include "ymh/scalar.hpp"

#include <vector>

namespace ymh {

/// Dense matrix over Scalar, row-major.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;
  bool is_symmetric() const;

  std::vector<Scalar> col(int j) const;
  std::vector<Scalar> row(int i) const;

  std::string str() const;

private:
  int rows_, cols_;
  std::vector<Scalar> a_;
};

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v);

struct RrefResult {
  int rank = 0;
  std::vector<int> pivot_cols;
  Matrix reduced;
};

/// Reduced row-echelon form over the fraction field.  Pivot selection
/// prefers nonzero constant entries over parameter-dependent ones to avoid
/// needless symbolic divisions.
RrefResult rref(Matrix m);

int rank_of(const Matrix& m);

/// Nullspace basis (each vector of length cols).
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

/// Affine subspace: particular + span(directions).
struct AffineSpace {
  int ambient = 0;
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> directions;

  int dim() const { return static_cast<int>(directions.size()); }
  std::vector<Scalar> point(const std::vector<Scalar>& coords) const;
};

struct AffineSolve {
  bool feasible = false;
  AffineSpace space;
};

/// Exact solution set of A x = b; infeasibility is a value, not an error.
AffineSolve solve_affine(const Matrix& A, const std::vector<Scalar>& b);

/// Determinant: fraction-free Bareiss over Q, cofactor expansion for small
/// symbolic matrices.
Scalar determinant(const Matrix& m);

struct SymmetricInverse {
  Matrix inverse;
  Scalar det;
};

/// Adjugate-based inverse of a symmetric matrix; verifies m * m^-1 == I.
SymmetricInverse invert_symmetric(const Matrix& m);

/// Sylvester signature (positives, negatives) of a rational symmetric
/// nondegenerate matrix via exact congruence diagonalization.
std::pair<int, int> signature(const Matrix& m);

}  // namespace ymh
