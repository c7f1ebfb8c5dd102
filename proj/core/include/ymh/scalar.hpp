#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ymh {

using Integer = mpz_class;
using Rational = mpq_class;

/// Error type for all domain failures (division by zero, singular matrices,
/// missing parameters, ...).
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Global table of parameter names.  Grlex monomial comparisons use the
/// registration order as the variable order, so the table is append-only and
/// seeded with the standing parameters (metric parameters a..d, chart
/// coordinates x1..x4).  Registration is serialized so scalars can be built
/// and used concurrently.
class ParameterTable {
public:
  static ParameterTable& instance();

  int id_of(const std::string& name);            // registers if missing
  std::optional<int> lookup(const std::string& name) const;
  std::string name_of(int id) const;
  int size() const;

private:
  ParameterTable();
  mutable std::mutex mutex_;
  std::vector<std::string> names_;
  std::map<std::string, int> ids_;
};

/// A power product of parameters, kept sorted by variable id.
class Monomial {
public:
  Monomial() = default;
  static Monomial variable(int id, int exp = 1);

  bool empty() const { return factors_.empty(); }
  int total_degree() const;
  int degree_in(int id) const;
  const std::vector<std::pair<int, int>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& o) const;
  /// Componentwise min of exponents (gcd of power products).
  static Monomial gcd(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires divisibility.
  Monomial divide_by(const Monomial& d) const;

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
  /// Graded lexicographic order; earlier-registered variables are "larger".
  static int compare(const Monomial& a, const Monomial& b);

private:
  std::vector<std::pair<int, int>> factors_;  // (id, exp), exp > 0
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q, terms in descending grlex order.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(const Rational& c);
  static Polynomial variable(int id);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::vector<Term>& terms() const { return terms_; }
  int total_degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  bool operator==(const Polynomial& o) const { return equals(o); }

  /// gcd of the numerators over lcm of the denominators, signed by the
  /// leading coefficient; 0 for the zero polynomial.
  Rational content_signed() const;
  Monomial monomial_content() const;
  Polynomial divide_by_monomial(const Monomial& m) const;

  Rational evaluate(const std::vector<Rational>& values_by_id) const;
  Polynomial derivative(int id) const;
  void collect_parameters(std::set<int>& out) const;

  /// Exact quotient p / d when d divides p, nullopt otherwise (leading-term
  /// reduction; no gcd computation involved).
  static std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d);

  std::string str() const;

private:
  bool equals(const Polynomial& o) const;
  void normalize();  // sort + merge + drop zeros
  std::vector<Term> terms_;
  friend Polynomial add_impl(const Polynomial&, const Polynomial&, bool);
};

/// Assignment of rational values to named parameters.
struct ParameterAssignment {
  std::map<std::string, Rational> values;

  ParameterAssignment() = default;
  ParameterAssignment(std::initializer_list<std::pair<const std::string, Rational>> init)
      : values(init) {}
  ParameterAssignment& set(const std::string& name, const Rational& v) {
    values[name] = v;
    return *this;
  }
};

/// Element of Q or of the rational-function field Q(p1..pm).
///
/// Canonical form: the denominator is content-normalized (coprime integer
/// coefficients, positive leading coefficient under grlex) and shares no
/// monomial-wise content with the numerator.  Fractions are *not* reduced by
/// polynomial gcd; zero testing is numerator identity.
class Scalar {
public:
  Scalar() : num_(), den_(Rational(1)) {}
  Scalar(long v) : num_(Rational(v)), den_(Rational(1)) {}
  Scalar(const Rational& v) : num_(v), den_(Rational(1)) {}
  Scalar(const Polynomial& num, const Polynomial& den);
  static Scalar parameter(const std::string& name);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const;
  /// Exact rational value; throws unless is_constant().
  Rational rational_value() const;

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on zero divisor
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  /// Equality in the field (cross-multiplied numerator identity).
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;
  Scalar pow(int e) const;

  std::set<std::string> parameters() const;
  /// Exact evaluation; every parameter must be assigned and no denominator
  /// may vanish.
  Rational evaluate(const ParameterAssignment& w) const;
  /// Partial evaluation of the assigned parameters only.
  Scalar substitute(const ParameterAssignment& w) const;
  Scalar derivative(const std::string& name) const;

  std::string str() const;

private:
  void normalize();
  Polynomial num_, den_;
};

/// Parses the textual scalar syntax: integer/fraction literals, parameter
/// names, `+ - * / ^ ( )`, e.g. `-3/a`, `a^3*(a+2*d)`.
Scalar parse_scalar(const std::string& text);

inline Scalar operator*(long c, const Scalar& s) { return Scalar(c) * s; }

std::string rational_str(const Rational& q);

}  // namespace ymh
