#include "ymh/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ymh {

// ---------------------------------------------------------------------------
// ParameterTable

ParameterTable& ParameterTable::instance() {
  static ParameterTable table;
  return table;
}

ParameterTable::ParameterTable() {
  // Standing parameters; everything else registers on first use.
  for (const char* n : {"a", "b", "c", "d", "x1", "x2", "x3", "x4"}) {
    ids_[n] = static_cast<int>(names_.size());
    names_.push_back(n);
  }
}

int ParameterTable::id_of(const std::string& name) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  if (name.empty() || (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_'))
    throw error("invalid parameter name: '" + name + "'");
  int id = static_cast<int>(names_.size());
  ids_[name] = id;
  names_.push_back(name);
  return id;
}

std::optional<int> ParameterTable::lookup(const std::string& name) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::string ParameterTable::name_of(int id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (id < 0 || id >= static_cast<int>(names_.size()))
    throw error("parameter id out of range");
  return names_[static_cast<size_t>(id)];
}

int ParameterTable::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return static_cast<int>(names_.size());
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(int id, int exp) {
  Monomial m;
  if (exp > 0) m.factors_.push_back({id, exp});
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto& [id, e] : factors_) d += e;
  return d;
}

int Monomial::degree_in(int id) const {
  for (auto& [v, e] : factors_)
    if (v == id) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < factors_.size() || j < o.factors_.size()) {
    if (j == o.factors_.size() ||
        (i < factors_.size() && factors_[i].first < o.factors_[j].first)) {
      r.factors_.push_back(factors_[i++]);
    } else if (i == factors_.size() || o.factors_[j].first < factors_[i].first) {
      r.factors_.push_back(o.factors_[j++]);
    } else {
      r.factors_.push_back({factors_[i].first, factors_[i].second + o.factors_[j].second});
      ++i, ++j;
    }
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < a.factors_.size() && j < b.factors_.size()) {
    if (a.factors_[i].first < b.factors_[j].first) ++i;
    else if (b.factors_[j].first < a.factors_[i].first) ++j;
    else {
      r.factors_.push_back({a.factors_[i].first,
                            std::min(a.factors_[i].second, b.factors_[j].second)});
      ++i, ++j;
    }
  }
  return r;
}

Monomial Monomial::divide_by(const Monomial& d) const {
  Monomial r;
  size_t j = 0;
  for (auto& [id, e] : factors_) {
    int sub = 0;
    while (j < d.factors_.size() && d.factors_[j].first < id) ++j;
    if (j < d.factors_.size() && d.factors_[j].first == id) sub = d.factors_[j].second;
    if (sub > e) throw error("monomial division is not exact");
    if (e - sub > 0) r.factors_.push_back({id, e - sub});
  }
  return r;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  // Same degree: lexicographic with earlier-registered variables larger.
  size_t i = 0, j = 0;
  while (i < a.factors_.size() && j < b.factors_.size()) {
    if (a.factors_[i].first != b.factors_[j].first)
      return a.factors_[i].first < b.factors_[j].first ? 1 : -1;
    if (a.factors_[i].second != b.factors_[j].second)
      return a.factors_[i].second > b.factors_[j].second ? 1 : -1;
    ++i, ++j;
  }
  if (i < a.factors_.size()) return 1;
  if (j < b.factors_.size()) return -1;
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

Polynomial Polynomial::variable(int id) {
  Polynomial p;
  p.terms_.push_back({Monomial::variable(id), Rational(1)});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty());
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : terms_.front().mono.total_degree();
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) {
    return Monomial::compare(x.mono, y.mono) > 0;
  });
  std::vector<Term> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) out.back().coeff += t.coeff;
    else out.push_back(t);
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

Polynomial add_impl(const Polynomial& a, const Polynomial& b, bool negate_b) {
  Polynomial r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  r.terms_ = a.terms_;
  for (auto& t : b.terms_) r.terms_.push_back({t.mono, negate_b ? Rational(-t.coeff) : t.coeff});
  r.normalize();
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const { return add_impl(*this, o, false); }
Polynomial Polynomial::operator-(const Polynomial& o) const { return add_impl(*this, o, true); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (auto& s : terms_)
    for (auto& t : o.terms_) r.terms_.push_back({s.mono * t.mono, s.coeff * t.coeff});
  r.normalize();
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial();
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

bool Polynomial::equals(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Rational Polynomial::content_signed() const {
  if (terms_.empty()) return Rational(0);
  Integer num_gcd = 0, den_lcm = 1;
  for (auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  if (terms_.front().coeff < 0) c = -c;
  return c;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.front().mono;
  for (size_t i = 1; i < terms_.size() && !g.empty(); ++i)
    g = Monomial::gcd(g, terms_[i].mono);
  return g;
}

Polynomial Polynomial::divide_by_monomial(const Monomial& m) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.mono = t.mono.divide_by(m);
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& values_by_id) const {
  Rational acc(0);
  for (auto& t : terms_) {
    Rational v = t.coeff;
    for (auto& [id, e] : t.mono.factors()) {
      if (id >= static_cast<int>(values_by_id.size()))
        throw error("parameter value missing during evaluation");
      Rational base = values_by_id[static_cast<size_t>(id)];
      for (int k = 0; k < e; ++k) v *= base;
    }
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::derivative(int id) const {
  Polynomial r;
  for (auto& t : terms_) {
    int e = t.mono.degree_in(id);
    if (e == 0) continue;
    Monomial m = t.mono.divide_by(Monomial::variable(id));
    r.terms_.push_back({m, t.coeff * e});
  }
  r.normalize();
  return r;
}

void Polynomial::collect_parameters(std::set<int>& out) const {
  for (auto& t : terms_)
    for (auto& [id, e] : t.mono.factors()) out.insert(id);
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) return std::nullopt;
  if (d.is_constant()) return p.scaled(Rational(1) / d.terms_[0].coeff);
  Polynomial rem = p, quot;
  while (!rem.is_zero()) {
    const Term& lr = rem.terms_.front();
    const Term& ld = d.terms_.front();
    // Under a graded order, exactness forces lt(rem) divisible by lt(d).
    for (auto& [id, e] : ld.mono.factors())
      if (lr.mono.degree_in(id) < e) return std::nullopt;
    Term t{lr.mono.divide_by(ld.mono), lr.coeff / ld.coeff};
    Polynomial tp;
    tp.terms_.push_back(t);
    quot.terms_.push_back(t);
    rem = rem - tp * d;
  }
  quot.normalize();
  return quot;
}

std::string rational_str(const Rational& q) {
  return q.get_str();
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    Rational c = t.coeff;
    if (!first) {
      os << (c < 0 ? "-" : "+");
      if (c < 0) c = -c;
    } else if (c < 0 && !t.mono.empty()) {
      os << "-";
      c = -c;
    }
    first = false;
    if (t.mono.empty()) {
      os << rational_str(c);
    } else {
      if (c != 1) os << rational_str(c) << "*";
      bool fv = true;
      for (auto& [id, e] : t.mono.factors()) {
        if (!fv) os << "*";
        fv = false;
        os << ParameterTable::instance().name_of(id);
        if (e > 1) os << "^" << e;
      }
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw error("zero denominator");
  normalize();
}

Scalar Scalar::parameter(const std::string& name) {
  Scalar s;
  s.num_ = Polynomial::variable(ParameterTable::instance().id_of(name));
  s.den_ = Polynomial(Rational(1));
  return s;
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  Monomial g = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
  if (!g.empty()) {
    num_ = num_.divide_by_monomial(g);
    den_ = den_.divide_by_monomial(g);
  }
  Rational c = den_.content_signed();
  den_ = den_.scaled(Rational(1) / c);
  num_ = num_.scaled(Rational(1) / c);
}

bool Scalar::is_one() const { return num_ == den_; }

bool Scalar::is_constant() const { return num_.is_constant() && den_.is_constant(); }

Rational Scalar::rational_value() const {
  if (!is_constant()) throw error("scalar is not a rational constant: " + str());
  if (num_.is_zero()) return Rational(0);
  return num_.terms()[0].coeff / den_.terms()[0].coeff;
}

namespace {

// Addition keeps denominators small through divisibility probes; this is not
// a gcd reduction, only structural sharing of equal or nested denominators.
Scalar add_scaled(const Polynomial& n1, const Polynomial& d1, const Polynomial& n2,
                  const Polynomial& d2, bool negate) {
  auto combine = [&](const Polynomial& a, const Polynomial& b, const Polynomial& den) {
    return Scalar(negate ? a - b : a + b, den);
  };
  if (d1 == d2) return combine(n1, n2, d1);
  if (auto q = Polynomial::divide_exact(d2, d1)) return combine(n1 * *q, n2, d2);
  if (auto q = Polynomial::divide_exact(d1, d2)) return combine(n1, n2 * *q, d1);
  return combine(n1 * d2, n2 * d1, d1 * d2);
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  return add_scaled(num_, den_, o.num_, o.den_, false);
}

Scalar Scalar::operator-(const Scalar& o) const {
  return add_scaled(num_, den_, o.num_, o.den_, true);
}

Scalar Scalar::operator*(const Scalar& o) const {
  // Cross-cancel exactly divisible numerator/denominator pairs.
  if (auto q = Polynomial::divide_exact(num_, o.den_))
    return Scalar(*q * o.num_, den_);
  if (auto q = Polynomial::divide_exact(o.num_, den_))
    return Scalar(num_ * *q, o.den_);
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw error("division by zero scalar");
  return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw error("inverse of zero scalar");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::set<std::string> Scalar::parameters() const {
  std::set<int> ids;
  num_.collect_parameters(ids);
  den_.collect_parameters(ids);
  std::set<std::string> out;
  for (int id : ids) out.insert(ParameterTable::instance().name_of(id));
  return out;
}

Rational Scalar::evaluate(const ParameterAssignment& w) const {
  auto& table = ParameterTable::instance();
  std::vector<Rational> values(static_cast<size_t>(table.size()), Rational(0));
  std::set<int> ids;
  num_.collect_parameters(ids);
  den_.collect_parameters(ids);
  for (int id : ids) {
    auto it = w.values.find(table.name_of(id));
    if (it == w.values.end())
      throw error("evaluation is missing parameter '" + table.name_of(id) + "'");
    values[static_cast<size_t>(id)] = it->second;
  }
  Rational d = den_.evaluate(values);
  if (d == 0) throw error("denominator vanishes at the given assignment: " + str());
  return num_.evaluate(values) / d;
}

Scalar Scalar::substitute(const ParameterAssignment& w) const {
  auto& table = ParameterTable::instance();
  Scalar acc = *this;
  for (auto& [name, bound_value] : w.values) {
    auto id = table.lookup(name);
    if (!id) continue;
    const Rational value = bound_value;
    // Substitute one variable at a time: p(x) -> sum over terms.
    auto subst = [&](const Polynomial& p) {
      Polynomial out;
      for (auto& t : p.terms()) {
        int e = t.mono.degree_in(*id);
        Monomial rest = t.mono.divide_by(Monomial::variable(*id, e));
        Rational c = t.coeff;
        for (int k = 0; k < e; ++k) c *= value;
        Polynomial term;
        term = Polynomial(c);
        Polynomial mono_poly(Rational(1));
        for (auto& [vid, ve] : rest.factors())
          for (int k = 0; k < ve; ++k) mono_poly = mono_poly * Polynomial::variable(vid);
        out = out + term * mono_poly;
      }
      return out;
    };
    Polynomial nn = subst(acc.num_), nd = subst(acc.den_);
    if (nd.is_zero()) throw error("denominator vanishes under substitution");
    acc = Scalar(nn, nd);
  }
  return acc;
}

Scalar Scalar::derivative(const std::string& name) const {
  auto id = ParameterTable::instance().lookup(name);
  if (!id) return Scalar(0);
  // (n/d)' = (n'd - nd') / d^2
  return Scalar(num_.derivative(*id) * den_ - num_ * den_.derivative(*id), den_ * den_);
}

std::string Scalar::str() const {
  if (num_.is_zero()) return "0";
  if (den_ == Polynomial(Rational(1))) return num_.str();
  // Clear fractional numerator coefficients into the displayed denominator,
  // so (1/2)/a prints as 1/(2*a).
  Integer lcm = 1;
  for (auto& t : num_.terms())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  Polynomial num_disp = num_.scaled(Rational(lcm));
  Polynomial den_disp = den_.scaled(Rational(lcm));
  std::string ns = num_disp.str();
  if (num_disp.terms().size() > 1) ns = "(" + ns + ")";
  std::string ds = den_disp.str();
  // The denominator needs parentheses unless it reparses as one factor:
  // a bare integer, a variable, or a variable power.
  bool simple = den_disp.terms().size() == 1 && den_disp.terms()[0].coeff == 1 &&
                den_disp.terms()[0].mono.factors().size() <= 1;
  if (den_disp.is_constant() && den_disp.terms().size() == 1 &&
      den_disp.terms()[0].coeff.get_den() == 1)
    simple = true;
  if (!simple) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Scalar parse_expr() {
    Scalar v = parse_term();
    for (;;) {
      if (eat('+')) v = v + parse_term();
      else if (eat('-')) v = v - parse_term();
      else return v;
    }
  }

  Scalar parse_term() {
    Scalar v = parse_factor();
    for (;;) {
      if (eat('*')) v = v * parse_factor();
      else if (eat('/')) v = v / parse_factor();
      else return v;
    }
  }

  Scalar parse_factor() {
    if (eat('-')) return -parse_factor();
    if (eat('+')) return parse_factor();
    Scalar v = parse_atom();
    if (eat('^')) {
      skip_ws();
      bool neg = eat('-');
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) throw error("expected integer exponent in scalar text");
      int e = std::stoi(s.substr(start, pos - start));
      v = v.pow(neg ? -e : e);
    }
    return v;
  }

  Scalar parse_atom() {
    skip_ws();
    if (pos >= s.size()) throw error("unexpected end of scalar text");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Scalar v = parse_expr();
      if (!eat(')')) throw error("missing ')' in scalar text");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return Scalar(Rational(s.substr(start, pos - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      return Scalar::parameter(s.substr(start, pos - start));
    }
    throw error(std::string("unexpected character '") + c + "' in scalar text");
  }
};

}  // namespace

Scalar parse_scalar(const std::string& text) {
  Parser p(text);
  Scalar v = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw error("trailing characters in scalar text: '" + text + "'");
  return v;
}

}  // namespace ymh
