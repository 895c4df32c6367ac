#pragma once
/// Homogeneous forms in Q[x,y,z], their monomial bases, and a small parser.

#include <jdefect/fields.hpp>

#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jdefect {

using Exponent = std::array<int, 3>;

inline std::size_t monomial_count(int degree) {
  return degree < 0 ? 0 : static_cast<std::size_t>(degree + 1) * (degree + 2) / 2;
}

/// Index of x^a y^b z^c inside S_{a+b+c}. Monomials of one degree are
/// ordered lexicographically ascending in (a, b, c), so z^j comes first and
/// x^j last.
inline std::size_t monomial_index(const Exponent& e) {
  const int j = e[0] + e[1] + e[2];
  const int a = e[0];
  return static_cast<std::size_t>(a * (j + 1) - a * (a - 1) / 2 + e[1]);
}

class MonomialBasis {
 public:
  explicit MonomialBasis(int degree) : degree_(degree) {
    if (degree < 0) return;
    entries_.reserve(monomial_count(degree));
    for (int a = 0; a <= degree; ++a)
      for (int b = 0; b <= degree - a; ++b) entries_.push_back({a, b, degree - a - b});
  }
  int degree() const { return degree_; }
  std::size_t size() const { return entries_.size(); }
  const Exponent& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::size_t index_of(const Exponent& e) const { return monomial_index(e); }

 private:
  int degree_;
  std::vector<Exponent> entries_;
};

// ---------------------------------------------------------------------------

class Form {
 public:
  /// The zero form of the given degree.
  explicit Form(int degree = 0) : degree_(degree), coeffs_(monomial_count(degree), Rational(0)) {
    if (degree < 0) throw std::invalid_argument("form degree must be non-negative");
  }

  Form(int degree, std::vector<Rational> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0) throw std::invalid_argument("form degree must be non-negative");
    if (coeffs_.size() != monomial_count(degree))
      throw std::invalid_argument("coefficient count does not match degree");
  }

  static Form monomial(const Exponent& e, Rational c = Rational(1)) {
    Form f(e[0] + e[1] + e[2]);
    f.coeffs_[monomial_index(e)] = std::move(c);
    return f;
  }
  static Form constant(Rational c) { return Form(0, {std::move(c)}); }

  int degree() const { return degree_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coeff(const Exponent& e) const { return coeffs_[monomial_index(e)]; }
  Rational& coeff(const Exponent& e) { return coeffs_[monomial_index(e)]; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (sgn(c) != 0) return false;
    return true;
  }

  /// Nonzero terms in monomial order.
  std::vector<std::pair<Exponent, Rational>> terms() const {
    std::vector<std::pair<Exponent, Rational>> out;
    MonomialBasis basis(degree_);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (sgn(coeffs_[i]) != 0) out.emplace_back(basis[i], coeffs_[i]);
    return out;
  }

  Form& operator+=(const Form& g) {
    require_same_degree(g);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
    return *this;
  }
  Form& operator-=(const Form& g) {
    require_same_degree(g);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= g.coeffs_[i];
    return *this;
  }
  Form& operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    return *this;
  }
  friend Form operator+(Form f, const Form& g) { return f += g; }
  friend Form operator-(Form f, const Form& g) { return f -= g; }
  friend Form operator*(Form f, const Rational& c) { return f *= c; }
  friend Form operator*(const Rational& c, Form f) { return f *= c; }
  Form operator-() const { return *this * Rational(-1); }

  bool operator==(const Form& g) const { return degree_ == g.degree_ && coeffs_ == g.coeffs_; }

 private:
  void require_same_degree(const Form& g) const {
    if (g.degree_ != degree_)
      throw std::invalid_argument("adding forms of degrees " + std::to_string(degree_) + " and " +
                                  std::to_string(g.degree_));
  }

  int degree_;
  std::vector<Rational> coeffs_;
};

inline Form multiply(const Form& f, const Form& g) {
  Form out(f.degree() + g.degree());
  auto ft = f.terms();
  auto gt = g.terms();
  for (const auto& [e1, c1] : ft)
    for (const auto& [e2, c2] : gt)
      out.coeff({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}) += c1 * c2;
  return out;
}

inline Form operator*(const Form& f, const Form& g) { return multiply(f, g); }

inline Form power(const Form& f, int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  Form result = Form::constant(Rational(1));
  for (int i = 0; i < k; ++i) result = multiply(result, f);
  return result;
}

/// (∂f/∂x, ∂f/∂y, ∂f/∂z), each of degree d - 1.
inline std::array<Form, 3> partials(const Form& f) {
  if (f.degree() == 0) throw std::invalid_argument("partials of a degree-0 form");
  std::array<Form, 3> out{Form(f.degree() - 1), Form(f.degree() - 1), Form(f.degree() - 1)};
  for (const auto& [e, c] : f.terms()) {
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      Exponent lowered = e;
      --lowered[v];
      out[v].coeff(lowered) += c * e[v];
    }
  }
  return out;
}

/// f(x^k, y^k, z^k).
inline Form substitute_powers(const Form& f, int k) {
  if (k < 1) throw std::invalid_argument("substitute_powers: k must be positive");
  Form out(f.degree() * k);
  for (const auto& [e, c] : f.terms()) out.coeff({e[0] * k, e[1] * k, e[2] * k}) = c;
  return out;
}

/// Rows of a 3x3 matrix A; the substitution sends variable v to the linear
/// form A[v][0] x + A[v][1] y + A[v][2] z.
using LinearChange = std::array<std::array<Rational, 3>, 3>;

/// f(A·(x,y,z)). Projectively equivalent to f when A is invertible.
inline Form linear_substitution(const Form& f, const LinearChange& a) {
  std::array<std::vector<Form>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    Form lin(1);
    lin.coeff({1, 0, 0}) = a[v][0];
    lin.coeff({0, 1, 0}) = a[v][1];
    lin.coeff({0, 0, 1}) = a[v][2];
    powers[v].push_back(Form::constant(Rational(1)));
    for (int k = 1; k <= f.degree(); ++k) powers[v].push_back(multiply(powers[v].back(), lin));
  }
  Form out(f.degree());
  for (const auto& [e, c] : f.terms())
    out += c * multiply(multiply(powers[0][e[0]], powers[1][e[1]]), powers[2][e[2]]);
  return out;
}

using Point = std::array<Rational, 3>;

inline Rational evaluate(const Form& f, const Point& p) {
  Rational total = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational t = c;
    for (int v = 0; v < 3; ++v) {
      Rational pw = 1;
      for (int i = 0; i < e[v]; ++i) pw *= p[v];
      t *= pw;
    }
    total += t;
  }
  return total;
}

/// Scales f to integer coefficients with gcd 1. The curve is unchanged.
inline Form primitive_part(const Form& f) {
  Integer l = 1, g = 0;
  for (const auto& c : f.coefficients()) {
    if (sgn(c) == 0) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Rational> scaled;
  scaled.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) {
    Rational s = c * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
    scaled.push_back(std::move(s));
  }
  if (g != 0)
    for (auto& s : scaled) s /= g;
  return Form(f.degree(), std::move(scaled));
}

/// Canonical text, highest monomial first. Integer-coefficient forms
/// round-trip through parse_form; other rationals print as p/q.
inline std::string render(const Form& f) {
  auto terms = f.terms();
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    std::string mono;
    static constexpr char names[3] = {'x', 'y', 'z'};
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing.

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class InhomogeneousError : public std::invalid_argument {
 public:
  InhomogeneousError(int low, int high)
      : std::invalid_argument("inhomogeneous polynomial: terms of degrees " + std::to_string(low) +
                              " and " + std::to_string(high)),
        low_(low),
        high_(high) {}
  int low() const { return low_; }
  int high() const { return high_; }

 private:
  int low_, high_;
};

namespace detail {

/// Sparse, possibly inhomogeneous polynomial; only lives during parsing.
using SparsePoly = std::map<Exponent, Rational>;

inline void prune(SparsePoly& p) {
  for (auto it = p.begin(); it != p.end();) it = sgn(it->second) == 0 ? p.erase(it) : std::next(it);
}

inline SparsePoly add(SparsePoly a, const SparsePoly& b, int sign) {
  for (const auto& [e, c] : b) a[e] += sign > 0 ? c : Rational(-c);
  prune(a);
  return a;
}

inline SparsePoly mul(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out;
  for (const auto& [e1, c1] : a)
    for (const auto& [e2, c2] : b) out[{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}] += c1 * c2;
  prune(out);
  return out;
}

class Parser {
 public:
  static constexpr int kMaxExponent = 256;

  explicit Parser(std::string_view text) : text_(text) {}

  SparsePoly parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    SparsePoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail_unexpected();
    return p;
  }

 private:
  SparsePoly expr() {
    SparsePoly acc = term();
    for (;;) {
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        const int sign = text_[pos_++] == '+' ? 1 : -1;
        acc = add(std::move(acc), term(), sign);
      } else {
        return acc;
      }
    }
  }

  SparsePoly term() {
    SparsePoly acc = unary();
    for (;;) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc = mul(acc, unary());
    }
  }

  SparsePoly unary() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return add({}, unary(), -1);
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  SparsePoly power() {
    SparsePoly base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("exponent must be a non-negative integer literal", at);
    Integer e = integer_literal();
    if (e > kMaxExponent) throw ParseError("exponent too large", at);
    skip_ws();
    if (peek() == '^') throw ParseError("chained exponent; use parentheses", pos_);
    SparsePoly result{{Exponent{0, 0, 0}, Rational(1)}};
    for (long i = 0; i < e.get_si(); ++i) result = mul(result, base);
    return result;
  }

  SparsePoly primary() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      SparsePoly inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      check_no_juxtaposition();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer v = integer_literal();
      if (peek() == '.') throw ParseError("decimal literals are not supported", pos_);
      check_no_juxtaposition();
      SparsePoly p;
      if (v != 0) p[{0, 0, 0}] = Rational(v);
      return p;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      check_no_juxtaposition();
      Exponent e{0, 0, 0};
      e[c - 'x'] = 1;
      return {{e, Rational(1)}};
    }
    if (std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError(std::string("unknown variable '") + c + "' (only x, y, z are allowed)", pos_);
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    fail_unexpected();
  }

  // "2x", "x y", "(x)(y)" are all rejected: multiplication is explicit.
  void check_no_juxtaposition() {
    const std::size_t at = pos_;
    skip_ws();
    const char c = peek();
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
      throw ParseError("implicit multiplication is not allowed; use '*'", at);
  }

  Integer integer_literal() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  [[noreturn]] void fail_unexpected() const {
    throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an integer-coefficient homogeneous polynomial in x, y, z. The zero
/// polynomial parses as the zero form of degree 0.
inline Form parse_form(std::string_view text) {
  detail::SparsePoly p = detail::Parser(text).parse();
  if (p.empty()) return Form(0);
  std::set<int> degrees;
  for (const auto& [e, c] : p) degrees.insert(e[0] + e[1] + e[2]);
  if (degrees.size() > 1) throw InhomogeneousError(*degrees.begin(), *std::next(degrees.begin()));
  Form f(*degrees.begin());
  for (const auto& [e, c] : p) f.coeff(e) = c;
  return f;
}

}  // namespace jdefect
