#pragma once
/// Tabulated invariants of the singularity types that occur in the curve
/// families (ADE points and ordinary r-fold points), the Arnold exponent,
/// the syzygy-degree lower bound from the Arnold exponent, the
/// du Plessis–Wall Tjurina bound, genus arithmetic, and bound checkers for
/// the four defect theorems.

#include <jdefect/fields.hpp>
#include <jdefect/jacobian.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jdefect {

/// A(n), D(n), E(6|7|8) or an ordinary r-fold point. Constructors normalize
/// the aliases: OrdinaryMult(2) is A(1), OrdinaryMult(3) is D(4).
class SingularityType {
 public:
  enum class Family { A, D, E, OrdinaryMult };

  static SingularityType A(int n) {
    if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
    return {Family::A, n};
  }
  static SingularityType D(int n) {
    if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
    return {Family::D, n};
  }
  static SingularityType E(int n) {
    if (n < 6 || n > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
    return {Family::E, n};
  }
  static SingularityType ordinary(int r) {
    if (r < 2) throw std::invalid_argument("ordinary r-fold point needs r >= 2");
    if (r == 2) return A(1);
    if (r == 3) return D(4);
    return {Family::OrdinaryMult, r};
  }
  static SingularityType node() { return A(1); }
  static SingularityType cusp() { return A(2); }
  static SingularityType ordinary_triple() { return D(4); }

  /// "A3", "D4", "E6", "ord5", or the names node / cusp / triple.
  static SingularityType parse(const std::string& text) {
    std::string s;
    for (char c : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "node") return node();
    if (s == "cusp") return cusp();
    if (s == "triple") return ordinary_triple();
    auto number = [&](std::size_t from) {
      if (from >= s.size() || !std::all_of(s.begin() + from, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("unknown singularity type '" + text + "'");
      return std::stoi(s.substr(from));
    };
    if (s.rfind("ord", 0) == 0) return ordinary(number(3));
    if (!s.empty() && s[0] == 'a') return A(number(1));
    if (!s.empty() && s[0] == 'd') return D(number(1));
    if (!s.empty() && s[0] == 'e') return E(number(1));
    throw std::invalid_argument("unknown singularity type '" + text + "'");
  }

  Family family() const { return family_; }
  int index() const { return n_; }
  bool is_ade() const { return family_ != Family::OrdinaryMult; }

  std::string name() const {
    switch (family_) {
      case Family::A: return "A" + std::to_string(n_);
      case Family::D: return "D" + std::to_string(n_);
      case Family::E: return "E" + std::to_string(n_);
      case Family::OrdinaryMult: return "ord" + std::to_string(n_);
    }
    return "?";
  }

  auto operator<=>(const SingularityType&) const = default;

 private:
  SingularityType(Family f, int n) : family_(f), n_(n) {}
  Family family_;
  int n_;
};

/// Log canonical threshold. For the quasi-homogeneous normal forms
/// lct = min(1, w_x + w_y) with the weights making the form degree 1:
/// A_n: x^2 + y^{n+1}; D_n: x^2 y + y^{n-1}; E6: x^3 + y^4; E7: x^3 + x y^3;
/// E8: x^3 + y^5. An ordinary r-fold point has lct 2/r.
inline Rational lct(const SingularityType& s) {
  const int n = s.index();
  switch (s.family()) {
    case SingularityType::Family::A: return make_rational(1, 2) + make_rational(1, n + 1);
    case SingularityType::Family::D: return make_rational(n, 2 * (n - 1));
    case SingularityType::Family::E:
      return n == 6 ? make_rational(7, 12) : n == 7 ? make_rational(5, 9) : make_rational(8, 15);
    case SingularityType::Family::OrdinaryMult: return make_rational(2, n);
  }
  throw std::logic_error("unreachable");
}

/// Local Tjurina number. All tabulated types are quasi-homogeneous, so τ = μ.
inline long tau_local(const SingularityType& s) {
  if (s.family() == SingularityType::Family::OrdinaryMult) return static_cast<long>(s.index() - 1) * (s.index() - 1);
  return s.index();
}

/// δ-invariant; only node, cusp and ordinary r-fold points are tabulated.
inline long delta_local(const SingularityType& s) {
  if (s == SingularityType::cusp()) return 1;
  if (s == SingularityType::node()) return 1;
  if (s == SingularityType::ordinary_triple()) return 3;
  if (s.family() == SingularityType::Family::OrdinaryMult) return static_cast<long>(s.index()) * (s.index() - 1) / 2;
  throw std::invalid_argument("delta invariant not tabulated for " + s.name());
}

class SingularityCensus {
 public:
  SingularityCensus() = default;
  SingularityCensus(std::initializer_list<std::pair<SingularityType, long>> entries) {
    for (const auto& [t, c] : entries) add(t, c);
  }

  /// "A3:12,node:3"
  static SingularityCensus parse(const std::string& text) {
    SingularityCensus c;
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t comma = text.find(',', start);
      if (comma == std::string::npos) comma = text.size();
      const std::string item = text.substr(start, comma - start);
      const std::size_t colon = item.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("census entry '" + item + "' needs TYPE:COUNT");
      c.add(SingularityType::parse(item.substr(0, colon)), std::stol(item.substr(colon + 1)));
      start = comma + 1;
    }
    return c;
  }

  void add(const SingularityType& t, long count) {
    if (count < 1) throw std::invalid_argument("census counts must be positive");
    for (auto& [type, n] : entries_)
      if (type == t) {
        n += count;
        return;
      }
    entries_.emplace_back(t, count);
  }

  const std::vector<std::pair<SingularityType, long>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  long total_tau() const {
    long s = 0;
    for (const auto& [t, n] : entries_) s += n * tau_local(t);
    return s;
  }
  long total_delta() const {
    long s = 0;
    for (const auto& [t, n] : entries_) s += n * delta_local(t);
    return s;
  }
  bool all_ade() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.first.is_ade(); });
  }
  bool only(const SingularityType& t) const {
    return std::all_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.first == t; });
  }

  std::string to_string() const {
    std::string s;
    for (const auto& [t, n] : entries_) s += (s.empty() ? "" : ",") + t.name() + ":" + std::to_string(n);
    return s.empty() ? "smooth" : s;
  }

 private:
  std::vector<std::pair<SingularityType, long>> entries_;
};

/// Minimum lct over the census; nullopt for a smooth curve.
inline std::optional<Rational> arnold_exponent(const SingularityCensus& c) {
  std::optional<Rational> best;
  for (const auto& [t, n] : c.entries()) {
    Rational l = lct(t);
    if (!best || l < *best) best = l;
  }
  return best;
}

/// α·d - 2, the raw syzygy-degree bound for quasi-homogeneous singularities.
inline Rational mdr_lower_bound_raw(const Rational& alpha, int d) { return alpha * d - 2; }

/// ⌈α·d - 2⌉; mdr is an integer so this is the usable form of the bound.
inline long mdr_lower_bound(const Rational& alpha, int d) {
  if (sgn(alpha) <= 0 || alpha > 1) throw std::invalid_argument("Arnold exponent must lie in (0, 1]");
  return ceil_of(mdr_lower_bound_raw(alpha, d)).get_si();
}

inline long binomial2(long n) { return n >= 2 ? n * (n - 1) / 2 : 0; }

/// du Plessis–Wall maximal Tjurina number for degree d and mdr r:
/// (d-1)(d-r-1) + r^2 - C(2r-d+2, 2).
inline long dpw_tau_max(long d, long r) {
  if (r < 0 || r > d - 1) throw std::invalid_argument("dpw_tau_max needs 0 <= r <= d-1");
  return (d - 1) * (d - r - 1) + r * r - binomial2(2 * r - d + 2);
}

/// Geometric genus (d-1)(d-2)/2 - Σ δ, for an irreducible curve.
inline long genus(int d, const SingularityCensus& c) {
  const long g = static_cast<long>(d - 1) * (d - 2) / 2 - c.total_delta();
  if (g < 0) throw std::invalid_argument("census inconsistent with degree " + std::to_string(d) + ": genus would be " + std::to_string(g));
  return g;
}

// ---------------------------------------------------------------------------
// Theorem checkers.

enum class TheoremKind { A, B, C, D };

inline std::string to_string(TheoremKind k) {
  switch (k) {
    case TheoremKind::A: return "A";
    case TheoremKind::B: return "B";
    case TheoremKind::C: return "C";
    case TheoremKind::D: return "D";
  }
  return "?";
}

/// What a checker knows about the curve. Everything is optional; checkers
/// declare themselves not applicable when a hypothesis cannot be confirmed.
struct CurveFacts {
  std::optional<int> d;
  std::optional<int> k;  // family parameter for B and C
  std::optional<SingularityCensus> census;
  std::optional<bool> irreducible;
  std::optional<long> measured_nu;
  std::optional<long> measured_mdr;
  std::optional<long> measured_tau;
};

struct TheoremVerdict {
  TheoremKind kind;
  bool applicable = false;
  std::string reason;        // why not applicable, or a note
  std::string relation;      // ">=" or "="
  Rational bound;            // exact value of the bound (or predicted value)
  long integer_bound = 0;    // ⌈bound⌉ for ">=", the value for "="
  std::optional<long> genus; // C only
  std::optional<long> measured;
  std::optional<bool> pass;
  std::vector<std::string> chain;  // D only: mdr >= m -> τ <= 3m²-3m -> ν >= 1
};

namespace detail {

inline TheoremVerdict not_applicable(TheoremKind k, std::string why) {
  TheoremVerdict v{k};
  v.applicable = false;
  v.reason = std::move(why);
  return v;
}

inline void compare(TheoremVerdict& v, const CurveFacts& f) {
  if (!f.measured_nu) return;
  v.measured = f.measured_nu;
  v.pass = v.relation == "=" ? *f.measured_nu == v.integer_bound : *f.measured_nu >= v.integer_bound;
}

}  // namespace detail

/// Nodal irreducible curve of degree d >= 4: ν >= (d² - 1)/4.
inline TheoremVerdict check_theorem_a(const CurveFacts& f) {
  if (!f.d) return detail::not_applicable(TheoremKind::A, "degree unknown");
  const int d = *f.d;
  if (d < 4) return detail::not_applicable(TheoremKind::A, "needs d >= 4");
  if (f.census && !f.census->empty() && !f.census->only(SingularityType::node()))
    return detail::not_applicable(TheoremKind::A, "singularities are not all nodes");
  if (f.measured_nu && !f.census) return detail::not_applicable(TheoremKind::A, "no singularity census for this curve");
  if (f.irreducible && !*f.irreducible) return detail::not_applicable(TheoremKind::A, "curve is reducible");
  TheoremVerdict v{TheoremKind::A};
  v.applicable = true;
  v.relation = ">=";
  v.bound = make_rational(static_cast<long>(d) * d - 1, 4);
  v.integer_bound = ceil_of(v.bound).get_si();
  detail::compare(v, f);
  return v;
}

/// Genus-zero degree-3k curve with 2k ordinary triple points and nodes,
/// k >= 3: ν >= (9k+1)(k-1)/4. Bound arithmetic only.
inline TheoremVerdict check_theorem_b(const CurveFacts& f) {
  if (!f.k) return detail::not_applicable(TheoremKind::B, "parameter k unknown");
  const long k = *f.k;
  if (k < 3) return detail::not_applicable(TheoremKind::B, "needs k >= 3");
  if (f.d && *f.d != 3 * k) return detail::not_applicable(TheoremKind::B, "degree is not 3k");
  if (f.census) {
    long triples = 0, others = 0;
    for (const auto& [t, n] : f.census->entries()) {
      if (t == SingularityType::ordinary_triple()) triples += n;
      else if (t != SingularityType::node()) others += n;
    }
    if (triples != 2 * k || others != 0)
      return detail::not_applicable(TheoremKind::B, "census is not 2k triple points plus nodes");
  }
  TheoremVerdict v{TheoremKind::B};
  v.applicable = true;
  v.relation = ">=";
  v.bound = make_rational((9 * k + 1) * (k - 1), 4);
  v.integer_bound = ceil_of(v.bound).get_si();
  detail::compare(v, f);
  return v;
}

/// Degree-6k curve with 9k² ordinary cusps: ν = 9k² - 9k + 1 = genus.
inline TheoremVerdict check_theorem_c(const CurveFacts& f) {
  if (!f.k) return detail::not_applicable(TheoremKind::C, "parameter k unknown");
  const long k = *f.k;
  if (k < 1) return detail::not_applicable(TheoremKind::C, "needs k >= 1");
  if (f.d && *f.d != 6 * k) return detail::not_applicable(TheoremKind::C, "degree is not 6k");
  if (f.census && !(f.census->only(SingularityType::cusp()) && f.census->total_tau() == 18 * k * k))
    return detail::not_applicable(TheoremKind::C, "census is not 9k^2 cusps");
  TheoremVerdict v{TheoremKind::C};
  v.applicable = true;
  v.relation = "=";
  v.bound = Rational(9 * k * k - 9 * k + 1);
  v.integer_bound = 9 * k * k - 9 * k + 1;
  v.genus = genus(static_cast<int>(6 * k), SingularityCensus{{SingularityType::cusp(), 9 * k * k}});
  detail::compare(v, f);
  return v;
}

/// Even degree 2m >= 4, only ADE points, α >= 1/2 + 1/m: ν >= 1.
inline TheoremVerdict check_theorem_d(const CurveFacts& f) {
  if (!f.d) return detail::not_applicable(TheoremKind::D, "degree unknown");
  const int d = *f.d;
  if (d < 4 || d % 2 != 0) return detail::not_applicable(TheoremKind::D, "needs even degree d = 2m >= 4");
  if (!f.census) return detail::not_applicable(TheoremKind::D, "no singularity census for this curve");
  if (!f.census->all_ade()) return detail::not_applicable(TheoremKind::D, "not all singularities are ADE");
  const int m = d / 2;
  const Rational threshold = make_rational(1, 2) + make_rational(1, m);
  const auto alpha = arnold_exponent(*f.census);
  if (!alpha) return detail::not_applicable(TheoremKind::D, "smooth curve (Arnold exponent undefined)");
  if (*alpha < threshold)
    return detail::not_applicable(TheoremKind::D, "Arnold exponent " + to_string(*alpha) + " < 1/2 + 1/" + std::to_string(m) +
                                                      " = " + to_string(threshold));
  TheoremVerdict v{TheoremKind::D};
  v.applicable = true;
  v.relation = ">=";
  v.bound = Rational(1);
  v.integer_bound = 1;
  const long mdr_min = mdr_lower_bound(*alpha, d);
  v.chain.push_back("mdr >= " + std::to_string(mdr_min) + " >= m = " + std::to_string(m));
  v.chain.push_back("tau <= tau_max(" + std::to_string(d) + "," + std::to_string(m) + ") = " + std::to_string(dpw_tau_max(d, m)));
  v.chain.push_back("nu = " + std::to_string(three_quarter_ceiling(d)) + " - tau >= 1");
  detail::compare(v, f);
  return v;
}

inline TheoremVerdict check_theorem(TheoremKind kind, const CurveFacts& f) {
  switch (kind) {
    case TheoremKind::A: return check_theorem_a(f);
    case TheoremKind::B: return check_theorem_b(f);
    case TheoremKind::C: return check_theorem_c(f);
    case TheoremKind::D: return check_theorem_d(f);
  }
  throw std::logic_error("unreachable");
}

}  // namespace jdefect
