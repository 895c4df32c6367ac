#pragma once
/// Concrete curves with known singularity census: Persson's conic-type
/// arrangements, the dual of the Fermat cubic and its Kummer covers
/// (Ivinskis), the braid arrangement, Fermat curves, generic line
/// arrangements and rational nodal curves obtained by implicitization.

#include <jdefect/forms.hpp>
#include <jdefect/jacobian.hpp>
#include <jdefect/linalg.hpp>
#include <jdefect/singularities.hpp>

#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace jdefect {

struct FamilyInstance {
  Form form;
  std::string name;
  SingularityCensus expected_census;
  std::optional<long> expected_tau;
  std::optional<long> expected_nu;
  std::optional<long> expected_mdr_lower;
  std::string provenance;
  std::optional<bool> irreducible;
  std::optional<int> k;                // family parameter used by theorem checkers
  std::optional<std::uint64_t> seed;   // seed that produced the instance
};

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Max coefficient of ((1 - t^{d-1}) / (1 - t))^3, the Milnor algebra
/// Hilbert series of a smooth curve of degree d.
inline long smooth_milnor_peak(int d) {
  if (d < 2) return 0;
  std::vector<long> base(d - 1, 1), series{1};
  for (int i = 0; i < 3; ++i) {
    std::vector<long> next(series.size() + base.size() - 1, 0);
    for (std::size_t a = 0; a < series.size(); ++a)
      for (std::size_t b = 0; b < base.size(); ++b) next[a + b] += series[a] * base[b];
    series = std::move(next);
  }
  return *std::max_element(series.begin(), series.end());
}

namespace detail {

inline Form linear_form(long a, long b, long c) {
  Form l(1);
  l.coeff({1, 0, 0}) = a;
  l.coeff({0, 1, 0}) = b;
  l.coeff({0, 0, 1}) = c;
  return l;
}

inline Form signed_power_sum(int h, int sx, int sy, int sz) {
  Form f(h);
  f.coeff({h, 0, 0}) = sx;
  f.coeff({0, h, 0}) = sy;
  f.coeff({0, 0, h}) = sz;
  return f;
}

inline Integer det3(const std::array<long, 3>& a, const std::array<long, 3>& b, const std::array<long, 3>& c) {
  return Integer(a[0]) * (Integer(b[1]) * c[2] - Integer(b[2]) * c[1]) -
         Integer(a[1]) * (Integer(b[0]) * c[2] - Integer(b[2]) * c[0]) +
         Integer(a[2]) * (Integer(b[0]) * c[1] - Integer(b[1]) * c[0]);
}

inline std::uint64_t attempt_seed(std::uint64_t seed, int attempt) {
  return seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt);
}

}  // namespace detail

/// Product of x^h ± y^h ± z^h over the four sign patterns, h = m/2. Degree
/// 2m with 3m points of type A_{m-1}.
inline FamilyInstance persson(int m) {
  if (m < 4 || m % 2 != 0) throw std::invalid_argument("persson(m) needs an even m >= 4, got " + std::to_string(m));
  const int h = m / 2;
  Form f = detail::signed_power_sum(h, 1, 1, 1) * detail::signed_power_sum(h, -1, 1, 1) *
           detail::signed_power_sum(h, 1, -1, 1) * detail::signed_power_sum(h, 1, 1, -1);
  FamilyInstance inst{std::move(f), "persson(m=" + std::to_string(m) + ")"};
  inst.expected_census.add(SingularityType::A(m - 1), 3L * m);
  inst.expected_tau = inst.expected_census.total_tau();
  inst.expected_nu = 1;
  inst.expected_mdr_lower = mdr_lower_bound(*arnold_exponent(inst.expected_census), 2 * m);
  inst.provenance = "3m singularities of type A_{m-1}; nearly free";
  inst.irreducible = false;
  return inst;
}

/// The sextic dual to the Fermat cubic, x^6+y^6+z^6 - 2(x^3y^3+x^3z^3+y^3z^3).
/// Its nine cusps are dual to the nine flexes of the cubic. The equation is
/// checked (τ = 18, ν = 1) the first time it is requested in a process.
inline FamilyInstance dual_fermat_sextic() {
  Form f = parse_form("x^6+y^6+z^6-2*x^3*y^3-2*x^3*z^3-2*y^3*z^3");
  static std::once_flag validated;
  std::call_once(validated, [&] {
    PipelineOptions opt;
    opt.arithmetic = Arithmetic::exact;
    const JacobianProfile p = profile(f, opt);
    if (p.tau != 18 || p.nu != 1)
      throw ConsistencyError("dual Fermat sextic failed validation: tau=" + std::to_string(p.tau) +
                             " nu=" + std::to_string(p.nu));
  });
  FamilyInstance inst{std::move(f), "dual_fermat_sextic"};
  inst.expected_census.add(SingularityType::cusp(), 9);
  inst.expected_tau = 18;
  inst.expected_nu = 1;
  inst.expected_mdr_lower = 3;
  inst.provenance = "9 ordinary cusps; nearly free";
  inst.irreducible = true;
  inst.k = 1;
  return inst;
}

/// Integral change of coordinates putting the dual Fermat sextic in general
/// position with respect to the coordinate triangle: no cusp on a coordinate
/// line, every coordinate line transversal, no vertex on the curve. Without
/// it the Kummer cover is branched at the cusps.
inline const LinearChange& ivinskis_position() {
  static const LinearChange a{{{Rational(1), Rational(1), Rational(2)},
                               {Rational(1), Rational(-1), Rational(3)},
                               {Rational(2), Rational(1), Rational(-1)}}};
  return a;
}

/// Kummer cover (x,y,z) -> (x^k,y^k,z^k) of a general-position copy of the
/// dual Fermat sextic: degree 6k with 9k² ordinary cusps.
inline FamilyInstance ivinskis(int k) {
  if (k < 1) throw std::invalid_argument("ivinskis(k) needs k >= 1");
  const FamilyInstance base = dual_fermat_sextic();
  FamilyInstance inst{substitute_powers(linear_substitution(base.form, ivinskis_position()), k),
                      "ivinskis(k=" + std::to_string(k) + ")"};
  const long kk = static_cast<long>(k) * k;
  inst.expected_census.add(SingularityType::cusp(), 9 * kk);
  inst.expected_tau = 18 * kk;
  inst.expected_nu = 9 * kk - 9 * k + 1;
  inst.expected_mdr_lower = 5L * k - 2;
  inst.provenance = "9k^2 ordinary cusps; nu = 9k^2 - 9k + 1";
  inst.irreducible = true;
  inst.k = k;
  return inst;
}

/// xyz(x-y)(x-z)(y-z): four triple points, three nodes, free.
inline FamilyInstance braid_arrangement() {
  FamilyInstance inst{parse_form("x*y*z*(x-y)*(x-z)*(y-z)"), "braid_arrangement"};
  inst.expected_census = {{SingularityType::ordinary_triple(), 4}, {SingularityType::node(), 3}};
  inst.expected_tau = 19;
  inst.expected_nu = 0;
  inst.provenance = "A3 reflection arrangement; free with exponents (2,3)";
  inst.irreducible = false;
  return inst;
}

inline FamilyInstance fermat(int d) {
  if (d < 1) throw std::invalid_argument("fermat(d) needs d >= 1");
  FamilyInstance inst{detail::signed_power_sum(d, 1, 1, 1), "fermat(d=" + std::to_string(d) + ")"};
  inst.expected_tau = 0;
  inst.expected_nu = smooth_milnor_peak(d);
  inst.expected_mdr_lower = d - 1;
  inst.provenance = "smooth; nu = peak of ((1-t^{d-1})/(1-t))^3";
  inst.irreducible = true;
  return inst;
}

struct LineOptions {
  bool concurrent = false;  // all lines through (0:0:1)
  long coefficient_box = 20;
  int max_attempts = 100;
};

/// Product of n lines with random integer coefficients. By default every
/// three lines are checked to be non-concurrent, so the only singularities
/// are n(n-1)/2 nodes. With `concurrent` all lines pass through one point.
inline FamilyInstance generic_lines(int n, std::uint64_t seed, const LineOptions& opt = {}) {
  if (n < 3) throw std::invalid_argument("generic_lines needs n >= 3");
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    const std::uint64_t s = detail::attempt_seed(seed, attempt);
    std::mt19937_64 rng(s);
    std::uniform_int_distribution<long> coeff(-opt.coefficient_box, opt.coefficient_box);
    std::vector<std::array<long, 3>> lines;
    for (int i = 0; i < n; ++i) lines.push_back({coeff(rng), coeff(rng), opt.concurrent ? 0L : coeff(rng)});
    bool ok = true;
    if (opt.concurrent) {
      for (int i = 0; i < n && ok; ++i)
        for (int j = i + 1; j < n && ok; ++j) ok = lines[i][0] * lines[j][1] - lines[i][1] * lines[j][0] != 0;
    } else {
      for (int i = 0; i < n && ok; ++i)
        for (int j = i + 1; j < n && ok; ++j)
          for (int l = j + 1; l < n && ok; ++l) ok = detail::det3(lines[i], lines[j], lines[l]) != 0;
    }
    if (!ok) continue;
    Form f = Form::constant(Rational(1));
    for (const auto& l : lines) f = f * detail::linear_form(l[0], l[1], l[2]);
    FamilyInstance inst{std::move(f), (opt.concurrent ? "concurrent_lines(n=" : "generic_lines(n=") + std::to_string(n) + ")"};
    if (opt.concurrent)
      inst.expected_census.add(SingularityType::ordinary(n), 1);
    else
      inst.expected_census.add(SingularityType::node(), static_cast<long>(n) * (n - 1) / 2);
    inst.expected_tau = inst.expected_census.total_tau();
    inst.provenance = opt.concurrent ? "pencil of lines: one ordinary n-fold point" : "nodes only";
    inst.irreducible = false;
    inst.seed = s;
    return inst;
  }
  throw ConstructionError("generic_lines: no admissible arrangement after " + std::to_string(opt.max_attempts) +
                          " attempts from seed " + std::to_string(seed));
}

struct NodalOptions {
  long coefficient_box = 20;
  int max_attempts = 20;
  PipelineOptions pipeline{};
};

namespace detail {

/// Coprime (s, t) parameter pairs in order of growing height, one per point
/// of P^1.
inline std::vector<std::array<long, 2>> parameter_points(std::size_t count) {
  std::vector<std::array<long, 2>> out{{1, 0}, {0, 1}};
  for (long h = 1; out.size() < count; ++h) {
    for (long s = -h; s <= h; ++s) {
      for (long t = 1; t <= h; ++t) {
        if (std::max(std::labs(s), t) != h || std::gcd(s, t) != 1) continue;
        out.push_back({s, t});
      }
    }
  }
  out.resize(count);
  return out;
}

inline Integer eval_binary(const std::vector<long>& coeffs, long s, long t) {
  // coeffs[i] multiplies s^i t^{d-i}
  const int d = static_cast<int>(coeffs.size()) - 1;
  Integer total = 0;
  for (int i = 0; i <= d; ++i) {
    Integer term = coeffs[i];
    for (int a = 0; a < i; ++a) term *= s;
    for (int b = 0; b < d - i; ++b) term *= t;
    total += term;
  }
  return total;
}

}  // namespace detail

/// Rational curve of degree d from a random parametrization
/// (P(s,t) : Q(s,t) : R(s,t)), implicitized by interpolation: the curve is the
/// one-dimensional kernel of the map sending a degree-d form to its values
/// at sampled image points. Accepted only when τ = (d-1)(d-2)/2, i.e. the
/// maximal number of nodes for a rational curve.
inline FamilyInstance rational_nodal(int d, std::uint64_t seed, const NodalOptions& opt = {}) {
  if (d < 3) throw std::invalid_argument("rational_nodal needs d >= 3");
  const long nodes = static_cast<long>(d - 1) * (d - 2) / 2;
  const MonomialBasis basis(d);
  const auto params = detail::parameter_points(basis.size() + 5);
  std::string last_failure = "none";
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    const std::uint64_t s = detail::attempt_seed(seed, attempt);
    std::mt19937_64 rng(s);
    std::uniform_int_distribution<long> coeff(-opt.coefficient_box, opt.coefficient_box);
    std::array<std::vector<long>, 3> param;
    for (auto& p : param) {
      p.resize(d + 1);
      for (auto& c : p) c = coeff(rng);
    }
    ExactMatrix eval(params.size(), basis.size(), Rational(0));
    for (std::size_t i = 0; i < params.size(); ++i) {
      std::array<Integer, 3> pt;
      for (int v = 0; v < 3; ++v) pt[v] = detail::eval_binary(param[v], params[i][0], params[i][1]);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        Integer value = 1;
        for (int v = 0; v < 3; ++v)
          for (int e = 0; e < basis[j][v]; ++e) value *= pt[v];
        eval(i, j) = Rational(value);
      }
    }
    const ExactMatrix kernel = kernel_basis(eval);
    if (kernel.cols() != 1) {
      last_failure = "kernel dimension " + std::to_string(kernel.cols());
      continue;
    }
    Form f = primitive_part(Form(d, kernel.column(0)));
    try {
      const JacobianProfile p = profile(f, opt.pipeline);
      if (p.tau != nodes) {
        last_failure = "tau " + std::to_string(p.tau);
        continue;
      }
    } catch (const NonReducedError& e) {
      last_failure = e.what();
      continue;
    }
    FamilyInstance inst{std::move(f), "rational_nodal(d=" + std::to_string(d) + ")"};
    inst.expected_census.add(SingularityType::node(), nodes);
    inst.expected_tau = nodes;
    inst.expected_mdr_lower = d - 2;
    inst.expected_nu = three_quarter_ceiling(d) - nodes;
    inst.provenance = "genus 0, (d-1)(d-2)/2 nodes; tau-certified";
    inst.irreducible = true;
    inst.seed = s;
    return inst;
  }
  throw ConstructionError("rational_nodal(d=" + std::to_string(d) + "): no valid curve after " +
                          std::to_string(opt.max_attempts) + " attempts from seed " + std::to_string(seed) +
                          " (last failure: " + last_failure + ")");
}

}  // namespace jdefect
