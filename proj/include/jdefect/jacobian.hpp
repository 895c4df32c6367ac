#pragma once
/// Graded invariants of the Jacobian ideal of a plane curve: the pieces
/// J_{f,j}, syzygy dimensions and mdr(f), the Milnor algebra and total
/// Tjurina number, the saturation I_f, and the Jacobian module N(f) = I_f/J_f
/// with its defect ν = max_j dim N(f)_j.

#include <jdefect/fields.hpp>
#include <jdefect/forms.hpp>
#include <jdefect/linalg.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jdefect {

/// Milnor algebra failed to stabilize: f is not reduced (or has
/// non-isolated singularities).
class NonReducedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The form does not define a plane curve (zero, or degree 0).
class InvalidCurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal self-check failed (e.g. N(f) not self-dual).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Top degree of the Jacobian module, 3(d - 2).
inline int socle_degree(int d) { return 3 * (d - 2); }

template <class Field>
struct GradedSubspace {
  int degree;
  Subspace<Field> space;

  std::size_t dim() const { return space.dim(); }
  /// Columns are coefficient vectors in the monomial basis of S_degree.
  Matrix<typename Field::value_type> basis() const { return space.basis_matrix(); }
};

/// Per-field worker. Caches J_{f,j} since the profile touches most degrees
/// and the top ones more than once.
template <class Field>
class JacobianEngine {
 public:
  using T = typename Field::value_type;

  JacobianEngine(Field F, const Form& f) : F_(std::move(F)), d_(f.degree()) {
    if (d_ < 1) throw InvalidCurveError("a curve needs a form of degree at least 1");
    if (f.is_zero()) throw InvalidCurveError("the zero form does not define a curve");
    auto parts = partials(f);
    for (int v = 0; v < 3; ++v)
      for (const auto& [e, c] : parts[v].terms()) partial_terms_[v].push_back({e, F_.from_rational(c)});
  }

  const Field& field() const { return F_; }
  int degree() const { return d_; }

  const Subspace<Field>& jacobian_piece(int j) {
    if (j < 0) throw std::invalid_argument("negative degree");
    if (static_cast<std::size_t>(j) >= cache_.size()) cache_.resize(j + 1);
    if (!cache_[j]) cache_[j] = build_jacobian_piece(j);
    return *cache_[j];
  }

  /// dim AR(f)_r = 3 dim S_r - dim J_{f, r+d-1}.
  std::size_t ar_dim(int r) {
    if (r < 0) return 0;
    return 3 * monomial_count(r) - jacobian_piece(r + d_ - 1).dim();
  }

  int mdr() {
    for (int r = 0; r < d_; ++r)
      if (ar_dim(r) > 0) return r;
    // Koszul relations (f_y, -f_x, 0) etc. live in degree d-1.
    throw ConsistencyError("no Jacobian syzygy found up to degree d-1");
  }

  std::size_t milnor_dim(int j) {
    if (j < 0) return 0;
    return monomial_count(j) - jacobian_piece(j).dim();
  }

  /// Total Tjurina number, read off the Milnor algebra just above the socle
  /// degree after checking that its Hilbert function has stabilized.
  std::size_t tau(int margin = 0) {
    if (d_ == 1) return 0;
    const int top = socle_degree(d_) + 1;
    const std::size_t value = milnor_dim(top);
    for (int k = 1; k <= 1 + margin; ++k) {
      const std::size_t next = milnor_dim(top + k);
      if (next != value)
        throw NonReducedError("non-reduced or non-isolated singularities: dim M(f)_" +
                              std::to_string(top) + " = " + std::to_string(value) + " but dim M(f)_" +
                              std::to_string(top + k) + " = " + std::to_string(next));
    }
    return value;
  }

  /// I_{f,j} for j = 0..T+1 by the descending colon recursion
  /// I_{f,j} = { g in S_j : x g, y g, z g in I_{f,j+1} }, seeded with
  /// I_{f,T+1} = J_{f,T+1}. Requires tau() to have succeeded.
  std::vector<Subspace<Field>> saturate() {
    const int top = socle_degree(d_) + 1;
    if (top < 0) return {};
    std::vector<Subspace<Field>> out;
    out.reserve(top + 1);
    out.push_back(jacobian_piece(top));
    for (int j = top - 1; j >= 0; --j) out.push_back(colon_step(out.back(), j));
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  struct Term {
    Exponent e;
    T c;
  };

  Subspace<Field> build_jacobian_piece(int j) const {
    Subspace<Field> space(F_, monomial_count(j));
    const int shift = j - (d_ - 1);
    if (shift < 0) return space;
    const std::size_t n = monomial_count(j);
    for (const Exponent& m : MonomialBasis(shift)) {
      for (int v = 0; v < 3; ++v) {
        if (partial_terms_[v].empty()) continue;
        std::vector<T> vec(n, F_.zero());
        for (const auto& t : partial_terms_[v])
          vec[monomial_index({m[0] + t.e[0], m[1] + t.e[1], m[2] + t.e[2]})] = t.c;
        space.insert(std::move(vec));
      }
    }
    return space;
  }

  /// {g in S_j : x g, y g, z g in upper}, as the kernel of S_j -> (S_{j+1}/upper)^3.
  Subspace<Field> colon_step(const Subspace<Field>& upper, int j) const {
    const std::vector<std::size_t> free = upper.free_columns();
    std::vector<std::size_t> free_pos(upper.ambient_dim(), free.size());
    for (std::size_t i = 0; i < free.size(); ++i) free_pos[free[i]] = i;
    std::vector<std::size_t> pivot_row(upper.ambient_dim(), upper.dim());
    for (std::size_t i = 0; i < upper.dim(); ++i) pivot_row[upper.pivots()[i]] = i;

    const MonomialBasis basis(j);
    Matrix<T> quotient_map(3 * free.size(), basis.size(), F_.zero());
    for (std::size_t col = 0; col < basis.size(); ++col) {
      for (int v = 0; v < 3; ++v) {
        Exponent e = basis[col];
        ++e[v];
        const std::size_t k = monomial_index(e);
        const std::size_t block = v * free.size();
        if (pivot_row[k] == upper.dim()) {
          quotient_map(block + free_pos[k], col) = F_.one();
        } else {
          // e_k ≡ e_k - row on the free coordinates.
          const auto& row = upper.rows()[pivot_row[k]];
          for (std::size_t i = 0; i < free.size(); ++i)
            if (!F_.is_zero(row[free[i]])) quotient_map(block + i, col) = F_.neg(row[free[i]]);
        }
      }
    }
    return kernel_subspace(F_, quotient_map);
  }

  Field F_;
  int d_;
  std::array<std::vector<Term>, 3> partial_terms_;
  std::vector<std::optional<Subspace<Field>>> cache_;
};

// ---------------------------------------------------------------------------
// Exact single-purpose entry points (over Q unless a field is given).

template <class Field = RationalField>
GradedSubspace<Field> jacobian_piece(const Form& f, int j, Field F = Field{}) {
  JacobianEngine<Field> eng(F, f);
  return {j, eng.jacobian_piece(j)};
}

template <class Field = RationalField>
std::size_t ar_dim(const Form& f, int r, Field F = Field{}) {
  return JacobianEngine<Field>(F, f).ar_dim(r);
}

template <class Field = RationalField>
int mdr(const Form& f, Field F = Field{}) {
  return JacobianEngine<Field>(F, f).mdr();
}

template <class Field = RationalField>
std::size_t milnor_dim(const Form& f, int j, Field F = Field{}) {
  return JacobianEngine<Field>(F, f).milnor_dim(j);
}

template <class Field = RationalField>
std::size_t tau(const Form& f, Field F = Field{}, int margin = 0) {
  return JacobianEngine<Field>(F, f).tau(margin);
}

template <class Field = RationalField>
std::vector<GradedSubspace<Field>> saturate(const Form& f, Field F = Field{}) {
  JacobianEngine<Field> eng(F, f);
  eng.tau();
  std::vector<GradedSubspace<Field>> out;
  int j = 0;
  for (auto& s : eng.saturate()) out.push_back({j++, std::move(s)});
  return out;
}

/// n(f)_j = dim I_{f,j} - dim J_{f,j} for j = 0..3(d-2).
template <class Field = RationalField>
std::vector<long> jacobian_module_dims(const Form& f, Field F = Field{}) {
  JacobianEngine<Field> eng(F, f);
  eng.tau();
  auto sat = eng.saturate();
  std::vector<long> n;
  for (int j = 0; j <= socle_degree(f.degree()); ++j)
    n.push_back(static_cast<long>(sat[j].dim()) - static_cast<long>(eng.jacobian_piece(j).dim()));
  return n;
}

// ---------------------------------------------------------------------------
// Profiles.

enum class Classification { free, nearly_free, defect };

inline std::string to_string(Classification c) {
  switch (c) {
    case Classification::free: return "free";
    case Classification::nearly_free: return "nearly_free";
    case Classification::defect: return "defect";
  }
  return "?";
}

inline Classification classify(long nu) {
  return nu == 0 ? Classification::free : nu == 1 ? Classification::nearly_free : Classification::defect;
}

struct JacobianProfile {
  int d = 0;
  int mdr = 0;
  long tau = 0;
  std::vector<long> n_seq;  // j = 0..3(d-2)
  long nu = 0;
  Classification classification = Classification::free;

  // Self-checks recorded while the profile was built.
  bool containment_holds = true;  // J_{f,j} ⊆ I_{f,j} for every j
  bool duality_holds = true;      // n_j = n_{T-j}
  std::string arithmetic;         // which field(s) produced the numbers

  bool same_invariants(const JacobianProfile& o) const {
    return d == o.d && mdr == o.mdr && tau == o.tau && n_seq == o.n_seq && nu == o.nu &&
           containment_holds == o.containment_holds;
  }
};

enum class Arithmetic { automatic, exact, modular };

struct PipelineOptions {
  Arithmetic arithmetic = Arithmetic::automatic;
  /// `automatic` stays over Q up to this degree and goes modular above it.
  int exact_degree_limit = 6;
  std::size_t primes = 2;
  std::uint64_t prime_seed = 0x6a646566656374ULL;
  int stabilization_margin = 0;
  /// Throw ConsistencyError when N(f) is not self-dual.
  bool enforce_duality = true;
};

template <class Field>
JacobianProfile profile_over(const Field& F, const Form& f, const PipelineOptions& opt = {}) {
  JacobianProfile p;
  p.d = f.degree();
  p.arithmetic = F.name();
  JacobianEngine<Field> eng(F, f);
  p.mdr = eng.mdr();
  p.tau = static_cast<long>(eng.tau(opt.stabilization_margin));
  if (p.d >= 2) {
    auto sat = eng.saturate();
    const int T = socle_degree(p.d);
    for (int j = 0; j <= T; ++j) {
      const auto& J = eng.jacobian_piece(j);
      p.containment_holds = p.containment_holds && sat[j].contains(J);
      p.n_seq.push_back(static_cast<long>(sat[j].dim()) - static_cast<long>(J.dim()));
    }
    for (int j = 0; j <= T; ++j) p.duality_holds = p.duality_holds && p.n_seq[j] == p.n_seq[T - j];
  }
  p.nu = p.n_seq.empty() ? 0 : std::max(0L, *std::max_element(p.n_seq.begin(), p.n_seq.end()));
  p.classification = classify(p.nu);
  if (opt.enforce_duality && !p.duality_holds) {
    std::string seq;
    for (long n : p.n_seq) seq += (seq.empty() ? "" : ",") + std::to_string(n);
    throw ConsistencyError("Jacobian module is not self-dual over " + F.name() + ": n = (" + seq + ")");
  }
  if (!p.containment_holds) throw ConsistencyError("J_f is not contained in its saturation over " + F.name());
  return p;
}

/// Full invariant record. Modular runs must agree across all primes; any
/// disagreement (including a prime that breaks reducedness) falls back to
/// exact arithmetic over Q.
inline JacobianProfile profile(const Form& f, const PipelineOptions& opt = {}) {
  if (f.degree() < 1) throw InvalidCurveError("a curve needs a form of degree at least 1");
  if (f.is_zero()) throw InvalidCurveError("the zero form does not define a curve");
  const Form g = primitive_part(f);
  const bool modular = opt.arithmetic == Arithmetic::modular ||
                       (opt.arithmetic == Arithmetic::automatic && g.degree() > opt.exact_degree_limit);
  if (!modular) return profile_over(RationalField{}, g, opt);

  std::vector<std::optional<JacobianProfile>> runs;
  std::size_t non_reduced = 0;
  std::string last_error;
  const auto primes = random_primes(std::max<std::size_t>(opt.primes, 2), opt.prime_seed);
  for (std::uint32_t p : primes) {
    try {
      runs.push_back(profile_over(PrimeField(p), g, opt));
    } catch (const NonReducedError& e) {
      ++non_reduced;
      last_error = e.what();
      runs.emplace_back();
    } catch (const std::exception&) {
      runs.emplace_back();
    }
  }
  if (non_reduced == primes.size()) throw NonReducedError(last_error);
  bool agree = runs[0].has_value();
  for (const auto& r : runs) agree = agree && r && r->same_invariants(*runs[0]);
  if (!agree) {
    JacobianProfile exact = profile_over(RationalField{}, g, opt);
    exact.arithmetic += " (modular runs disagreed)";
    return exact;
  }
  JacobianProfile out = *runs[0];
  out.arithmetic.clear();
  for (std::uint32_t p : primes) out.arithmetic += (out.arithmetic.empty() ? "" : ", ") + ("Z/" + std::to_string(p));
  out.arithmetic = "modular (" + out.arithmetic + ")";
  return out;
}

// ---------------------------------------------------------------------------

/// ⌈3(d-1)^2 / 4⌉
inline long three_quarter_ceiling(long d) { return (3 * (d - 1) * (d - 1) + 3) / 4; }

struct DefectFormulaCheck {
  bool first_case = false;   // r < (d-1)/2
  bool second_case = false;  // r >= (d-2)/2
  std::optional<long> first_value;
  std::optional<long> second_value;
  long predicted = 0;
  long measured = 0;
  bool agree = false;
};

/// Predicts ν from (d, mdr, τ) by the two-case defect formula and compares
/// it with the measured value. When both cases apply they must coincide.
inline DefectFormulaCheck defect_formula_check(const JacobianProfile& p) {
  DefectFormulaCheck v;
  const long d = p.d, r = p.mdr;
  v.measured = p.nu;
  v.first_case = 2 * r < d - 1;
  v.second_case = 2 * r >= d - 2;
  if (v.first_case) v.first_value = (d - 1) * (d - 1) - r * (d - 1 - r) - p.tau;
  if (v.second_case) v.second_value = three_quarter_ceiling(d) - p.tau;
  v.predicted = v.first_value ? *v.first_value : *v.second_value;
  v.agree = v.predicted == v.measured;
  if (v.first_value && v.second_value) v.agree = v.agree && *v.first_value == *v.second_value;
  return v;
}

}  // namespace jdefect
