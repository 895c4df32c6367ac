#include <jdefect/families.hpp>
#include <jdefect/jacobian.hpp>

#include <gtest/gtest.h>

using namespace jdefect;

namespace {

const char* kConic = "x^2+y^2+z^2";
const char* kBraid = "x*y*z*(x-y)*(x-z)*(y-z)";
const char* kSextic = "x^6+y^6+z^6-2*(x^3*y^3+x^3*z^3+y^3*z^3)";

// dim J_{f,j} straight from the definition: every monomial of degree j-d+1
// times every partial, ranked by fraction-free elimination.
std::size_t oracle_jacobian_dim(const Form& f, int j) {
  const int s = j - f.degree() + 1;
  if (s < 0) return 0;
  auto parts = partials(f);
  MonomialBasis src(s);
  ExactMatrix m(3 * src.size(), monomial_count(j));
  std::size_t row = 0;
  for (int v = 0; v < 3; ++v)
    for (const auto& e : src) {
      for (const auto& [pe, c] : parts[v].terms()) m(row, monomial_index({pe[0] + e[0], pe[1] + e[1], pe[2] + e[2]})) += c;
      ++row;
    }
  return bareiss_rank(m);
}

// dim of I_{f,j} as {g : g * S_k ⊆ J_{f,j+k}} for k = T+1-j in one step,
// without the degree-by-degree recursion.
template <class Field>
std::size_t oracle_saturation_dim(const Field& F, const Form& f, int j) {
  const int top = socle_degree(f.degree()) + 1;
  const int k = top - j;
  JacobianEngine<Field> eng(F, f);
  const auto& J = eng.jacobian_piece(top);
  const auto free = J.free_columns();
  MonomialBasis mult(k), src(j);
  Matrix<typename Field::value_type> big(mult.size() * free.size(), src.size(), F.zero());
  for (std::size_t c = 0; c < src.size(); ++c) {
    for (std::size_t mi = 0; mi < mult.size(); ++mi) {
      std::vector<typename Field::value_type> v(monomial_count(top), F.zero());
      const auto& a = src[c];
      const auto& b = mult[mi];
      v[monomial_index({a[0] + b[0], a[1] + b[1], a[2] + b[2]})] = F.one();
      J.reduce(v);
      for (std::size_t i = 0; i < free.size(); ++i) big(mi * free.size() + i, c) = v[free[i]];
    }
  }
  return src.size() - rank(F, big);
}

// Coefficients of ((1 - t^{d-1}) / (1 - t))^3.
std::vector<long> milnor_series(int d) {
  std::vector<long> one(d - 1, 1), acc{1};
  for (int i = 0; i < 3; ++i) {
    std::vector<long> next(acc.size() + one.size() - 1, 0);
    for (std::size_t a = 0; a < acc.size(); ++a)
      for (std::size_t b = 0; b < one.size(); ++b) next[a + b] += acc[a] * one[b];
    acc = next;
  }
  return acc;
}

PipelineOptions exact() {
  PipelineOptions o;
  o.arithmetic = Arithmetic::exact;
  return o;
}

PipelineOptions modular() {
  PipelineOptions o;
  o.arithmetic = Arithmetic::modular;
  return o;
}

}  // namespace

TEST(JacobianPiece, Examples) {
  Form conic = parse_form(kConic);
  EXPECT_EQ(jacobian_piece(conic, 1).dim(), 3u);
  EXPECT_EQ(jacobian_piece(conic, 0).dim(), 0u);
  Form quartic = parse_form("x^4+y^4+z^4");
  auto j3 = jacobian_piece(quartic, 3);
  EXPECT_EQ(j3.dim(), 3u);
  EXPECT_TRUE(j3.space.contains(parse_form("x^3").coefficients()));
  EXPECT_TRUE(j3.space.contains(parse_form("y^3-5*z^3").coefficients()));
  EXPECT_FALSE(j3.space.contains(parse_form("x^2*y").coefficients()));
  EXPECT_EQ(j3.basis().rows(), 10u);
  EXPECT_EQ(j3.basis().cols(), 3u);
}

TEST(JacobianPiece, MatchesDirectSpan) {
  for (const char* text : {kConic, kBraid, kSextic, "x^3+y^3+z^3", "y^2*z-x^3-x^2*z"}) {
    Form f = parse_form(text);
    for (int j = 0; j <= socle_degree(f.degree()) + 2; ++j)
      EXPECT_EQ(jacobian_piece(f, j).dim(), oracle_jacobian_dim(f, j)) << text << " j=" << j;
  }
}

TEST(ArDim, Examples) {
  Form conic = parse_form(kConic);
  EXPECT_EQ(ar_dim(conic, 0), 0u);
  EXPECT_EQ(ar_dim(conic, 1), 3u);
  EXPECT_EQ(ar_dim(parse_form("x^4+y^4+z^4"), 2), 0u);
}

TEST(Mdr, Examples) {
  EXPECT_EQ(mdr(parse_form(kConic)), 1);
  EXPECT_EQ(mdr(parse_form(kBraid)), 2);
  for (int d = 2; d <= 6; ++d) EXPECT_EQ(mdr(fermat(d).form), d - 1) << d;
}

TEST(MilnorDim, Examples) {
  Form conic = parse_form(kConic);
  EXPECT_EQ(milnor_dim(conic, 0), 1u);
  EXPECT_EQ(milnor_dim(conic, 1), 0u);
  // smooth cubic: 1, 3, 3, 1
  Form cubic = parse_form("x^3+y^3+z^3");
  const std::vector<std::size_t> want{1, 3, 3, 1, 0, 0};
  for (int j = 0; j < 6; ++j) EXPECT_EQ(milnor_dim(cubic, j), want[j]) << j;
}

TEST(Tau, Examples) {
  for (int d = 1; d <= 5; ++d) EXPECT_EQ(tau(fermat(d).form), 0u) << d;
  EXPECT_EQ(tau(parse_form(kBraid)), 19u);
  EXPECT_EQ(tau(parse_form(kSextic)), 18u);
  EXPECT_EQ(tau(parse_form("y^2*z-x^3")), 2u);       // cuspidal cubic
  EXPECT_EQ(tau(parse_form("y^2*z-x^3-x^2*z")), 1u);  // nodal cubic
}

TEST(Tau, NonReducedRejected) {
  EXPECT_THROW(tau(parse_form("x^2*y")), NonReducedError);
  EXPECT_THROW(tau(parse_form("(x+y+z)^2*z")), NonReducedError);
  EXPECT_THROW(profile(parse_form("x^2*y")), NonReducedError);
  EXPECT_THROW(profile(parse_form("(x+y+z)^2*z"), modular()), NonReducedError);
  EXPECT_THROW(profile(parse_form("(x^2+y^2+z^2)^2")), NonReducedError);
  try {
    profile(parse_form("x^2*y"));
  } catch (const NonReducedError& e) {
    EXPECT_NE(std::string(e.what()).find("non-reduced or non-isolated singularities"), std::string::npos);
  }
}

TEST(Tau, DegenerateInputs) {
  EXPECT_THROW(profile(parse_form("5")), InvalidCurveError);
  EXPECT_THROW(profile(Form(3)), InvalidCurveError);
  auto line = profile(parse_form("x+2*y"));
  EXPECT_EQ(line.tau, 0);
  EXPECT_EQ(line.nu, 0);
  EXPECT_EQ(line.classification, Classification::free);
  EXPECT_TRUE(line.n_seq.empty());
}

TEST(Saturate, Conic) {
  auto sat = saturate(parse_form(kConic));
  ASSERT_EQ(sat.size(), 2u);
  EXPECT_EQ(sat[0].dim(), 1u);
  EXPECT_EQ(sat[1].dim(), 3u);
}

TEST(Saturate, SmoothIsWholeRing) {
  Form f = fermat(4).form;
  auto sat = saturate(f);
  for (const auto& s : sat) EXPECT_EQ(s.dim(), monomial_count(s.degree));
}

TEST(Saturate, SexticLowDegrees) {
  Form f = parse_form(kSextic);
  auto sat = saturate(f);
  ASSERT_EQ(sat.size(), 14u);
  EXPECT_EQ(sat[2].dim(), 0u);
  EXPECT_EQ(sat[13].dim(), jacobian_piece(f, 13).dim());
  // I_f cuts out the Tjurina scheme, length 2 at each cusp: 18 conditions.
  // Cubics through the 9 reduced points exist, but none through the scheme.
  EXPECT_EQ(sat[3].dim(), 0u);
  for (int j = 9; j <= 13; ++j) EXPECT_EQ(sat[j].dim(), monomial_count(j) - 18) << j;
  EXPECT_EQ(sat[6].dim(), jacobian_piece(f, 6).dim() + 1);
}

TEST(Saturate, RecursionMatchesOneStepColon) {
  RationalField Q;
  PrimeField P(random_primes(1, 17)[0]);
  for (const char* text : {kConic, "x^3+y^3+z^3", "y^2*z-x^3-x^2*z", kBraid}) {
    Form f = parse_form(text);
    auto sat = saturate(f);
    for (std::size_t j = 0; j < sat.size(); ++j)
      EXPECT_EQ(sat[j].dim(), oracle_saturation_dim(Q, f, static_cast<int>(j))) << text << " j=" << j;
  }
  Form sextic = parse_form(kSextic);
  auto sat = saturate(sextic, P);
  for (std::size_t j = 0; j < sat.size(); ++j)
    EXPECT_EQ(sat[j].dim(), oracle_saturation_dim(P, sextic, static_cast<int>(j))) << "sextic j=" << j;
}

TEST(ModuleDims, Examples) {
  EXPECT_EQ(jacobian_module_dims(parse_form(kConic)), std::vector<long>{1});
  auto braid = jacobian_module_dims(parse_form(kBraid));
  EXPECT_EQ(braid.size(), 13u);
  for (long n : braid) EXPECT_EQ(n, 0);
  EXPECT_EQ(jacobian_module_dims(fermat(4).form), (std::vector<long>{1, 3, 6, 7, 6, 3, 1}));
}

TEST(Profile, Examples) {
  auto sextic = profile(parse_form(kSextic));
  EXPECT_EQ(sextic.d, 6);
  EXPECT_EQ(sextic.tau, 18);
  EXPECT_EQ(sextic.nu, 1);
  EXPECT_EQ(sextic.classification, Classification::nearly_free);
  auto n = sextic.n_seq;
  EXPECT_EQ(n.size(), 13u);
  EXPECT_EQ(n[6], 1);

  auto persson4 = profile(persson(4).form);
  EXPECT_EQ(persson4.tau, 36);
  EXPECT_EQ(persson4.nu, 1);
  EXPECT_EQ(persson4.classification, Classification::nearly_free);
}

TEST(Profile, IvinskisDegreeTwelve) {
  auto p = profile(ivinskis(2).form);
  EXPECT_EQ(p.d, 12);
  EXPECT_EQ(p.tau, 72);
  EXPECT_EQ(p.nu, 19);
  ASSERT_EQ(p.n_seq.size(), 31u);
  for (int j = 0; j <= 30; ++j) EXPECT_EQ(p.n_seq[j], p.n_seq[30 - j]);
  EXPECT_TRUE(defect_formula_check(p).agree);
}

TEST(Profile, SmoothCoherence) {
  for (int d = 2; d <= 6; ++d) {
    auto p = profile(fermat(d).form);
    auto series = milnor_series(d);
    ASSERT_EQ(p.n_seq.size(), series.size());
    EXPECT_EQ(p.n_seq, series);
    EXPECT_EQ(p.tau, 0);
    EXPECT_EQ(p.nu, *std::max_element(series.begin(), series.end()));
    EXPECT_EQ(p.mdr, d - 1);
  }
}

TEST(Profile, FreeCurveIdentity) {
  auto p = profile(parse_form(kBraid));
  const long d = p.d, r = p.mdr;
  EXPECT_EQ(p.nu, 0);
  EXPECT_EQ(p.classification, Classification::free);
  EXPECT_EQ(p.tau, (d - 1) * (d - 1) - r * (d - 1 - r));
}

TEST(Profile, ExactAndModularAgree) {
  for (const char* text : {kConic, kBraid, kSextic, "x^3+y^3+z^3", "y^2*z-x^3-x^2*z", "x*y*(x^2+y^2+z^2)"}) {
    Form f = parse_form(text);
    auto a = profile(f, exact());
    auto b = profile(f, modular());
    EXPECT_TRUE(a.same_invariants(b)) << text;
    EXPECT_EQ(a.arithmetic, "Q");
    EXPECT_EQ(b.arithmetic.rfind("modular", 0), 0u);
  }
}

TEST(Profile, ScaleInvariant) {
  auto a = profile(parse_form("x^3+y^3+z^3"));
  auto b = profile(parse_form("7*x^3+7*y^3+7*z^3"));
  EXPECT_TRUE(a.same_invariants(b));
}

TEST(Profile, Invariants) {
  for (const char* text : {kConic, kBraid, kSextic, "y^2*z-x^3", "x*y*z", "x^4+y^4+z^4+x^2*y^2"}) {
    auto p = profile(parse_form(text));
    const long peak = p.n_seq.empty() ? 0 : *std::max_element(p.n_seq.begin(), p.n_seq.end());
    EXPECT_EQ(p.nu, peak);
    EXPECT_LE(p.mdr, p.d - 1);
    EXPECT_TRUE(p.containment_holds);
    EXPECT_TRUE(p.duality_holds);
    for (long n : p.n_seq) EXPECT_GE(n, 0);
    EXPECT_TRUE(defect_formula_check(p).agree) << text;
  }
}

TEST(DefectFormula, Examples) {
  JacobianProfile conic;
  conic.d = 2;
  conic.mdr = 1;
  conic.tau = 0;
  conic.nu = 1;
  auto c = defect_formula_check(conic);
  EXPECT_TRUE(c.second_case);
  EXPECT_EQ(c.predicted, 1);
  EXPECT_TRUE(c.agree);

  JacobianProfile quartic;
  quartic.d = 4;
  quartic.mdr = 3;
  quartic.nu = 7;
  EXPECT_EQ(defect_formula_check(quartic).predicted, 7);

  JacobianProfile overlap;
  overlap.d = 8;
  overlap.mdr = 3;
  overlap.tau = 5;
  overlap.nu = 32;
  auto o = defect_formula_check(overlap);
  EXPECT_TRUE(o.first_case);
  EXPECT_TRUE(o.second_case);
  EXPECT_EQ(*o.first_value, 37 - 5);
  EXPECT_EQ(*o.second_value, 37 - 5);
  EXPECT_TRUE(o.agree);

  overlap.nu = 31;
  EXPECT_FALSE(defect_formula_check(overlap).agree);
}

TEST(DefectFormula, CaseOverlapArithmetic) {
  for (long d = 1; d <= 50; ++d) {
    for (long r = 0; r <= d - 1; ++r) {
      const bool first = 2 * r < d - 1, second = 2 * r >= d - 2;
      EXPECT_TRUE(first || second);
      if (first && second) {
        // ceil(3(d-1)^2/4) computed by exact division with remainder
        const long num = 3 * (d - 1) * (d - 1);
        const long ceil = num / 4 + (num % 4 != 0);
        EXPECT_EQ((d - 1) * (d - 1) - r * (d - 1 - r), ceil) << d << " " << r;
        EXPECT_EQ(three_quarter_ceiling(d), ceil);
      }
    }
  }
}
