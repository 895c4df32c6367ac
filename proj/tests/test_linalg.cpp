#include <jdefect/linalg.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace jdefect;

namespace {

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int box, bool low_rank) {
  std::uniform_int_distribution<int> coef(-box, box);
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = coef(rng);
  if (low_rank && rows > 2) {
    // Last row is a combination of the first two.
    for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = 3 * m(0, j) - m(1, j);
  }
  return m;
}

ExactMatrix product(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

bool is_zero(const ExactMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST(Rational, CanonicalAndExact) {
  Rational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  Rational a = make_rational(7, 3), b = make_rational(-5, 11);
  EXPECT_EQ((a + b) - b, a);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
  EXPECT_EQ(ceil_of(make_rational(99, 4)), 25);
  EXPECT_EQ(floor_of(make_rational(-1, 2)), -1);
}

TEST(PrimeField, ArithmeticAndInverse) {
  auto primes = random_primes(3, 42);
  ASSERT_EQ(primes.size(), 3u);
  for (auto p : primes) {
    EXPECT_GT(p, 1u << 30);
    EXPECT_TRUE(is_prime_u32(p));
    PrimeField F(p);
    auto x = F.from_integer(123456789);
    EXPECT_EQ(F.mul(x, F.inv(x)), F.one());
    EXPECT_EQ(F.from_rational(make_rational(1, 3)), F.inv(F.from_integer(3)));
  }
  EXPECT_FALSE(is_prime_u32(2147483647u - 2));
  EXPECT_TRUE(is_prime_u32(2147483647u));
  EXPECT_EQ(random_primes(2, 7), random_primes(2, 7));
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(ExactMatrix(0, 0)), 0u);
  EXPECT_EQ(rank(ExactMatrix::identity(3, Rational(0), Rational(1))), 3u);
  EXPECT_EQ(rank(make_exact({{1, 2}, {2, 4}, {3, 6}})), 1u);
  EXPECT_EQ(rank(ExactMatrix(2, 3)), 0u);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(ExactMatrix::identity(2, Rational(0), Rational(1))).cols(), 0u);

  auto k = kernel_basis(ExactMatrix(2, 3));
  EXPECT_EQ(k.cols(), 3u);
  EXPECT_EQ(k.rows(), 3u);
  EXPECT_EQ(rank(k), 3u);

  auto m = make_exact({{1, 1, 0}});
  auto kb = kernel_basis(m);
  ASSERT_EQ(kb.cols(), 2u);
  EXPECT_TRUE(is_zero(product(m, kb)));
  auto span = column_space(RationalField{}, kb);
  EXPECT_TRUE(span.contains(std::vector<Rational>{1, -1, 0}));
  EXPECT_TRUE(span.contains(std::vector<Rational>{0, 0, 1}));
  EXPECT_FALSE(span.contains(std::vector<Rational>{1, 0, 0}));
}

TEST(Preimage, Examples) {
  auto id2 = ExactMatrix::identity(2, Rational(0), Rational(1));
  auto m = make_exact({{1, 2, 3}, {4, 5, 6}});

  // V = whole target: full source.
  EXPECT_EQ(preimage_kernel(m, id2).cols(), 3u);

  // V empty: plain kernel.
  auto pk = preimage_kernel(m, ExactMatrix(2, 0));
  EXPECT_EQ(pk.cols(), kernel_basis(m).cols());
  EXPECT_TRUE(is_zero(product(m, pk)));

  auto v = make_exact({{1}, {0}});
  auto p = preimage_kernel(id2, v);
  ASSERT_EQ(p.cols(), 1u);
  EXPECT_EQ(p(1, 0), 0);
  EXPECT_NE(p(0, 0), 0);

  EXPECT_THROW(preimage_kernel(m, make_exact({{1}, {0}, {0}})), std::invalid_argument);
}

TEST(Subspace, ContainsAndInsert) {
  RationalField F;
  Subspace<RationalField> s(F, 3);
  EXPECT_TRUE(s.insert({1, 2, 3}));
  EXPECT_FALSE(s.insert({2, 4, 6}));
  EXPECT_TRUE(s.insert({0, 1, 1}));
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(s.contains(std::vector<Rational>{1, 3, 4}));
  EXPECT_FALSE(s.contains(std::vector<Rational>{0, 0, 1}));
  Subspace<RationalField> t(F, 3);
  t.insert({1, 3, 4});
  EXPECT_TRUE(s.contains(t));
  EXPECT_FALSE(t.contains(s));
}

TEST(RankProperties, IndependentRoutesAgree) {
  std::mt19937_64 rng(2024);
  const auto primes = random_primes(2, 99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    auto m = random_matrix(rng, rows, cols, trial % 2 ? 3 : 50, trial % 3 == 0);
    const std::size_t r = rank(m);
    EXPECT_EQ(r, bareiss_rank(m));
    EXPECT_EQ(r, modular_rank(m, primes));
    EXPECT_LE(r, std::min(rows, cols));
    auto k = kernel_basis(m);
    EXPECT_EQ(r + k.cols(), cols);
    EXPECT_EQ(bareiss_rank(k), k.cols());
    EXPECT_TRUE(is_zero(product(m, k)));
    EXPECT_EQ(rank(m.transposed()), r);
  }
}

TEST(RankProperties, RationalEntriesAndPermutation) {
  ExactMatrix m = make_exact({{1, 2, 3}, {2, 4, 7}, {0, 0, 1}});
  m(0, 0) = make_rational(1, 3);
  m(1, 1) = make_rational(5, 7);
  const auto primes = random_primes(2, 5);
  EXPECT_EQ(rank(m), bareiss_rank(m));
  EXPECT_EQ(rank(m), modular_rank(m, primes));
  ExactMatrix swapped = m;
  for (std::size_t j = 0; j < 3; ++j) std::swap(swapped(0, j), swapped(2, j));
  EXPECT_EQ(rank(swapped), rank(m));
}

TEST(RankProperties, ModularAgreesOverPrimeField) {
  std::mt19937_64 rng(7);
  const auto primes = random_primes(2, 3);
  PrimeField F(primes[0]);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_matrix(rng, 6, 5, 9, trial % 2 == 0);
    EXPECT_EQ(rank(F, convert(F, m)), rank(m));
    auto k = kernel_basis(F, convert(F, m));
    EXPECT_EQ(k.cols(), 5 - rank(m));
  }
}
