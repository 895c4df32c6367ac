#pragma once
/// Exact scalar fields used by the graded linear algebra: the rationals
/// (GMP-backed) and prime fields Z/p with 32-bit moduli.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace jdefect {

using Integer = mpz_class;
/// Always canonical: lowest terms, positive denominator.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// "p/q" or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

// ---------------------------------------------------------------------------
// Field policies. A policy owns whatever state the arithmetic needs (the
// modulus for Z/p) and exposes a uniform element interface to the templated
// elimination code.

struct RationalField {
  using value_type = Rational;

  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  /// a -= c * b
  void sub_mul(value_type& a, const value_type& c, const value_type& b) const { a -= c * b; }
  void scale(value_type& a, const value_type& c) const { a *= c; }
  value_type from_rational(const Rational& q) const { return q; }
  Rational to_rational(const value_type& a) const { return a; }
  std::string name() const { return "Q"; }
};

class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 3 || p >= (1u << 31)) throw std::invalid_argument("prime out of range");
  }

  std::uint32_t modulus() const { return p_; }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, p_ - 2);
  }
  void sub_mul(value_type& a, value_type c, value_type b) const { a = sub(a, mul(c, b)); }
  void scale(value_type& a, value_type c) const { a = mul(a, c); }

  value_type pow(value_type base, std::uint64_t e) const {
    std::uint64_t result = 1, b = base % p_;
    while (e) {
      if (e & 1) result = result * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }

  value_type from_integer(const Integer& z) const {
    return static_cast<value_type>(mpz_fdiv_ui(z.get_mpz_t(), p_));
  }

  /// Throws std::domain_error when p divides the denominator.
  value_type from_rational(const Rational& q) const {
    value_type den = from_integer(q.get_den());
    if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
    return mul(from_integer(q.get_num()), inv(den));
  }

  /// Symmetric representative; only meaningful for small integers.
  Rational to_rational(value_type a) const {
    long v = a > p_ / 2 ? static_cast<long>(a) - static_cast<long>(p_) : static_cast<long>(a);
    return Rational(v);
  }

  std::string name() const { return "Z/" + std::to_string(p_); }

 private:
  std::uint32_t p_;
};

// ---------------------------------------------------------------------------
// Primes.

/// Deterministic Miller-Rabin; bases 2,3,5,7 are exact below 3.2e9.
inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % q == 0) return n == q;
  }
  std::uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto powmod = [n](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= n;
    while (e) {
      if (e & 1) r = r * b % n;
      b = b * b % n;
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2u, 3u, 5u, 7u}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// `count` distinct primes drawn uniformly from (2^30, 2^31).
inline std::vector<std::uint32_t> random_primes(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist((1u << 30) + 1, (1u << 31) - 1);
  std::vector<std::uint32_t> out;
  while (out.size() < count) {
    std::uint32_t c = dist(rng) | 1u;
    if (!is_prime_u32(c)) continue;
    bool seen = false;
    for (auto q : out) seen = seen || q == c;
    if (!seen) out.push_back(c);
  }
  return out;
}

}  // namespace jdefect
