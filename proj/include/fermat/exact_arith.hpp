#pragma once

/**
 * @file exact_arith.hpp
 * @brief Exact integers, rationals, factorization and points of P^1(Q).
 *
 * Integer and Rational are GMP values. Rationals are always kept in
 * canonical form (reduced, positive denominator). Projective points are
 * stored as the unique coprime pair (s:t) with t > 0, or (1:0).
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fermat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational num/den; throws InvalidInput on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer abs(const Integer& a);
Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, unsigned long exp);

/// Converts to unsigned long; throws InvalidInput when out of range.
unsigned long to_ulong(const Integer& v);
/// Converts to int64; throws InvalidInput when out of range.
std::int64_t to_int64(const Integer& v);

/// lcm(a,b,c) computed as abc / gcd(bc, ac, ab).
Integer lcm_triple(const Integer& a, const Integer& b, const Integer& c);

struct PrimePower {
  Integer prime;
  unsigned long exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;  // strictly increasing primes

  /// sign * prod p^e
  Integer product() const;
};

/// Effort caps for factorize. Exceeding them raises WorkLimitExceeded.
struct FactorConfig {
  unsigned long trial_bound = 10000;
  unsigned long rho_iterations = 1UL << 20;  // per attempt
  unsigned rho_attempts = 8;
  unsigned long seed = 0x5eed;
  std::size_t max_bits = 256;  // refuse inputs larger than this

  /// Defaults, with rho_iterations overridden by FERMAT_FACTOR_WORK_CAP
  /// when that environment variable holds a positive integer.
  static FactorConfig from_environment();
};

/// Strong probable-prime test (GMP Miller-Rabin with 30 rounds).
bool is_probable_prime(const Integer& n);

Factorization factorize(const Integer& n, const FactorConfig& config = {});

/// Positive primes dividing n, increasing.
std::vector<Integer> prime_divisors(const Integer& n,
                                    const FactorConfig& config = {});

/// All positive divisors of n, increasing. n != 0.
std::vector<Integer> positive_divisors(const Integer& n,
                                       const FactorConfig& config = {});

/// Returns r with r^n == v. For even n only v >= 0 qualifies and r >= 0.
std::optional<Integer> is_perfect_nth_power(const Integer& v, unsigned long n);

/// A point of P^1(Q) in canonical coprime form.
class ProjPointQ {
 public:
  /// Normalizes (s,t): divides by gcd, makes t > 0, or s > 0 when t == 0.
  /// Throws ZeroPoint on (0,0).
  ProjPointQ(const Integer& s, const Integer& t);

  static ProjPointQ zero() { return {0, 1}; }
  static ProjPointQ one() { return {1, 1}; }
  static ProjPointQ infinity() { return {1, 0}; }

  const Integer& s() const { return s_; }
  const Integer& t() const { return t_; }

  bool is_infinity() const { return t_ == 0; }

  /// "s:t"
  std::string to_string() const;

  friend bool operator==(const ProjPointQ& a, const ProjPointQ& b) {
    return a.s_ == b.s_ && a.t_ == b.t_;
  }
  friend std::strong_ordering operator<=>(const ProjPointQ& a,
                                          const ProjPointQ& b);

 private:
  Integer s_;
  Integer t_;
};

ProjPointQ normalize_projective(const Integer& s, const Integer& t);

/// |ad - bc| for P = (c:d), Q = (a:b). Zero exactly when P == Q.
Integer intersection_ideal(const ProjPointQ& p, const ProjPointQ& q);

/// Parses a decimal integer, throwing InvalidInput on malformed text.
Integer parse_integer(const std::string& text);

}  // namespace fermat
