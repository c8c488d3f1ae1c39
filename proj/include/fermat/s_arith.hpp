#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fermat/exact_arith.hpp"

namespace fermat {

/// The ring Z[S^-1] for a finite set S of rational primes.
class SRing {
 public:
  SRing() = default;  // Z
  /// Sorts and deduplicates; throws InvalidInput on a non-prime entry.
  explicit SRing(std::vector<Integer> primes);

  /// Comma-separated primes; "" is Z.
  static SRing parse(const std::string& text);

  const std::vector<Integer>& primes() const { return primes_; }
  bool contains(const Integer& p) const;
  bool is_unit(const Integer& v) const;

  /// Union of the two prime sets.
  SRing extended(const SRing& other) const;

  std::string to_string() const;

  friend bool operator==(const SRing&, const SRing&) = default;

 private:
  std::vector<Integer> primes_;
};

/// Representatives of R^x / (R^x)^n.
struct UnitClassGroup {
  unsigned long n = 0;
  std::vector<Integer> representatives;
};

/// Largest e with p^e | s. s != 0.
unsigned long valuation(const Integer& s, const Integer& p);

/// Canonical system {eps * prod p^e : 0 <= e < n}, eps = +-1 for even n,
/// eps = 1 for odd n. Sign-major, then exponents lexicographic over S.
UnitClassGroup s_unit_reps(const SRing& ring, unsigned long n);

/// If sR = J^n, the positive generator of J supported away from S.
std::optional<Integer> is_nth_power_ideal(const Integer& s, unsigned long n,
                                          const SRing& ring);

/// Order of the roots of unity of order dividing n inside R (a subring of Q).
unsigned long roots_of_unity_count(unsigned long n);

}  // namespace fermat
