#pragma once

#include <compare>
#include <string>
#include <vector>

#include "fermat/belyi_stack.hpp"
#include "fermat/exact_arith.hpp"
#include "fermat/group_structure.hpp"
#include "fermat/s_arith.hpp"

namespace fermat {

/// A x^a + B y^b + C z^c = 0 with A, B, C nonzero.
class GFE {
 public:
  GFE(Signature sig, const Integer& A, const Integer& B, const Integer& C);

  const Signature& signature() const { return sig_; }
  const Integer& A() const { return A_; }
  const Integer& B() const { return B_; }
  const Integer& C() const { return C_; }

  /// A x^a + B y^b + C z^c
  Integer evaluate(const Integer& x, const Integer& y, const Integer& z) const;

  std::string to_string() const;

 private:
  Signature sig_;
  Integer A_, B_, C_;
};

struct PrimitiveSolution {
  Integer x, y, z;

  friend bool operator==(const PrimitiveSolution&, const PrimitiveSolution&) = default;
  friend std::strong_ordering operator<=>(const PrimitiveSolution& l,
                                          const PrimitiveSolution& r);
};

/// Prime divisors of a*b*c*A*B*C.
SRing bad_prime_set(const GFE& f, const FactorConfig& config = {});

struct EnumerationOptions {
  bool presieve = true;
  unsigned max_aux_primes = 4;
  unsigned threads = 0;  // 0: hardware concurrency
  FactorConfig factor;  // used where coefficients get factored
};

/// Auxiliary sieve primes: the smallest p = 1 mod lcm(a,b,c) not dividing
/// abcABC, at most max_count of them.
std::vector<unsigned long> auxiliary_primes(const GFE& f, unsigned max_count);

/// All primitive solutions with max(|x|,|y|,|z|) <= bound, lexicographic.
std::vector<PrimitiveSolution> enumerate_primitive_solutions(
    const GFE& f, const Integer& bound, const EnumerationOptions& options = {});

/// Canonical form of (-A x^a : C z^c). Throws DegeneratePoint if x = z = 0.
ProjPointQ j_map(const GFE& f, const PrimitiveSolution& sol);

struct RecoveredSolution {
  PrimitiveSolution solution;
  Integer A, B, C;  // coefficients the solution satisfies
  bool classical = true;  // coefficients are the original ones
};

/// Primitive solutions (x,y,z) with (-A' x^a : C' z^c) = Q. Without
/// search_units only the original coefficients are used; with it the
/// coefficients A' = A u0, B' = B u1 range over unit classes of R modulo
/// a-th and b-th powers (C' = C after rescaling by a common unit).
/// Throws NotAStackPoint if Q is rejected over R.
std::vector<RecoveredSolution> recover_solutions(const ProjPointQ& q, const GFE& f,
                                                 const SRing& ring, bool search_units,
                                                 const FactorConfig& config = {});

struct InclusionEntry {
  PrimitiveSolution solution;
  ProjPointQ image;
  StackPointCertificate certificate;
};

struct InclusionReport {
  SRing ring;
  std::vector<InclusionEntry> entries;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks that every primitive solution up to the bound maps to a point of
/// the Belyi stack over the bad-prime ring.
InclusionReport verify_descent_inclusion(const GFE& f, const Integer& bound,
                                         const EnumerationOptions& options = {});

}  // namespace fermat
