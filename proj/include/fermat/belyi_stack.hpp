#pragma once

#include <array>
#include <optional>
#include <string>

#include "fermat/exact_arith.hpp"
#include "fermat/group_structure.hpp"
#include "fermat/s_arith.hpp"

namespace fermat {

/// The three rooted points 0 = (0:1), 1 = (1:1), infinity = (1:0).
enum class MarkedPoint { Zero, One, Infinity };

std::string_view to_string(MarkedPoint m);
std::optional<MarkedPoint> marked_point_of(const ProjPointQ& q);
ProjPointQ point_of(MarkedPoint m);

/// Outcome of root_point_test for one rooted divisor.
struct RootPointResult {
  bool coincides = false;  // Q == P; automorphisms mu_n(R)
  unsigned long automorphism_order = 1;
  Integer root;  // generator of J with J^n = I(P,Q); meaningful when !coincides
};

/// Point test for the n-th root stack of P^1 along P. Absent when
/// I(P,Q) is not an n-th power ideal of R.
std::optional<RootPointResult> root_point_test(const ProjPointQ& p,
                                               const ProjPointQ& q,
                                               unsigned long n,
                                               const SRing& ring);

enum class StackPointStatus { Marked, SmoothWithRoots, Rejected };

enum class RejectedCondition { None, ZeroCondition, OneCondition, InfinityCondition };

struct StackPointCertificate {
  ProjPointQ point = ProjPointQ::zero();
  StackPointStatus status = StackPointStatus::Rejected;
  std::optional<MarkedPoint> marked;
  RejectedCondition failed = RejectedCondition::None;
  /// (g0, g1, ginf) with g0^a ~ sR, g1^b ~ (s-t)R, ginf^c ~ tR.
  std::optional<std::array<Integer, 3>> roots;

  bool accepted() const { return status != StackPointStatus::Rejected; }
  /// Human-readable reason for a rejection, empty otherwise.
  std::string reason() const;
};

StackPointCertificate is_stack_point(const ProjPointQ& q, const Signature& sig,
                                     const SRing& ring);

/// #mu_n(R) at a marked point of multiplicity n, 1 at other accepted points.
/// Throws NotAStackPoint for rejected points.
unsigned long stack_point_automorphism_order(const ProjPointQ& q, const Signature& sig,
                                             const SRing& ring);

/// 1/a + 1/b + 1/c - 1
Rational euler_characteristic(const Signature& sig);

enum class SignatureKind { Spherical, Euclidean, Hyperbolic };

std::string_view to_string(SignatureKind k);

struct SignatureClass {
  Rational chi;
  SignatureKind kind = SignatureKind::Hyperbolic;
  /// Genus of the Galois cover; absent means ">= 2 (not computed)".
  std::optional<Integer> genus;
  /// 2/chi, present only for spherical signatures.
  std::optional<Integer> degree;
};

SignatureClass classify_signature(const Signature& sig);

}  // namespace fermat
