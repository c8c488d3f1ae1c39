#pragma once

/**
 * @file quartic442.hpp
 * @brief Covering, twisting and sieving for x^4 + y^4 = z^2.
 *
 * The signature (4,4,2) Belyi stack is covered by E: v^2 = u^3 - u through
 * phi(u,v) = (u^2 : u^2 - 1). Its quartic twists E_d: v^2 = u^3 - d u carry
 * phi_d(u,v) = (u^2 : u^2 - d), indexed by d in Z[1/2]^x / (Z[1/2]^x)^4.
 * Every primitive solution maps into some phi_d(E_d(Q)); the sieve keeps
 * the images that are integral stack points and lifts them back.
 */

#include <map>
#include <string>
#include <vector>

#include "fermat/belyi_stack.hpp"
#include "fermat/exact_arith.hpp"
#include "fermat/gfe.hpp"
#include "fermat/s_arith.hpp"

namespace fermat {

/// v^2 w = u^3 - d u w^2 with d != 0.
struct TwistedCurve {
  Integer d;
};

/// Affine point (u, v) or the point at infinity O = (0:1:0).
struct CurvePoint {
  bool at_infinity = true;
  Rational u, v;

  static CurvePoint infinity() { return {}; }
  static CurvePoint affine(Rational u, Rational v) { return {false, std::move(u), std::move(v)}; }

  std::string to_string() const;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
  /// O first, then by (u, v).
  friend bool operator<(const CurvePoint& l, const CurvePoint& r);
};

/// Throws SingularCurve when d == 0.
TwistedCurve twist_curve(const Integer& d);

bool on_curve(const TwistedCurve& e, const CurvePoint& p);

CurvePoint negate(const CurvePoint& p);
/// Chord-tangent addition.
CurvePoint add(const TwistedCurve& e, const CurvePoint& p, const CurvePoint& q);
CurvePoint multiply(const TwistedCurve& e, const CurvePoint& p, unsigned long n);

/// phi_d(P) = (u^2 : u^2 - d), extended by phi_d(O) = (1:1).
ProjPointQ belyi_eval(const TwistedCurve& e, const CurvePoint& p);

/// Rational torsion subgroup, found from integral Nagell-Lutz candidates
/// and confirmed by exact multiplication.
std::vector<CurvePoint> torsion_points(const TwistedCurve& e, const FactorConfig& config = {});

/// O together with every affine point whose u = n/k has |n| <= height and
/// 1 <= k <= height.
std::vector<CurvePoint> rational_points_bounded(const TwistedCurve& e, const Integer& height);

/// Representatives d with -d a positive square.
std::vector<Integer> admissible_twists(const UnitClassGroup& reps);

struct SieveCandidate {
  ProjPointQ point;
  std::vector<std::string> sources;  // "marked", or "d=<d> P=<point>"
  StackPointCertificate certificate;
  std::vector<PrimitiveSolution> recovered;
};

struct TwistRecord {
  Integer d;
  bool admissible = false;
  bool torsion_only = true;  // false when the point set comes from a height search
  std::vector<CurvePoint> points;
  std::vector<ProjPointQ> images;
};

struct SieveReport {
  std::vector<Integer> unit_classes;
  std::vector<Integer> admissible;
  std::vector<TwistRecord> twists;
  std::vector<SieveCandidate> candidates;
  std::vector<PrimitiveSolution> solutions;
  std::vector<PrimitiveSolution> enumerated;
  Integer bound_check;
  std::vector<std::string> assumptions;
};

struct SieveOptions {
  /// Also feed the non-admissible twists, with points from a height search.
  bool include_all_twists = false;
  Integer twist_height = 12;
  EnumerationOptions enumeration;
};

/// x^4 + y^4 - z^2 = 0
GFE fermat_442();

/// Runs covering, twisting and sieving; throws PipelineMismatch when the
/// sieve output differs from direct enumeration up to bound_check.
SieveReport sieve_442(const Integer& bound_check, const SieveOptions& options = {});

}  // namespace fermat
