#pragma once

#include <array>
#include <string>
#include <vector>

#include "fermat/exact_arith.hpp"

namespace fermat {

/// Exponent triple (a,b,c) of a generalized Fermat equation; entries >= 2.
class Signature {
 public:
  Signature(const Integer& a, const Integer& b, const Integer& c);

  /// Parses "a,b,c".
  static Signature parse(const std::string& text);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }

  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  Integer a_, b_, c_;
};

struct WeightData {
  Integer d;  // gcd(a,b,c)
  Integer m;  // gcd(bc,ac,ab)
  std::array<Integer, 3> w;  // (bc/m, ac/m, ab/m)
};

/// Torus rank and torsion invariant factors of the diagonal group
/// {(l0,l1,linf) : l0^a = l1^b = linf^c}.
struct HStructure {
  int torus_rank = 1;
  std::vector<Integer> torsion;
};

WeightData weight_vector(const Signature& sig);

/// Invariant factors (1s omitted) of the triangle-group abelianization,
/// computed from the Smith form of the J-matrix.
std::vector<Integer> triangle_abelianization(const Signature& sig);

/// Structure via the M-matrix route: the kernel gives the torus, the
/// cokernel torsion gives the finite part.
HStructure h_structure(const Signature& sig);

/// True iff l0^a == l1^b == linf^c. Throws ZeroCoordinate on a zero entry.
bool h_membership(const std::array<Rational, 3>& lambda, const Signature& sig);

enum class Locus { XZero, YZero, ZZero, Generic };

/// Geometric stabilizer order of the locus: a, b, c or 1.
Integer stabilizer_order(Locus locus, const Signature& sig);

}  // namespace fermat
