#include "fermat/group_structure.hpp"

#include <sstream>

#include "fermat/error.hpp"
#include "fermat/smith.hpp"

namespace fermat {

Signature::Signature(const Integer& a, const Integer& b, const Integer& c)
    : a_(a), b_(b), c_(c) {
  if (a < 2 || b < 2 || c < 2)
    throw Error(ErrorCode::InvalidInput,
                "signature entries must be >= 2, got " + to_string());
}

Signature Signature::parse(const std::string& text) {
  std::stringstream ss(text);
  std::string part;
  std::vector<Integer> v;
  while (std::getline(ss, part, ',')) v.push_back(parse_integer(part));
  if (v.size() != 3)
    throw Error(ErrorCode::InvalidInput, "signature needs three entries: '" + text + "'");
  return Signature(v[0], v[1], v[2]);
}

std::string Signature::to_string() const {
  return "(" + a_.get_str() + "," + b_.get_str() + "," + c_.get_str() + ")";
}

WeightData weight_vector(const Signature& sig) {
  const Integer &a = sig.a(), &b = sig.b(), &c = sig.c();
  WeightData out;
  out.d = gcd(gcd(a, b), c);
  out.m = gcd(gcd(b * c, a * c), a * b);
  out.w = {Integer(b * c / out.m), Integer(a * c / out.m), Integer(a * b / out.m)};
  return out;
}

std::vector<Integer> triangle_abelianization(const Signature& sig) {
  return invariant_factors(j_matrix(sig.a(), sig.b(), sig.c())).factors;
}

HStructure h_structure(const Signature& sig) {
  const IntMatrix m = m_matrix(sig.a(), sig.b(), sig.c());
  HStructure out;
  out.torus_rank = static_cast<int>(kernel_basis(m).size());
  out.torsion = invariant_factors(m).factors;
  return out;
}

bool h_membership(const std::array<Rational, 3>& lambda, const Signature& sig) {
  for (const auto& l : lambda)
    if (l == 0) throw Error(ErrorCode::ZeroCoordinate, "coordinates of H must be nonzero");
  const Rational p0 = pow(lambda[0], to_ulong(sig.a()));
  return p0 == pow(lambda[1], to_ulong(sig.b())) &&
         p0 == pow(lambda[2], to_ulong(sig.c()));
}

Integer stabilizer_order(Locus locus, const Signature& sig) {
  switch (locus) {
    case Locus::XZero: return sig.a();
    case Locus::YZero: return sig.b();
    case Locus::ZZero: return sig.c();
    case Locus::Generic: return 1;
  }
  return 1;
}

}  // namespace fermat
