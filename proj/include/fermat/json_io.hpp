#pragma once

// JSON views of library values. Every number is written as a decimal
// string so arbitrary-precision values survive any consumer.

#include <json.hpp>

#include "fermat/belyi_stack.hpp"
#include "fermat/gfe.hpp"
#include "fermat/group_structure.hpp"
#include "fermat/quartic442.hpp"
#include "fermat/s_arith.hpp"
#include "fermat/smith.hpp"

namespace fermat::json {

using Json = nlohmann::ordered_json;

Json integer(const Integer& v);
Json rational(const Rational& v);
Json integers(const std::vector<Integer>& v);
Json matrix(const IntMatrix& m);
Json point(const ProjPointQ& q);
Json solution(const PrimitiveSolution& s);
Json solutions(const std::vector<PrimitiveSolution>& s);
Json curve_point(const CurvePoint& p);
Json certificate(const StackPointCertificate& c);
Json signature_class(const SignatureClass& c);
Json inclusion_report(const InclusionReport& r);
Json sieve_report(const SieveReport& r);

/// Reads a solution list written by solutions().
std::vector<PrimitiveSolution> parse_solutions(const Json& j);

}  // namespace fermat::json
