#include "fermat/json_io.hpp"

#include "fermat/error.hpp"

namespace fermat::json {

Json integer(const Integer& v) { return v.get_str(); }

Json rational(const Rational& v) { return v.get_str(); }

Json integers(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer(x));
  return out;
}

Json matrix(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json point(const ProjPointQ& q) { return Json::array({integer(q.s()), integer(q.t())}); }

Json solution(const PrimitiveSolution& s) {
  return Json::array({integer(s.x), integer(s.y), integer(s.z)});
}

Json solutions(const std::vector<PrimitiveSolution>& s) {
  Json out = Json::array();
  for (const auto& x : s) out.push_back(solution(x));
  return out;
}

Json curve_point(const CurvePoint& p) {
  if (p.at_infinity) return "O";
  return Json::array({rational(p.u), rational(p.v)});
}

namespace {

std::string_view status_name(StackPointStatus s) {
  switch (s) {
    case StackPointStatus::Marked: return "marked";
    case StackPointStatus::SmoothWithRoots: return "smooth-with-roots";
    case StackPointStatus::Rejected: return "rejected";
  }
  return "?";
}

}  // namespace

Json certificate(const StackPointCertificate& c) {
  Json out;
  out["point"] = point(c.point);
  out["status"] = status_name(c.status);
  if (c.marked) out["marked"] = to_string(*c.marked);
  if (c.roots) out["roots"] = integers({(*c.roots)[0], (*c.roots)[1], (*c.roots)[2]});
  if (!c.accepted()) out["reason"] = c.reason();
  return out;
}

Json signature_class(const SignatureClass& c) {
  Json out;
  out["chi"] = rational(c.chi);
  out["kind"] = to_string(c.kind);
  out["genus"] = c.genus ? integer(*c.genus) : Json(">= 2 (not computed)");
  if (c.degree) out["degree"] = integer(*c.degree);
  return out;
}

Json inclusion_report(const InclusionReport& r) {
  Json out;
  out["ring"] = integers(r.ring.primes());
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j;
    j["solution"] = solution(e.solution);
    j["image"] = point(e.image);
    j["certificate"] = certificate(e.certificate);
    entries.push_back(std::move(j));
  }
  out["entries"] = std::move(entries);
  out["violations"] = r.violations;
  out["ok"] = r.ok();
  return out;
}

Json sieve_report(const SieveReport& r) {
  Json out;
  out["unit_classes"] = integers(r.unit_classes);
  out["admissible_twists"] = integers(r.admissible);
  Json twists = Json::array();
  for (const auto& t : r.twists) {
    Json j;
    j["d"] = integer(t.d);
    j["admissible"] = t.admissible;
    j["point_source"] = t.torsion_only ? "torsion" : "height search";
    Json pts = Json::array(), imgs = Json::array();
    for (const auto& p : t.points) pts.push_back(curve_point(p));
    for (const auto& q : t.images) imgs.push_back(point(q));
    j["points"] = std::move(pts);
    j["images"] = std::move(imgs);
    twists.push_back(std::move(j));
  }
  out["twists"] = std::move(twists);
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    Json j;
    j["point"] = point(c.point);
    j["sources"] = c.sources;
    j["verdict"] = c.certificate.accepted() ? "accepted" : "rejected";
    j["certificate"] = certificate(c.certificate);
    j["recovered"] = solutions(c.recovered);
    cands.push_back(std::move(j));
  }
  out["candidates"] = std::move(cands);
  out["solutions"] = solutions(r.solutions);
  out["bound_check"] = integer(r.bound_check);
  out["enumerated"] = solutions(r.enumerated);
  out["assumptions"] = r.assumptions;
  return out;
}

std::vector<PrimitiveSolution> parse_solutions(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "solution list must be an array");
  std::vector<PrimitiveSolution> out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3)
      throw Error(ErrorCode::InvalidInput, "solutions are integer triples");
    out.push_back({parse_integer(t[0].get<std::string>()), parse_integer(t[1].get<std::string>()),
                   parse_integer(t[2].get<std::string>())});
  }
  return out;
}

}  // namespace fermat::json
