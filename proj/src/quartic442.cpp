#include "fermat/quartic442.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fermat/error.hpp"

namespace fermat {

std::string CurvePoint::to_string() const {
  if (at_infinity) return "O";
  return "(" + u.get_str() + "," + v.get_str() + ")";
}

bool operator<(const CurvePoint& l, const CurvePoint& r) {
  if (l.at_infinity != r.at_infinity) return l.at_infinity;
  if (l.at_infinity) return false;
  if (l.u != r.u) return l.u < r.u;
  return l.v < r.v;
}

TwistedCurve twist_curve(const Integer& d) {
  if (d == 0) throw Error(ErrorCode::SingularCurve, "E_0: v^2 = u^3 is singular");
  return {d};
}

bool on_curve(const TwistedCurve& e, const CurvePoint& p) {
  if (p.at_infinity) return true;
  return p.v * p.v == p.u * p.u * p.u - e.d * p.u;
}

CurvePoint negate(const CurvePoint& p) {
  if (p.at_infinity) return p;
  return CurvePoint::affine(p.u, -p.v);
}

CurvePoint add(const TwistedCurve& e, const CurvePoint& p, const CurvePoint& q) {
  if (p.at_infinity) return q;
  if (q.at_infinity) return p;
  Rational slope;
  if (p.u == q.u) {
    // Vertical chord, or the tangent at a 2-torsion point.
    if (p.v != q.v || p.v == 0) return CurvePoint::infinity();
    slope = (3 * p.u * p.u - e.d) / (2 * p.v);
  } else {
    slope = (q.v - p.v) / (q.u - p.u);
  }
  Rational u = slope * slope - p.u - q.u;
  Rational v = slope * (p.u - u) - p.v;
  u.canonicalize();
  v.canonicalize();
  return CurvePoint::affine(std::move(u), std::move(v));
}

CurvePoint multiply(const TwistedCurve& e, const CurvePoint& p, unsigned long n) {
  CurvePoint acc = CurvePoint::infinity(), base = p;
  while (n) {
    if (n & 1) acc = add(e, acc, base);
    base = add(e, base, base);
    n >>= 1;
  }
  return acc;
}

ProjPointQ belyi_eval(const TwistedCurve& e, const CurvePoint& p) {
  // At O the local parameter u/v has w ~ (u/v)^3, so
  // (u^2 : u^2 - d w^2) -> (1 : 1).
  if (p.at_infinity) return ProjPointQ::one();
  const Integer num = p.u.get_num(), den = p.u.get_den();
  return ProjPointQ(num * num, num * num - e.d * den * den);
}

namespace {

constexpr unsigned long kMaxTorsionOrder = 12;  // Mazur

bool has_finite_order(const TwistedCurve& e, const CurvePoint& p) {
  CurvePoint acc = p;
  for (unsigned long k = 1; k <= kMaxTorsionOrder; ++k) {
    if (acc.at_infinity) return true;
    acc = add(e, acc, p);
  }
  return false;
}

}  // namespace

std::vector<CurvePoint> torsion_points(const TwistedCurve& e, const FactorConfig& config) {
  std::set<CurvePoint> found{CurvePoint::infinity()};
  auto consider = [&](const Integer& u, const Integer& v) {
    CurvePoint p = CurvePoint::affine(Rational(u), Rational(v));
    if (on_curve(e, p) && has_finite_order(e, p)) found.insert(p);
  };
  // v = 0: roots of u (u^2 - d).
  consider(0, 0);
  if (auto r = is_perfect_nth_power(e.d, 2)) {
    consider(*r, 0);
    consider(-*r, 0);
  }
  // v != 0: v^2 divides 4 d^3 and u is an integer root of u^3 - d u - v^2.
  const Integer disc = abs(Integer(4 * pow(e.d, 3)));
  for (const auto& sq : positive_divisors(disc, config)) {
    auto v = is_perfect_nth_power(sq, 2);
    if (!v) continue;
    for (const auto& k : positive_divisors(sq, config)) {
      for (const Integer& u : {k, Integer(-k)}) {
        if (u * u * u - e.d * u != sq) continue;
        consider(u, *v);
        consider(u, -*v);
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<CurvePoint> rational_points_bounded(const TwistedCurve& e, const Integer& height) {
  if (height < 1) throw Error(ErrorCode::InvalidInput, "height must be >= 1");
  const long h = to_int64(height);
  std::vector<CurvePoint> out{CurvePoint::infinity()};
  for (long k = 1; k <= h; ++k) {
    for (long n = -h; n <= h; ++n) {
      if (std::gcd(n, k) != 1) continue;
      // v^2 = (n^3 - d n k^2) / k^3 is a rational square iff N k is a square.
      const Integer num = Integer(n) * n * n - e.d * n * k * k;
      auto w = is_perfect_nth_power(Integer(num * k), 2);
      if (!w) continue;
      const Rational u = make_rational(n, k);
      const Rational v = make_rational(*w, Integer(k) * k);
      out.push_back(CurvePoint::affine(u, v));
      if (*w != 0) out.push_back(CurvePoint::affine(u, -v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> admissible_twists(const UnitClassGroup& reps) {
  std::vector<Integer> out;
  for (const auto& d : reps.representatives)
    if (d < 0 && is_perfect_nth_power(Integer(-d), 2)) out.push_back(d);
  return out;
}

GFE fermat_442() { return GFE(Signature(4, 4, 2), 1, 1, -1); }

SieveReport sieve_442(const Integer& bound_check, const SieveOptions& options) {
  if (bound_check < 1) throw Error(ErrorCode::InvalidInput, "bound_check must be >= 1");
  const GFE f = fermat_442();
  const Signature& sig = f.signature();
  const SRing integers;

  SieveReport report;
  report.bound_check = bound_check;
  const UnitClassGroup classes = s_unit_reps(SRing({2}), 4);
  report.unit_classes = classes.representatives;
  report.admissible = admissible_twists(classes);
  report.assumptions.push_back(
      "E_-1(Q) and E_-4(Q) have rank 0, so their rational points are the torsion points");

  std::map<ProjPointQ, std::vector<std::string>> sources;
  for (const auto& m : {MarkedPoint::Zero, MarkedPoint::One, MarkedPoint::Infinity})
    sources[point_of(m)].push_back("marked");

  for (const auto& d : classes.representatives) {
    const bool admissible =
        std::find(report.admissible.begin(), report.admissible.end(), d) != report.admissible.end();
    if (!admissible && !options.include_all_twists) continue;
    TwistRecord rec;
    rec.d = d;
    rec.admissible = admissible;
    const TwistedCurve e = twist_curve(d);
    if (admissible) {
      rec.points = torsion_points(e, options.enumeration.factor);
    } else {
      rec.torsion_only = false;
      rec.points = rational_points_bounded(e, options.twist_height);
    }
    for (const auto& p : rec.points) {
      ProjPointQ image = belyi_eval(e, p);
      sources[image].push_back("d=" + d.get_str() + " P=" + p.to_string());
      rec.images.push_back(std::move(image));
    }
    report.twists.push_back(std::move(rec));
  }

  std::set<PrimitiveSolution> solutions;
  for (auto& [point, from] : sources) {
    SieveCandidate cand{point, from, is_stack_point(point, sig, integers), {}};
    if (cand.certificate.accepted()) {
      for (const auto& r : recover_solutions(point, f, integers, false)) {
        cand.recovered.push_back(r.solution);
        solutions.insert(r.solution);
      }
    }
    report.candidates.push_back(std::move(cand));
  }
  report.solutions.assign(solutions.begin(), solutions.end());

  report.enumerated = enumerate_primitive_solutions(f, bound_check, options.enumeration);
  if (report.enumerated != report.solutions)
    throw Error(ErrorCode::PipelineMismatch,
                "sieve found " + std::to_string(report.solutions.size()) +
                    " solutions but enumeration up to " + bound_check.get_str() + " found " +
                    std::to_string(report.enumerated.size()));
  return report;
}

}  // namespace fermat
