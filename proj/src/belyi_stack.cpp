#include "fermat/belyi_stack.hpp"

#include "fermat/error.hpp"

namespace fermat {

std::string_view to_string(MarkedPoint m) {
  switch (m) {
    case MarkedPoint::Zero: return "0";
    case MarkedPoint::One: return "1";
    case MarkedPoint::Infinity: return "inf";
  }
  return "?";
}

std::optional<MarkedPoint> marked_point_of(const ProjPointQ& q) {
  if (q == ProjPointQ::zero()) return MarkedPoint::Zero;
  if (q == ProjPointQ::one()) return MarkedPoint::One;
  if (q == ProjPointQ::infinity()) return MarkedPoint::Infinity;
  return std::nullopt;
}

ProjPointQ point_of(MarkedPoint m) {
  switch (m) {
    case MarkedPoint::Zero: return ProjPointQ::zero();
    case MarkedPoint::One: return ProjPointQ::one();
    case MarkedPoint::Infinity: return ProjPointQ::infinity();
  }
  return ProjPointQ::zero();
}

std::optional<RootPointResult> root_point_test(const ProjPointQ& p,
                                               const ProjPointQ& q,
                                               unsigned long n,
                                               const SRing& ring) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "root multiplicity must be positive");
  RootPointResult out;
  if (p == q) {
    out.coincides = true;
    out.automorphism_order = roots_of_unity_count(n);
    return out;
  }
  auto root = is_nth_power_ideal(intersection_ideal(p, q), n, ring);
  if (!root) return std::nullopt;
  out.root = *root;
  return out;
}

std::string StackPointCertificate::reason() const {
  switch (failed) {
    case RejectedCondition::None: return {};
    case RejectedCondition::ZeroCondition: return "sR is not an a-th power ideal";
    case RejectedCondition::OneCondition: return "(s-t)R is not a b-th power ideal";
    case RejectedCondition::InfinityCondition: return "tR is not a c-th power ideal";
  }
  return {};
}

StackPointCertificate is_stack_point(const ProjPointQ& q, const Signature& sig,
                                     const SRing& ring) {
  StackPointCertificate cert;
  cert.point = q;
  if (auto m = marked_point_of(q)) {
    cert.status = StackPointStatus::Marked;
    cert.marked = m;
    return cert;
  }
  // s, s - t, t are the intersection ideals with 0, 1, infinity.
  const std::array<Integer, 3> ideals{q.s(), Integer(q.s() - q.t()), q.t()};
  const std::array<unsigned long, 3> exps{to_ulong(sig.a()), to_ulong(sig.b()),
                                          to_ulong(sig.c())};
  constexpr std::array<RejectedCondition, 3> conditions{
      RejectedCondition::ZeroCondition, RejectedCondition::OneCondition,
      RejectedCondition::InfinityCondition};
  std::array<Integer, 3> roots;
  for (std::size_t i = 0; i < 3; ++i) {
    auto g = is_nth_power_ideal(ideals[i], exps[i], ring);
    if (!g) {
      cert.status = StackPointStatus::Rejected;
      cert.failed = conditions[i];
      return cert;
    }
    roots[i] = *g;
  }
  cert.status = StackPointStatus::SmoothWithRoots;
  cert.roots = roots;
  return cert;
}

unsigned long stack_point_automorphism_order(const ProjPointQ& q, const Signature& sig,
                                             const SRing& ring) {
  const auto cert = is_stack_point(q, sig, ring);
  if (!cert.accepted())
    throw Error(ErrorCode::NotAStackPoint, q.to_string() + " is not a stack point: " + cert.reason());
  if (!cert.marked) return 1;
  switch (*cert.marked) {
    case MarkedPoint::Zero: return roots_of_unity_count(to_ulong(sig.a()));
    case MarkedPoint::One: return roots_of_unity_count(to_ulong(sig.b()));
    case MarkedPoint::Infinity: return roots_of_unity_count(to_ulong(sig.c()));
  }
  return 1;
}

Rational euler_characteristic(const Signature& sig) {
  Rational chi = make_rational(1, sig.a()) + make_rational(1, sig.b()) +
                 make_rational(1, sig.c()) - 1;
  chi.canonicalize();
  return chi;
}

std::string_view to_string(SignatureKind k) {
  switch (k) {
    case SignatureKind::Spherical: return "spherical";
    case SignatureKind::Euclidean: return "euclidean";
    case SignatureKind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

SignatureClass classify_signature(const Signature& sig) {
  SignatureClass out;
  out.chi = euler_characteristic(sig);
  const int sign = sgn(out.chi);
  if (sign > 0) {
    out.kind = SignatureKind::Spherical;
    out.genus = Integer(0);
    Rational deg = Rational(2) / out.chi;
    deg.canonicalize();
    // 2/chi is integral for every spherical triple.
    out.degree = Integer(deg.get_num());
  } else if (sign == 0) {
    out.kind = SignatureKind::Euclidean;
    out.genus = Integer(1);
  } else {
    out.kind = SignatureKind::Hyperbolic;
  }
  return out;
}

}  // namespace fermat
