#include "fermat/gfe.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "fermat/error.hpp"

namespace fermat {

GFE::GFE(Signature sig, const Integer& A, const Integer& B, const Integer& C)
    : sig_(std::move(sig)), A_(A), B_(B), C_(C) {
  if (A == 0 || B == 0 || C == 0)
    throw Error(ErrorCode::InvalidInput, "GFE coefficients must be nonzero");
}

Integer GFE::evaluate(const Integer& x, const Integer& y, const Integer& z) const {
  return A_ * pow(x, to_ulong(sig_.a())) + B_ * pow(y, to_ulong(sig_.b())) +
         C_ * pow(z, to_ulong(sig_.c()));
}

std::string GFE::to_string() const {
  return A_.get_str() + "*x^" + sig_.a().get_str() + " + " + B_.get_str() + "*y^" +
         sig_.b().get_str() + " + " + C_.get_str() + "*z^" + sig_.c().get_str() + " = 0";
}

std::strong_ordering operator<=>(const PrimitiveSolution& l, const PrimitiveSolution& r) {
  if (int c = cmp(l.x, r.x); c != 0) return c <=> 0;
  if (int c = cmp(l.y, r.y); c != 0) return c <=> 0;
  return cmp(l.z, r.z) <=> 0;
}

SRing bad_prime_set(const GFE& f, const FactorConfig& config) {
  const Signature& s = f.signature();
  Integer n = s.a() * s.b() * s.c() * f.A() * f.B() * f.C();
  return SRing(prime_divisors(n, config));
}

std::vector<unsigned long> auxiliary_primes(const GFE& f, unsigned max_count) {
  constexpr unsigned long kSearchLimit = 1'000'000;
  const Signature& s = f.signature();
  const Integer level = lcm_triple(s.a(), s.b(), s.c());
  const Integer bad = s.a() * s.b() * s.c() * f.A() * f.B() * f.C();
  std::vector<unsigned long> out;
  if (level > kSearchLimit) return out;
  const unsigned long step = level.get_ui();
  for (unsigned long p = step + 1; p < kSearchLimit && out.size() < max_count; p += step) {
    if (!is_probable_prime(Integer(p))) continue;
    if (mpz_divisible_ui_p(bad.get_mpz_t(), p)) continue;
    out.push_back(p);
  }
  return out;
}

namespace {

using i128 = __int128;

// |v| < 2^127 is guaranteed by the caller.
i128 to_i128(const Integer& v) {
  unsigned long long words[2] = {0, 0};
  std::size_t count = 0;
  mpz_export(words, &count, -1, sizeof(words[0]), 0, 0, v.get_mpz_t());
  const auto u = (static_cast<unsigned __int128>(words[1]) << 64) | words[0];
  return v < 0 ? -static_cast<i128>(u) : static_cast<i128>(u);
}

// Arithmetic shims so the enumeration kernel runs on either __int128 (when
// every term fits) or GMP integers.
i128 power_term(const i128& coeff, long base, unsigned long e, i128*) {
  i128 r = coeff;
  for (unsigned long i = 0; i < e; ++i) r *= base;
  return r;
}
Integer power_term(const Integer& coeff, long base, unsigned long e, Integer*) {
  return coeff * pow(Integer(base), e);
}
unsigned long mod_small(const i128& v, unsigned long p) {
  i128 r = v % static_cast<i128>(p);
  return static_cast<unsigned long>(r < 0 ? r + p : r);
}
unsigned long mod_small(const Integer& v, unsigned long p) {
  return mpz_fdiv_ui(v.get_mpz_t(), p);
}
i128 coefficient(const Integer& c, i128*) { return to_i128(c); }
Integer coefficient(const Integer& c, Integer*) { return c; }

struct SieveTable {
  unsigned long p;
  std::vector<unsigned long> x_res;  // A x^a mod p, indexed like xs
  std::vector<unsigned long> y_res;
  std::vector<char> z_ok;  // residue r admits z with C z^c = r mod p
};

unsigned long powmod(unsigned long base, unsigned long e, unsigned long p) {
  unsigned long long r = 1 % p, b = base % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<unsigned long>(r);
}

template <class T>
std::vector<PrimitiveSolution> enumerate_kernel(const GFE& f, long bound,
                                                const EnumerationOptions& options) {
  const unsigned long ea = to_ulong(f.signature().a());
  const unsigned long eb = to_ulong(f.signature().b());
  const unsigned long ec = to_ulong(f.signature().c());
  const T A = coefficient(f.A(), static_cast<T*>(nullptr));
  const T B = coefficient(f.B(), static_cast<T*>(nullptr));
  const T C = coefficient(f.C(), static_cast<T*>(nullptr));
  const std::size_t width = static_cast<std::size_t>(2 * bound + 1);

  std::vector<T> ax(width), by(width);
  std::vector<std::pair<T, long>> zs(width);
  for (std::size_t i = 0; i < width; ++i) {
    const long v = static_cast<long>(i) - bound;
    ax[i] = power_term(A, v, ea, static_cast<T*>(nullptr));
    by[i] = power_term(B, v, eb, static_cast<T*>(nullptr));
    zs[i] = {power_term(C, v, ec, static_cast<T*>(nullptr)), v};
  }
  std::sort(zs.begin(), zs.end());

  std::vector<SieveTable> sieve;
  if (options.presieve) {
    for (unsigned long p : auxiliary_primes(f, options.max_aux_primes)) {
      SieveTable t{p, std::vector<unsigned long>(width), std::vector<unsigned long>(width),
                   std::vector<char>(p, 0)};
      const unsigned long cp = mod_small(C, p);
      for (unsigned long r = 0; r < p; ++r)
        t.z_ok[static_cast<unsigned long long>(cp) * powmod(r, ec, p) % p] = 1;
      for (std::size_t i = 0; i < width; ++i) {
        t.x_res[i] = mod_small(ax[i], p);
        t.y_res[i] = mod_small(by[i], p);
      }
      sieve.push_back(std::move(t));
    }
  }

  auto scan = [&](std::size_t from, std::size_t to, std::vector<PrimitiveSolution>& out) {
    for (std::size_t i = from; i < to; ++i) {
      const long x = static_cast<long>(i) - bound;
      for (std::size_t j = 0; j < width; ++j) {
        bool pass = true;
        for (const auto& t : sieve) {
          const unsigned long r = (t.x_res[i] + t.y_res[j]) % t.p;
          if (!t.z_ok[(t.p - r) % t.p]) {
            pass = false;
            break;
          }
        }
        if (!pass) continue;
        const T target = -(ax[i] + by[j]);
        auto lo = std::lower_bound(zs.begin(), zs.end(), target,
                                   [](const auto& e, const T& v) { return e.first < v; });
        const long y = static_cast<long>(j) - bound;
        for (; lo != zs.end() && lo->first == target; ++lo) {
          const long z = lo->second;
          if (std::gcd(std::gcd(x, y), z) != 1) continue;
          out.push_back({Integer(x), Integer(y), Integer(z)});
        }
      }
    }
  };

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::min<std::size_t>(width, 64)));
  std::vector<std::vector<PrimitiveSolution>> parts(threads);
  std::vector<std::thread> workers;
  const std::size_t chunk = (width + threads - 1) / threads;
  for (unsigned k = 0; k < threads; ++k) {
    const std::size_t from = std::min(width, k * chunk);
    const std::size_t to = std::min(width, from + chunk);
    workers.emplace_back(scan, from, to, std::ref(parts[k]));
  }
  for (auto& w : workers) w.join();

  std::vector<PrimitiveSolution> all;
  for (auto& part : parts) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end());
  return all;
}

// Integer n-th roots of v, both signs for even n.
std::vector<Integer> all_roots(const Integer& v, unsigned long n) {
  auto r = is_perfect_nth_power(v, n);
  if (!r) return {};
  if (n % 2 == 0 && *r != 0) return {Integer(-*r), *r};
  return {*r};
}

}  // namespace

std::vector<PrimitiveSolution> enumerate_primitive_solutions(
    const GFE& f, const Integer& bound, const EnumerationOptions& options) {
  if (bound < 1) throw Error(ErrorCode::InvalidInput, "bound must be >= 1");
  if (bound > 1'000'000'000) throw Error(ErrorCode::InvalidInput, "bound too large to enumerate");
  const long b = bound.get_si();
  const Signature& s = f.signature();
  const Integer largest = abs(f.A()) * pow(bound, to_ulong(s.a())) +
                          abs(f.B()) * pow(bound, to_ulong(s.b())) +
                          abs(f.C()) * pow(bound, to_ulong(s.c()));
  if (largest < (Integer(1) << 125)) return enumerate_kernel<i128>(f, b, options);
  return enumerate_kernel<Integer>(f, b, options);
}

ProjPointQ j_map(const GFE& f, const PrimitiveSolution& sol) {
  if (sol.x == 0 && sol.z == 0)
    throw Error(ErrorCode::DegeneratePoint, "x and z both vanish");
  const Signature& s = f.signature();
  return ProjPointQ(-f.A() * pow(sol.x, to_ulong(s.a())), f.C() * pow(sol.z, to_ulong(s.c())));
}

std::vector<RecoveredSolution> recover_solutions(const ProjPointQ& q, const GFE& f,
                                                 const SRing& ring, bool search_units,
                                                 const FactorConfig& config) {
  const Signature& sig = f.signature();
  const auto cert = is_stack_point(q, sig, ring);
  if (!cert.accepted())
    throw Error(ErrorCode::NotAStackPoint, q.to_string() + " is not a stack point over " +
                                               ring.to_string() + ": " + cert.reason());
  const unsigned long ea = to_ulong(sig.a()), eb = to_ulong(sig.b()), ec = to_ulong(sig.c());

  std::vector<Integer> u0{1}, u1{1};
  if (search_units) {
    u0 = s_unit_reps(ring, ea).representatives;
    u1 = s_unit_reps(ring, eb).representatives;
  }

  // (-A' x^a, B' y^b, C' z^c) = eps * lambda * (s, s - t, t) where lambda is
  // the gcd of the three terms; primitivity forces lambda | A'B'C'.
  const Integer s = q.s(), diff = q.s() - q.t(), t = q.t();
  std::vector<RecoveredSolution> out;
  for (const auto& ua : u0) {
    for (const auto& ub : u1) {
      const Integer A = f.A() * ua, B = f.B() * ub, C = f.C();
      for (const auto& lambda : positive_divisors(A * B * C, config)) {
        for (int eps : {1, -1}) {
          const Integer scale = eps * lambda;
          const Integer xa = -scale * s, yb = scale * diff, zc = scale * t;
          if (!mpz_divisible_p(xa.get_mpz_t(), A.get_mpz_t()) ||
              !mpz_divisible_p(yb.get_mpz_t(), B.get_mpz_t()) ||
              !mpz_divisible_p(zc.get_mpz_t(), C.get_mpz_t()))
            continue;
          const auto xs = all_roots(Integer(xa / A), ea);
          const auto ys = all_roots(Integer(yb / B), eb);
          const auto zs = all_roots(Integer(zc / C), ec);
          for (const auto& x : xs)
            for (const auto& y : ys)
              for (const auto& z : zs) {
                if (gcd(gcd(x, y), z) != 1) continue;
                out.push_back({{x, y, z}, A, B, C, ua == 1 && ub == 1});
              }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    if (l.classical != r.classical) return l.classical;
    if (l.A != r.A) return l.A < r.A;
    if (l.B != r.B) return l.B < r.B;
    return l.solution < r.solution;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& l, const auto& r) {
                          return l.solution == r.solution && l.A == r.A && l.B == r.B;
                        }),
            out.end());
  return out;
}

InclusionReport verify_descent_inclusion(const GFE& f, const Integer& bound,
                                         const EnumerationOptions& options) {
  InclusionReport report;
  report.ring = bad_prime_set(f, options.factor);
  for (auto& sol : enumerate_primitive_solutions(f, bound, options)) {
    ProjPointQ image = j_map(f, sol);
    auto cert = is_stack_point(image, f.signature(), report.ring);
    if (!cert.accepted())
      report.violations.push_back("(" + sol.x.get_str() + "," + sol.y.get_str() + "," +
                                  sol.z.get_str() + ") -> " + image.to_string() + ": " +
                                  cert.reason());
    report.entries.push_back({std::move(sol), std::move(image), std::move(cert)});
  }
  return report;
}

}  // namespace fermat
