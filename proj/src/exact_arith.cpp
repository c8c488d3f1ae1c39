#include "fermat/exact_arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "fermat/error.hpp"

namespace fermat {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational pow(const Rational& base, unsigned long exp) {
  Rational r(pow(Integer(base.get_num()), exp), pow(Integer(base.get_den()), exp));
  r.canonicalize();
  return r;
}

unsigned long to_ulong(const Integer& v) {
  if (v < 0 || !v.fits_ulong_p())
    throw Error(ErrorCode::InvalidInput, "value out of range: " + v.get_str());
  return v.get_ui();
}

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p())
    throw Error(ErrorCode::InvalidInput, "value out of range: " + v.get_str());
  return v.get_si();
}

Integer lcm_triple(const Integer& a, const Integer& b, const Integer& c) {
  if (a < 1 || b < 1 || c < 1)
    throw Error(ErrorCode::InvalidInput, "lcm_triple expects positive entries");
  Integer m = gcd(gcd(b * c, a * c), a * b);
  return a * b * c / m;
}

Integer Factorization::product() const {
  Integer r = sign;
  for (const auto& [p, e] : factors) r *= pow(p, e);
  return r;
}

FactorConfig FactorConfig::from_environment() {
  FactorConfig config;
  if (const char* cap = std::getenv("FERMAT_FACTOR_WORK_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(cap, &end, 10);
    if (end != cap && *end == '\0' && v > 0) config.rho_iterations = v;
  }
  return config;
}

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

namespace {

// Brent's variant of Pollard rho on composite n. Returns a nontrivial
// factor or nullopt when the iteration budget runs out.
std::optional<Integer> brent_rho(const Integer& n, const Integer& c,
                                 const Integer& y0, unsigned long budget) {
  constexpr unsigned long kBatch = 128;
  Integer y = y0, x, ys, q = 1, g = 1;
  unsigned long r = 1, spent = 0;
  auto step = [&](Integer& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      unsigned long batch = std::min(kBatch, r - k);
      for (unsigned long i = 0; i < batch; ++i) {
        step(y);
        q *= abs(Integer(x - y));
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      g = gcd(q, n);
      k += batch;
      spent += batch;
      if (spent > budget) return std::nullopt;
    }
    r *= 2;
  }
  if (g == n) {
    // Batch overshot; backtrack one step at a time.
    do {
      step(ys);
      g = gcd(abs(Integer(x - ys)), n);
    } while (g == 1);
  }
  if (g == n) return std::nullopt;
  return g;
}

// Same iteration on machine words for n < 2^63.
std::optional<std::uint64_t> brent_rho_word(std::uint64_t n, std::uint64_t c,
                                            std::uint64_t y0, unsigned long budget) {
  using u128 = unsigned __int128;
  constexpr unsigned long kBatch = 128;
  auto step = [&](std::uint64_t v) {
    return static_cast<std::uint64_t>((static_cast<u128>(v) * v + c) % n);
  };
  auto diff = [](std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; };
  std::uint64_t y = y0, x = 0, ys = 0, q = 1, g = 1;
  unsigned long r = 1, spent = 0;
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      unsigned long batch = std::min(kBatch, r - k);
      for (unsigned long i = 0; i < batch; ++i) {
        y = step(y);
        q = static_cast<std::uint64_t>(static_cast<u128>(q) * diff(x, y) % n);
      }
      g = std::gcd(q, n);
      k += batch;
      spent += batch;
      if (spent > budget) return std::nullopt;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = step(ys);
      g = std::gcd(diff(x, ys), n);
    } while (g == 1);
  }
  if (g == n) return std::nullopt;
  return g;
}

void split(const Integer& n, const FactorConfig& config, std::mt19937_64& rng,
           std::map<Integer, unsigned long>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  if (Integer r; mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
      if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k)) {
        std::map<Integer, unsigned long> sub;
        split(r, config, rng, sub);
        for (const auto& [p, e] : sub) out[p] += e * k;
        return;
      }
    }
  }
  for (unsigned attempt = 0; attempt < config.rho_attempts; ++attempt) {
    Integer c = Integer(static_cast<unsigned long>(rng() >> 1)) % (n - 1) + 1;
    Integer y0 = Integer(static_cast<unsigned long>(rng() >> 1)) % n;
    std::optional<Integer> f;
    if (n < (Integer(1) << 63)) {
      if (auto w = brent_rho_word(n.get_ui(), c.get_ui(), y0.get_ui(), config.rho_iterations))
        f = Integer(static_cast<unsigned long>(*w));
    } else {
      f = brent_rho(n, c, y0, config.rho_iterations);
    }
    if (f) {
      split(*f, config, rng, out);
      split(n / *f, config, rng, out);
      return;
    }
  }
  throw Error(ErrorCode::WorkLimitExceeded,
              "no factor of " + n.get_str() + " found within the work cap");
}

}  // namespace

Factorization factorize(const Integer& n, const FactorConfig& config) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "cannot factor zero");
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > config.max_bits)
    throw Error(ErrorCode::WorkLimitExceeded,
                "input exceeds the factorization size bound");
  Factorization f;
  f.sign = n < 0 ? -1 : 1;
  Integer m = abs(n);
  std::map<Integer, unsigned long> found;
  unsigned long p = 2;
  if (m.fits_ulong_p()) {
    unsigned long small = m.get_ui();
    for (; p <= config.trial_bound && p * p <= small; p += (p == 2 ? 1 : 2)) {
      while (small % p == 0) {
        ++found[Integer(p)];
        small /= p;
      }
    }
    m = small;
  } else {
    for (; p <= config.trial_bound && m >= p * p; p += (p == 2 ? 1 : 2)) {
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        ++found[Integer(p)];
        m /= p;
      }
    }
  }
  // No factor below p remains, so a cofactor under p^2 is prime.
  if (m > 1 && m < Integer(p) * p) {
    ++found[m];
    m = 1;
  }
  if (m > 1) {
    std::mt19937_64 rng(config.seed);
    split(m, config, rng, found);
  }
  for (const auto& [p, e] : found) f.factors.push_back({p, e});
  return f;
}

std::vector<Integer> prime_divisors(const Integer& n, const FactorConfig& config) {
  std::vector<Integer> out;
  for (const auto& pp : factorize(n, config).factors) out.push_back(pp.prime);
  return out;
}

std::vector<Integer> positive_divisors(const Integer& n,
                                       const FactorConfig& config) {
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factorize(n, config).factors) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned long k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::optional<Integer> is_perfect_nth_power(const Integer& v, unsigned long n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "exponent must be positive");
  if (n == 1) return v;
  if (v < 0 && n % 2 == 0) return std::nullopt;
  Integer r;
  Integer mag = abs(v);
  if (!mpz_root(r.get_mpz_t(), mag.get_mpz_t(), n)) return std::nullopt;
  if (v < 0) r = -r;
  return r;
}

ProjPointQ::ProjPointQ(const Integer& s, const Integer& t) {
  if (s == 0 && t == 0)
    throw Error(ErrorCode::ZeroPoint, "(0,0) is not a projective point");
  Integer g = gcd(s, t);
  s_ = s / g;
  t_ = t / g;
  if (t_ < 0 || (t_ == 0 && s_ < 0)) {
    s_ = -s_;
    t_ = -t_;
  }
}

std::string ProjPointQ::to_string() const {
  return s_.get_str() + ":" + t_.get_str();
}

std::strong_ordering operator<=>(const ProjPointQ& a, const ProjPointQ& b) {
  if (int c = cmp(a.s_, b.s_); c != 0) return c <=> 0;
  return cmp(a.t_, b.t_) <=> 0;
}

ProjPointQ normalize_projective(const Integer& s, const Integer& t) {
  return ProjPointQ(s, t);
}

Integer intersection_ideal(const ProjPointQ& p, const ProjPointQ& q) {
  // P = (c:d), Q = (a:b)
  return abs(Integer(q.s() * p.t() - q.t() * p.s()));
}

Integer parse_integer(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '+') body.erase(0, 1);
  std::size_t digits_from = (!body.empty() && body.front() == '-') ? 1 : 0;
  if (body.size() == digits_from ||
      !std::all_of(body.begin() + digits_from, body.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw Error(ErrorCode::InvalidInput, "malformed integer '" + text + "'");
  return Integer(body, 10);
}

}  // namespace fermat
