#include "fermat/s_arith.hpp"

#include <algorithm>
#include <sstream>

#include "fermat/error.hpp"

namespace fermat {

SRing::SRing(std::vector<Integer> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  for (const auto& p : primes_)
    if (!is_probable_prime(p))
      throw Error(ErrorCode::InvalidInput, p.get_str() + " is not prime");
}

SRing SRing::parse(const std::string& text) {
  std::vector<Integer> primes;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part.erase(std::remove_if(part.begin(), part.end(), ::isspace), part.end());
    if (part.empty()) continue;
    primes.push_back(parse_integer(part));
  }
  return SRing(std::move(primes));
}

bool SRing::contains(const Integer& p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

bool SRing::is_unit(const Integer& v) const {
  if (v == 0) return false;
  Integer rest = abs(v);
  for (const auto& p : primes_) mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
  return rest == 1;
}

SRing SRing::extended(const SRing& other) const {
  std::vector<Integer> all = primes_;
  all.insert(all.end(), other.primes_.begin(), other.primes_.end());
  return SRing(std::move(all));
}

std::string SRing::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i)
    out += (i ? "," : "") + primes_[i].get_str();
  return out + "}";
}

unsigned long valuation(const Integer& s, const Integer& p) {
  if (s == 0) throw Error(ErrorCode::InvalidInput, "valuation of zero");
  if (p < 2) throw Error(ErrorCode::InvalidInput, "valuation at a non-prime");
  Integer rest;
  return mpz_remove(rest.get_mpz_t(), s.get_mpz_t(), p.get_mpz_t());
}

UnitClassGroup s_unit_reps(const SRing& ring, unsigned long n) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "unit classes need n >= 2");
  UnitClassGroup out;
  out.n = n;
  std::vector<Integer> positive{1};
  for (const auto& p : ring.primes()) {
    std::vector<Integer> next;
    next.reserve(positive.size() * n);
    for (const auto& base : positive) {
      Integer pk = base;
      for (unsigned long e = 0; e < n; ++e, pk *= p) next.push_back(pk);
    }
    positive = std::move(next);
  }
  out.representatives = positive;
  if (n % 2 == 0)
    for (const auto& v : positive) out.representatives.push_back(-v);
  return out;
}

std::optional<Integer> is_nth_power_ideal(const Integer& s, unsigned long n,
                                          const SRing& ring) {
  if (s == 0) throw Error(ErrorCode::InvalidInput, "the zero ideal is excluded");
  if (n == 0) throw Error(ErrorCode::InvalidInput, "exponent must be positive");
  Integer rest = abs(s);
  for (const auto& p : ring.primes()) mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
  // rest is the positive part of s away from S, so J^n = sR exactly when
  // rest is an n-th power in Z.
  Integer root;
  if (!mpz_root(root.get_mpz_t(), rest.get_mpz_t(), n)) return std::nullopt;
  return root;
}

unsigned long roots_of_unity_count(unsigned long n) { return n % 2 == 0 ? 2 : 1; }

}  // namespace fermat
