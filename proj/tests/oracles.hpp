#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the code paths it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "fermat/exact_arith.hpp"

namespace fermat::oracle {

using Mat = std::vector<std::vector<Integer>>;

inline Integer det_laplace(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Integer term = m[0][c] * det_laplace(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Smith diagonal from determinantal divisors: d_k = gcd of all k x k
/// minors, diagonal entry k = d_k / d_{k-1}. Length min(rows, cols).
inline std::vector<Integer> snf_diagonal_by_minors(const Mat& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<Integer> diag;
  Integer prev = 1;
  bool zero_from_here = false;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    if (zero_from_here) {
      diag.push_back(0);
      continue;
    }
    std::vector<std::vector<std::size_t>> rsets, csets;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rsets);
    subsets(cols, k, 0, cur, csets);
    Integer g = 0;
    for (const auto& rs : rsets)
      for (const auto& cs : csets) {
        Mat minor;
        for (auto r : rs) {
          std::vector<Integer> row;
          for (auto c : cs) row.push_back(a[r][c]);
          minor.push_back(std::move(row));
        }
        g = gcd(g, det_laplace(minor));
      }
    if (g == 0) {
      zero_from_here = true;
      diag.push_back(0);
      continue;
    }
    diag.push_back(g / prev);
    prev = g;
  }
  return diag;
}

/// Sieve-free triple loop over the box |x|,|y|,|z| <= bound.
inline std::vector<std::tuple<long, long, long>> brute_force_solutions(long a, long b, long c,
                                                                      long A, long B, long C,
                                                                      long bound) {
  auto ipow = [](long base, long e) {
    __int128 r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
  };
  std::vector<__int128> zc;
  for (long z = -bound; z <= bound; ++z) zc.push_back(C * ipow(z, c));
  std::vector<std::tuple<long, long, long>> out;
  for (long x = -bound; x <= bound; ++x) {
    const __int128 ax = A * ipow(x, a);
    for (long y = -bound; y <= bound; ++y) {
      const __int128 sum = ax + B * ipow(y, b);
      for (long z = -bound; z <= bound; ++z) {
        if (sum + zc[static_cast<std::size_t>(z + bound)] != 0) continue;
        if (std::gcd(std::gcd(x, y), z) != 1) continue;
        out.emplace_back(x, y, z);
      }
    }
  }
  return out;
}

/// Affine point on v^2 = u^3 - d u, or infinity.
struct Pt {
  bool inf = true;
  Rational u, v;
};

inline Pt add_points(const Integer& d, const Pt& p, const Pt& q) {
  if (p.inf) return q;
  if (q.inf) return p;
  Rational l;
  if (p.u == q.u) {
    if (p.v + q.v == 0) return {};
    l = (3 * p.u * p.u - d) / (2 * p.v);
  } else {
    l = (q.v - p.v) / (q.u - p.u);
  }
  Rational u = l * l - p.u - q.u;
  Rational v = -(p.v + l * (u - p.u));
  u.canonicalize();
  v.canonicalize();
  return {false, u, v};
}

/// Points with u = n/k^2, v = m/k^3 for |n| <= nb, 1 <= k <= kb, found by
/// integer search m^2 = n^3 - d n k^4; those of order <= 12 are returned.
inline std::set<std::pair<Rational, Rational>> small_height_torsion(const Integer& d, long nb,
                                                                   long kb) {
  std::set<std::pair<Rational, Rational>> torsion;
  for (long k = 1; k <= kb; ++k)
    for (long n = -nb; n <= nb; ++n) {
      if (std::gcd(n, k) != 1) continue;
      const Integer rhs = Integer(n) * n * n - d * n * pow(Integer(k), 4);
      if (rhs < 0) continue;
      Integer m = sqrt(rhs);
      if (m * m != rhs) continue;
      for (const Integer& mm : {m, Integer(-m)}) {
        Pt p{false, Rational(n) / pow(Integer(k), 2), Rational(mm) / pow(Integer(k), 3)};
        p.u.canonicalize();
        p.v.canonicalize();
        Pt acc = p;
        for (int order = 1; order <= 12; ++order) {
          if (acc.inf) {
            torsion.insert({p.u, p.v});
            break;
          }
          acc = add_points(d, acc, p);
        }
      }
    }
  return torsion;
}

/// #E(F_p) for v^2 = u^3 - d u by counting.
inline long count_points_mod(long d, long p) {
  long count = 1;
  std::vector<long> squares(static_cast<std::size_t>(p), 0);
  for (long v = 0; v < p; ++v) ++squares[static_cast<std::size_t>(v * v % p)];
  for (long u = 0; u < p; ++u) {
    long rhs = ((u * u % p * u - d % p * u) % p + 2 * p) % p;
    count += squares[static_cast<std::size_t>(rhs)];
  }
  return count;
}

}  // namespace fermat::oracle
