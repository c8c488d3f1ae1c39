#include <doctest.h>

#include <random>

#include "fermat/error.hpp"
#include "fermat/group_structure.hpp"
#include "fermat/smith.hpp"

using namespace fermat;

TEST_CASE("signature validation") {
  CHECK_THROWS_AS(Signature(1, 2, 3), Error);
  CHECK(Signature::parse("2,3,7") == Signature(2, 3, 7));
  CHECK_THROWS_AS(Signature::parse("2,3"), Error);
  CHECK_THROWS_AS(Signature::parse("2,x,7"), Error);
}

TEST_CASE("weight_vector") {
  auto w = weight_vector({2, 3, 7});
  CHECK(w.w == std::array<Integer, 3>{21, 14, 6});
  CHECK(w.m == 1);
  CHECK(w.d == 1);
  w = weight_vector({4, 4, 2});
  CHECK(w.w == std::array<Integer, 3>{1, 1, 2});
  CHECK(w.m == 8);
  CHECK(w.d == 2);
  w = weight_vector({5, 5, 5});
  CHECK(w.w == std::array<Integer, 3>{1, 1, 1});
  CHECK(w.m == 25);
  CHECK(w.d == 5);
  // the (p,p,p) weight agrees with the kernel route
  CHECK(kernel_basis(m_matrix(5, 5, 5)).at(0) == std::vector<Integer>{1, 1, 1});
}

TEST_CASE("weight identities") {
  for (long a = 2; a <= 30; ++a)
    for (long b = 2; b <= 30; ++b)
      for (long c = 2; c <= 30; ++c) {
        const Signature sig(a, b, c);
        const WeightData w = weight_vector(sig);
        const Integer l = lcm_triple(a, b, c);
        REQUIRE(a * w.w[0] == l);
        REQUIRE(b * w.w[1] == l);
        REQUIRE(c * w.w[2] == l);
        REQUIRE(gcd(gcd(w.w[0], w.w[1]), w.w[2]) == 1);
        REQUIRE(mpz_divisible_p(w.m.get_mpz_t(), w.d.get_mpz_t()));
        REQUIRE(w.m / w.d * w.d == w.m);
      }
}

TEST_CASE("triangle_abelianization") {
  CHECK(triangle_abelianization({4, 4, 2}) == std::vector<Integer>{2, 4});
  CHECK(triangle_abelianization({2, 3, 7}).empty());
  CHECK(triangle_abelianization({7, 7, 7}) == std::vector<Integer>{7, 7});
}

TEST_CASE("h_structure") {
  auto h = h_structure({2, 3, 7});
  CHECK(h.torus_rank == 1);
  CHECK(h.torsion.empty());
  h = h_structure({7, 7, 7});
  CHECK(h.torus_rank == 1);
  CHECK(h.torsion == std::vector<Integer>{7, 7});
  h = h_structure({4, 4, 2});
  CHECK(h.torsion == std::vector<Integer>{2, 4});

  // M-matrix and J-matrix routes agree; torsion order is m.
  for (long a = 2; a <= 12; ++a)
    for (long b = 2; b <= 12; ++b)
      for (long c = 2; c <= 12; ++c) {
        const Signature sig(a, b, c);
        const HStructure hs = h_structure(sig);
        REQUIRE(hs.torus_rank == 1);
        REQUIRE(hs.torsion == triangle_abelianization(sig));
        Integer order = 1;
        for (const auto& t : hs.torsion) order *= t;
        REQUIRE(order == weight_vector(sig).m);
      }
}

TEST_CASE("h_membership") {
  const Signature s237(2, 3, 7);
  const auto w = weight_vector(s237);
  const Rational q = make_rational(3, 2);
  CHECK(h_membership({pow(q, to_ulong(w.w[0])), pow(q, to_ulong(w.w[1])), pow(q, to_ulong(w.w[2]))}, s237));
  CHECK(h_membership({Rational(-1), Rational(1), Rational(1)}, {4, 4, 2}));
  CHECK_FALSE(h_membership({Rational(2), Rational(2), Rational(2)}, s237));
  try {
    h_membership({Rational(0), Rational(1), Rational(1)}, s237);
    FAIL("expected ZeroCoordinate");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroCoordinate);
  }

  // Subgroup property on random members of G_m(w) twisted by +-1 where allowed.
  const Signature s442(4, 4, 2);
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> part(-6, 6);
  auto random_member = [&] {
    long n = part(rng), d = part(rng);
    if (n == 0) n = 1;
    if (d == 0) d = 2;
    Rational l = make_rational(n, d);
    int e0 = (rng() & 1) ? -1 : 1, e1 = (rng() & 1) ? -1 : 1, e2 = (rng() & 1) ? -1 : 1;
    return std::array<Rational, 3>{Rational(e0 * l), Rational(e1 * l), Rational(e2 * l * l)};
  };
  for (int i = 0; i < 200; ++i) {
    auto x = random_member(), y = random_member();
    REQUIRE(h_membership(x, s442));
    REQUIRE(h_membership(y, s442));
    std::array<Rational, 3> prod, inv;
    for (int k = 0; k < 3; ++k) {
      prod[k] = x[k] * y[k];
      inv[k] = 1 / x[k];
    }
    REQUIRE(h_membership(prod, s442));
    REQUIRE(h_membership(inv, s442));
  }
}

TEST_CASE("stabilizer_order") {
  CHECK(stabilizer_order(Locus::XZero, {4, 4, 2}) == 4);
  CHECK(stabilizer_order(Locus::Generic, {4, 4, 2}) == 1);
  CHECK(stabilizer_order(Locus::Generic, {2, 3, 7}) == 1);
  CHECK(stabilizer_order(Locus::ZZero, {2, 3, 7}) == 7);
  CHECK(stabilizer_order(Locus::YZero, {2, 3, 7}) == 3);
}
