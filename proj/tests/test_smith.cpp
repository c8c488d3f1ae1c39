#include <doctest.h>

#include <random>

#include "fermat/smith.hpp"
#include "oracles.hpp"

using namespace fermat;

namespace {

oracle::Mat to_rows(const IntMatrix& m) {
  oracle::Mat out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

bool is_smith_form(const IntMatrix& d) {
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (r != c && d(r, c) != 0) return false;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < n && d(i + 1, i + 1) != 0 &&
        (d(i, i) == 0 || !mpz_divisible_p(d(i + 1, i + 1).get_mpz_t(), d(i, i).get_mpz_t())))
      return false;
  }
  return true;
}

void check_snf(const IntMatrix& a) {
  const SNFResult r = smith_normal_form(a);
  REQUIRE(r.U * a * r.V == r.D);
  REQUIRE(abs(r.U.determinant()) == 1);
  REQUIRE(abs(r.V.determinant()) == 1);
  REQUIRE(is_smith_form(r.D));
}

}  // namespace

TEST_CASE("snf of the M-matrix") {
  for (long a = 1; a <= 20; ++a)
    for (long b = 1; b <= 20; ++b)
      for (long c = 1; c <= 20; ++c) {
        const IntMatrix m = m_matrix(a, b, c);
        const SNFResult r = smith_normal_form(m);
        const Integer d = gcd(gcd(Integer(a), Integer(b)), Integer(c));
        const Integer mm = gcd(gcd(Integer(b * c), Integer(a * c)), Integer(a * b));
        const std::vector<Integer> expected{d, mm / d, 0};
        REQUIRE(r.diagonal() == expected);
        REQUIRE(r.U * m * r.V == r.D);
      }
}

TEST_CASE("snf of the J-matrix") {
  for (long a = 2; a <= 9; ++a)
    for (long b = 2; b <= 9; ++b)
      for (long c = 2; c <= 9; ++c) {
        const IntMatrix j = j_matrix(a, b, c);
        const SNFResult r = smith_normal_form(j);
        const Integer d = gcd(gcd(Integer(a), Integer(b)), Integer(c));
        const Integer mm = gcd(gcd(Integer(b * c), Integer(a * c)), Integer(a * b));
        REQUIRE(r.D.rows() == 4);
        REQUIRE(r.diagonal() == std::vector<Integer>{1, d, mm / d});
        for (std::size_t col = 0; col < 3; ++col) REQUIRE(r.D(3, col) == 0);
      }
}

TEST_CASE("snf of a zero matrix") {
  const IntMatrix z(2, 2);
  const SNFResult r = smith_normal_form(z);
  CHECK(r.D == z);
  CHECK(r.U == IntMatrix::identity(2));
  CHECK(r.V == IntMatrix::identity(2));
  CHECK(r.rank() == 0);
}

TEST_CASE("snf of random matrices") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> entry(-50, 50), dim(1, 6), sparse(0, 3);
  for (int iter = 0; iter < 1000; ++iter) {
    const std::size_t rows = static_cast<std::size_t>(dim(rng));
    const std::size_t cols = static_cast<std::size_t>(dim(rng));
    std::vector<Integer> e;
    const bool thin = iter % 4 == 0;  // rank-deficient and sparse cases
    for (std::size_t i = 0; i < rows * cols; ++i) e.emplace_back(thin && sparse(rng) ? 0 : entry(rng));
    IntMatrix a(rows, cols, e);
    if (thin && rows > 1)
      for (std::size_t c = 0; c < cols; ++c) a(rows - 1, c) = 2 * a(0, c);
    check_snf(a);
    if (rows * cols <= 16) {
      CAPTURE(iter);
      REQUIRE(smith_normal_form(a).diagonal() == oracle::snf_diagonal_by_minors(to_rows(a)));
    }
  }
}

TEST_CASE("invariant_factors") {
  auto f = invariant_factors(m_matrix(4, 4, 2));
  CHECK(f.factors == std::vector<Integer>{2, 4});
  CHECK(f.free_rank == 1);
  f = invariant_factors(m_matrix(2, 3, 7));
  CHECK(f.factors.empty());
  CHECK(f.free_rank == 1);
  f = invariant_factors(IntMatrix::identity(3));
  CHECK(f.factors.empty());
  CHECK(f.free_rank == 0);
}

TEST_CASE("kernel_basis") {
  auto k = kernel_basis(m_matrix(2, 3, 7));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<Integer>{21, 14, 6});
  k = kernel_basis(m_matrix(4, 4, 2));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<Integer>{1, 1, 2});
  CHECK(kernel_basis(IntMatrix::identity(2)).empty());

  std::mt19937 rng(99);
  std::uniform_int_distribution<long> entry(-9, 9), dim(1, 5);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
    std::vector<Integer> e;
    for (std::size_t i = 0; i < rows * cols; ++i) e.emplace_back(entry(rng));
    IntMatrix a(rows, cols, e);
    const auto basis = kernel_basis(a);
    REQUIRE(basis.size() == cols - smith_normal_form(a).rank());
    for (const auto& v : basis) {
      IntMatrix col(cols, 1, v);
      REQUIRE((a * col).is_zero());
      Integer content = 0;
      for (const auto& x : v) content = gcd(content, x);
      REQUIRE(content == 1);
      auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
      REQUIRE(*lead > 0);
    }
  }
}

TEST_CASE("matrix parsing") {
  const IntMatrix m = IntMatrix::parse("2,-3,0;0,3,-7;-2,0,7");
  CHECK(m == m_matrix(2, 3, 7));
  CHECK_THROWS(IntMatrix::parse("1,2;3"));
  CHECK_THROWS(IntMatrix::parse(""));
  CHECK_THROWS(IntMatrix::parse("1,a"));
}
