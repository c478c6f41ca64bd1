#include <doctest.h>

#include "kreg/errors.hpp"
#include "kreg/matrix.hpp"
#include "kreg/numeric.hpp"
#include "kreg/rng.hpp"
#include "oracles.hpp"

using namespace kreg;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(i, j) = Rational(rows[i][j]);
  return m;
}

// The 4 x 7 evaluation matrix of (1, s, t, s^2, t^2, s^3, t^3) on the grid
// {1,2} x {1,2}, points in row-major order.
RationalMatrix grid_matrix() {
  auto f = [](long s, long t) {
    return std::vector<long>{1, s, t, s * s, t * t, s * s * s, t * t * t};
  };
  return from_rows({f(1, 1), f(1, 2), f(2, 1), f(2, 2)});
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(2, -4).den() == 2);
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational::parse("14") == Rational(14));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("a"), ParseError);
}

TEST_CASE("rank: identity and Vandermonde") {
  CHECK(rank(from_rows({{1, 0}, {0, 1}})) == 2);
  // Vandermonde at nodes 1, 2, 3 has nonzero determinant.
  CHECK(rank(from_rows({{1, 1, 1}, {1, 2, 4}, {1, 3, 9}})) == 3);
}

TEST_CASE("rank: grid configuration matrix") {
  // Row identity R11 - R12 - R21 + R22 = 0 drops the rank to 3.
  RationalMatrix g = grid_matrix();
  CHECK(oracles::naive_rank(g) == 3);
  CHECK(rank(g) == 3);
}

TEST_CASE("kernel_basis basics") {
  CHECK(kernel_basis(from_rows({{1, 0}, {0, 1}})).empty());

  auto b = kernel_basis(from_rows({{1, 1}}));
  REQUIRE(b.size() == 1);
  // Spans (1, -1).
  CHECK(b[0][0] * Rational(-1) == b[0][1]);

  auto left = kernel_basis(grid_matrix().transpose());
  REQUIRE(left.size() == 1);
  std::vector<Rational> expect{Rational(1), Rational(-1), Rational(-1), Rational(1)};
  CHECK(left[0] == expect);
}

TEST_CASE("rank_mod_p") {
  CHECK(rank_mod_p(from_rows({{1, 0}, {0, 1}}), 101) == 2);
  CHECK(rank_mod_p(from_rows({{2, 4}, {1, 2}}), 101) == 1);
  // Reduction can kill an entry: rank drops below the rational rank.
  CHECK(rank_mod_p(from_rows({{101, 0}, {0, 1}}), 101) == 1);
  CHECK(rank(from_rows({{101, 0}, {0, 1}})) == 2);

  RationalMatrix bad(1, 1);
  bad.at(0, 0) = Rational(1, 101);
  CHECK_THROWS_AS(rank_mod_p(bad, 101), BadPrimeError);
  CHECK_THROWS_AS(rank_mod_p(from_rows({{1}}), 100), NotPrimeError);
}

TEST_CASE("rank agrees with the naive oracle on random matrices") {
  Rng rng(2024);
  for (int it = 0; it < 200; ++it) {
    std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
    RationalMatrix m = oracles::random_matrix(rng, r, c, 9, 4);
    CHECK(rank(m) == oracles::naive_rank(m));
  }
}

TEST_CASE("miller-rabin primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(2147483647));
  CHECK(is_prime(2147483659ULL));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(2147483649ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to small bases
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial_capped(20, 10, 100) == std::nullopt);
  CHECK(binomial_capped(6, 3, 100).value() == 20);
}
