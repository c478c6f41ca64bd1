#include <doctest.h>

#include "kreg/bounds.hpp"
#include "kreg/errors.hpp"

using namespace kreg;

TEST_CASE("digit sums") {
  CHECK(digit_sum(6, 2) == 2);    // 110
  CHECK(digit_sum(9, 3) == 1);    // 100
  CHECK(digit_sum(1, 2) == 1);
  CHECK(digit_sum(64, 2) == 1);   // powers of two
  CHECK(digit_sum(8, 3) == 4);    // 22
  CHECK(digit_sum(0, 5) == 0);
  CHECK_THROWS_AS(digit_sum(6, 4), NotPrimeError);
}

TEST_CASE("lower bounds") {
  CHECK(lower_bound_min_n(2, 6).value == 10);  // 2k - digit_sum_2(k)
  CHECK(lower_bound_min_n(3, 4).value == 8);
  for (std::size_t k = 1; k <= 12; ++k)
    CHECK(lower_bound_min_n(1, k).value == k);
  // Monotone propagation: m=3, k=8 inherits the k=7 prime bound 19.
  CHECK(lower_bound_min_n(3, 8).value == 19);
  CHECK(lower_bound_min_n(3, 8).tag.find("monotone") != std::string::npos);
  // m neither prime power nor k prime: trivially propagated prime bound.
  CHECK(lower_bound_min_n(6, 10).value == 42);  // from m=5, k=10
}

TEST_CASE("upper bounds") {
  CHECK(upper_bound_min_n(3, 10).value == 36);  // (m+1)(k-1)
  CHECK(upper_bound_min_n(3, 4).value == 10);
  CHECK(upper_bound_min_n(2, 9).value == 17);
  CHECK(upper_bound_min_n(1, 7).value == 7);
  CHECK(upper_bound_min_n(5, 12).value == 66);  // beyond the small-k regime
}

TEST_CASE("bound monotonicity and consistency") {
  for (std::size_t m = 1; m <= 6; ++m) {
    std::size_t prev_k = 0;
    for (std::size_t k = 1; k <= 16; ++k) {
      std::size_t lo = lower_bound_min_n(m, k).value;
      std::size_t hi = upper_bound_min_n(m, k).value;
      CHECK(lo <= hi);
      CHECK(lo >= prev_k);
      prev_k = lo;
    }
  }
  for (std::size_t k = 1; k <= 16; ++k) {
    std::size_t prev_m = 0;
    for (std::size_t m = 1; m <= 6; ++m) {
      std::size_t lo = lower_bound_min_n(m, k).value;
      CHECK(lo >= prev_m);
      prev_m = lo;
    }
  }
}

TEST_CASE("prime k rows are tight in the small regime") {
  for (std::size_t k : {2, 3, 5, 7}) {
    for (std::size_t m = 1; m <= 2; ++m) {
      auto lo = lower_bound_min_n(m, k);
      auto hi = upper_bound_min_n(m, k);
      CHECK(lo.value == m * (k - 1) + 1);
      CHECK(hi.value == m * (k - 1) + 1);
    }
  }
}

TEST_CASE("reference table values for k <= 10, m <= 3") {
  // lower, upper per (k, m); 0-based by k-2 then m-1.
  struct Row { std::size_t k, lo1, hi1, lo2, hi2, lo3, hi3; };
  const Row rows[] = {
      {2, 2, 2, 3, 3, 4, 4},
      {3, 3, 3, 5, 5, 7, 7},
      {4, 4, 4, 7, 7, 8, 10},
      {5, 5, 5, 9, 9, 13, 13},
      {6, 6, 6, 10, 11, 14, 16},
      {7, 7, 7, 13, 13, 19, 19},
      {8, 8, 8, 15, 15, 19, 22},
      {9, 9, 9, 16, 17, 25, 25},
      {10, 10, 10, 18, 19, 26, 36},
  };
  for (const auto& r : rows) {
    CHECK(lower_bound_min_n(1, r.k).value == r.lo1);
    CHECK(upper_bound_min_n(1, r.k).value == r.hi1);
    CHECK(lower_bound_min_n(2, r.k).value == r.lo2);
    CHECK(upper_bound_min_n(2, r.k).value == r.hi2);
    CHECK(lower_bound_min_n(3, r.k).value == r.lo3);
    CHECK(upper_bound_min_n(3, r.k).value == r.hi3);
  }
}

TEST_CASE("hypersurface and codimension-c bounds") {
  CHECK(hypersurface_bound(4, 1, 5) == 20);   // (m+1)(k-1)
  CHECK(hypersurface_bound(3, 2, 3) == 10);   // (m+c)(k-1)
  CHECK(hypersurface_bound(5, 2, 20) == 119); // (m+1)k - 1
  CHECK(hypersurface_bound(1, 1, 12) == 22);   // m=1 keeps the first branch
  CHECK(hypersurface_bound(10, 1, 11) == 119); // (m+2)(k-1)-1 for 10<=k<=m+2
  CHECK_THROWS_AS(hypersurface_bound(3, 2, 2), DomainError);
}

TEST_CASE("table generator") {
  auto cells = bounds_table(10, {1, 2, 3});
  CHECK(cells.size() == 30);
  std::size_t tight = 0;
  for (const auto& c : cells) {
    CHECK(c.lower.value <= c.upper.value);
    CHECK(c.tight == (c.lower.value == c.upper.value));
    if (c.tight) ++tight;
    if (c.k == 4 && c.m == 2) {
      CHECK(c.lower.value == 7);
      CHECK(c.tight);
    }
    if (c.k == 9 && c.m == 3) {
      CHECK(c.lower.value == 25);
      CHECK(c.tight);
    }
    if (c.k == 6 && c.m == 3) {
      CHECK(c.lower.value == 14);
      CHECK(c.upper.value == 16);
      CHECK_FALSE(c.tight);
    }
  }
  CHECK(tight >= 20);
  CHECK_THROWS_AS(bounds_table(65, {1}), CapExceededError);

  // Text rendering marks tight cells.
  auto text = bounds_table_text(cells);
  CHECK(text.find("25*") != std::string::npos);
  CHECK(text.find("14..16") != std::string::npos);
}
