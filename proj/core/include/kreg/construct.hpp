#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kreg/errors.hpp"
#include "kreg/regularity.hpp"

namespace kreg {

/// Known example maps, addressable by name:
///   vandermonde(k)        (1, t, ..., t^(k-1)),           k-regular
///   threereg(m)           (1, t1, t1^2, ..., tm, tm^2),   3-regular
///   monomial-nonreg-2-7   (1, s, t, s^2, t^2, s^3, t^3),  not 4-regular
///   fourreg-2-7           (1, s, t, s^2, s*t, t^2-s^3, t^3)
///   fourreg-3-10          (1, t, s, u, s*t, s*u, s^2-t*u, t^2-s^3, u^2-t^3, u^3)
///   fivereg-2-9           (1, s, t, s^2, s*t, t^2, t^3, s^3-t^4, s^4)
/// Throws UnknownExampleError for anything else.
PolyMap example_map(const std::string& name);

struct FixtureInfo {
  PolyMap map;
  std::size_t claimed_k = 0;
  Rational default_radius;  // 1 for global claims, 1/8 for local ones
};

/// example_map plus the verification defaults for the fixture.
FixtureInfo fixture(const std::string& name);

/// Names accepted by fixture() (parametrised entries listed with k=2..6 /
/// m=1..4 instantiations).
std::vector<std::string> fixture_names();

struct ConstructedMap {
  PolyMap map;            // linear kind, N+1 components
  std::size_t m = 0, k = 0, n = 0;
  std::string method = "veronese-projection";
  std::uint64_t projection_seed = 0;
  std::uint64_t attempts = 0;
  RegularityReport report;
  std::optional<std::string> infeasible_warning;
};

struct BudgetExhaustedError : Error {
  RegularityReport best_report;
  std::optional<std::string> infeasible_warning;
  BudgetExhaustedError(std::string what, RegularityReport best,
                       std::optional<std::string> warn)
      : Error(std::move(what)),
        best_report(std::move(best)),
        infeasible_warning(std::move(warn)) {}
};

struct ConstructOptions {
  std::uint64_t budget = 32;        // projection attempts
  std::uint64_t trials = 1000;      // verification trials per strategy
  Rational radius = Rational(1, 8); // verification ball radius
  std::uint64_t prime = 2147483647;
};

/// Projects the affine degree-(k-1) Veronese through a random rational linear
/// map onto n coordinates, prepends the constant 1 and keeps the first
/// candidate the checker passes.  `n` is the affine target dimension, so the
/// returned linear map has n+1 components.  Defaults to n = m(k-1) when
/// k <= 9 or m <= 2, else n = (m+1)(k-1) - 1.
ConstructedMap construct_k_regular(std::size_t m, std::size_t k,
                                   std::optional<std::size_t> n,
                                   std::uint64_t seed,
                                   const ConstructOptions& opts = {});

}  // namespace kreg
