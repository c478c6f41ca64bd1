#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kreg/matrix.hpp"
#include "kreg/polymap.hpp"
#include "kreg/rng.hpp"

namespace kreg {

/// Closed Euclidean ball with rational center and radius; membership is the
/// exact test |x - center|^2 <= radius^2.
struct DomainBall {
  std::vector<Rational> center;
  Rational radius;

  static DomainBall origin(std::size_t dim, const Rational& radius);
  bool contains(const std::vector<Rational>& point) const;
};

enum class Provenance { random, grid, cluster, user };
std::string provenance_name(Provenance p);

/// k pairwise distinct points in the domain.
struct PointConfiguration {
  std::vector<std::vector<Rational>> points;
  Provenance provenance = Provenance::user;

  bool pairwise_distinct() const;
};

/// k x N matrix whose i-th row is the image of the i-th point.
RationalMatrix evaluation_matrix(const PolyMap& f, const PointConfiguration& cfg);

struct StrategyStats {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
};

/// A certified counterexample: the kernel vector annihilates the rank-test
/// matrix of the configuration exactly (re-checkable with verify()).
struct Counterexample {
  PointConfiguration config;
  std::vector<Rational> kernel_vector;
  std::string strategy;
  std::uint64_t trial = 0;
};

struct RegularityReport {
  std::string map_id;
  MapKind kind = MapKind::linear;
  std::size_t k = 0;
  DomainBall domain;
  std::vector<StrategyStats> strategies;
  bool passed = false;
  std::optional<Counterexample> counterexample;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;

  /// Re-checks the stored certificate against the map; true when the stored
  /// kernel vector annihilates the evaluation matrix exactly and the matrix
  /// has rank < k.
  bool verify_counterexample(const PolyMap& f) const;

  /// Deterministic JSON form (schema 1).
  std::string to_json() const;
};

struct CheckOptions {
  std::uint64_t prime = 2147483647;  // fast rank certificate modulus
  std::string map_id = "map";
};

/// Probabilistic k-regularity check: random, grid, cluster and jet trial
/// batteries, all in exact arithmetic.  A counterexample is a proof of
/// failure on the domain; PASSED is evidence only.
RegularityReport check_regularity(const PolyMap& f, std::size_t k,
                                  const DomainBall& domain,
                                  std::uint64_t budget, std::uint64_t seed,
                                  const CheckOptions& opts = {});

// --- jet (curvilinear) probe ------------------------------------------------

/// Rank-deficient jet certificate: the arc through `base` with the stored
/// coefficient vectors produces a Taylor-coefficient matrix of rank < k.
struct JetCounterexample {
  std::vector<Rational> base;
  std::vector<std::vector<Rational>> arc_coeffs;  // degree 1..k-1 coefficients
  std::vector<Rational> kernel_vector;
  std::uint64_t arc_index = 0;
};

struct JetResult {
  bool passed = true;
  std::uint64_t arcs_run = 0;
  std::optional<JetCounterexample> counterexample;
};

/// For random polynomial arcs g with g(0) = base, forms the k x N matrix of
/// Taylor coefficients of f(g(t)) up to order k-1 and requires rank k.
JetResult check_jet(const PolyMap& f, std::size_t k,
                    const std::vector<Rational>& base, std::uint64_t arcs,
                    std::uint64_t seed, std::uint64_t prime = 2147483647);

/// Taylor-coefficient matrix of f along the arc base + sum coeffs[j] t^(j+1),
/// rows i = 0..order-1.
RationalMatrix jet_matrix(const PolyMap& f, const std::vector<Rational>& base,
                          const std::vector<std::vector<Rational>>& arc_coeffs,
                          std::size_t order);

// --- exact samplers (exposed for tests) -------------------------------------

/// Random point of the ball: coordinates a/b with |a|,b <= 1000, the vector
/// rescaled by an integer factor so the exact membership test holds.
std::vector<Rational> sample_ball_point(Rng& rng, const DomainBall& ball);

/// k pairwise distinct random points of the ball.
PointConfiguration sample_random_config(Rng& rng, const DomainBall& ball,
                                        std::size_t k);

/// Ordered factorisations of k into exactly m factors >= 1, most balanced
/// first; the balanced 2 x 2 ... grid is always the first entry.
std::vector<std::vector<std::size_t>> grid_shapes(std::size_t k, std::size_t m);

/// Axis-aligned product configuration of the given shape, points in
/// row-major order of the axis values.
PointConfiguration sample_grid_config(Rng& rng, const DomainBall& ball,
                                      const std::vector<std::size_t>& shape);

}  // namespace kreg
