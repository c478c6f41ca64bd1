#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace kreg {

/// Dimension data for the k-th secant variety of the degree-d Veronese of
/// m-dimensional projective space.
struct SecantDimResult {
  std::size_t m = 0, d = 0, k = 0;
  std::size_t ambient_dim = 0;                 // C(m+d,d) - 1
  std::size_t expected_dim = 0;                // min(km+k-1, ambient_dim)
  bool defective = false;                      // on the exceptional list
  std::optional<std::size_t> actual_dim;       // known value, when stated

  std::string to_json() const;
};

/// True exactly for the Alexander-Hirschowitz exceptional cases:
/// (d=2, 2<=k<=m), (m=2,d=4,k=5), (m=3,d=4,k=9), (m=4,d=3,k=7), (m=4,d=4,k=14).
bool ah_exceptional(std::size_t m, std::size_t d, std::size_t k);

/// Closed-form secant dimension.  `defective` marks the exceptional cases;
/// actual_dim is filled for the classically known values
///   (m=2,d=3,k=4) -> 9,  (m=2,d=4,k=5) -> 13,
///   (d=2,k=3,m>=2) -> 3m-1,  (m=1, (d+1)/2 < k <= d+1) -> d,
/// and left empty otherwise (the oracle measures those).
SecantDimResult secant_dimension(std::size_t m, std::size_t d, std::size_t k);

struct TerraciniOptions {
  std::uint64_t prime = 2147483647;
  std::uint64_t seed = 0;
  unsigned repetitions = 3;   // maximum rank over independent samples
  std::size_t cap = 300;      // largest allowed C(m+d,d)
};

/// Numerical dimension oracle: rank of the stacked Jacobian blocks of the
/// degree-d monomial map at k random points of F_p^{m+1}, minus one.  A lower
/// bound for the generic secant dimension; repetition makes underestimates
/// vanishingly rare.  Points are derived per (repetition, index), so the
/// measured value is nondecreasing in k for a fixed seed.
std::size_t terracini_dimension(std::size_t m, std::size_t d, std::size_t k,
                                const TerraciniOptions& opts = {});

struct Feasibility {
  bool feasible = false;
  std::string reason;
};

/// Existence of a strongly projectively k-regular algebraic morphism from
/// m-dimensional projective space into N-dimensional projective space.
Feasibility strongly_regular_feasible(std::size_t m, std::size_t k, std::size_t n);

}  // namespace kreg
