#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kreg {

/// Digit sum of k written in base p (p prime).  Throws NotPrimeError.
unsigned digit_sum(std::uint64_t k, std::uint64_t p);

struct Bound {
  std::size_t value = 0;
  std::string tag;  // which rule produced the value
};

/// Largest known lower bound for the minimal N with a k-regular map
/// F^m -> F^N: the trivial N >= k, the prime-k and prime-power-m
/// obstructions, and monotone propagation in k.
Bound lower_bound_min_n(std::size_t m, std::size_t k);

/// Smallest constructive upper bound: m(k-1)+1 when k <= 9 or m <= 2,
/// (m+1)(k-1) in general, and the transversality fallback km+k-1.
Bound upper_bound_min_n(std::size_t m, std::size_t k);

/// Ambient dimension for affinely k-regular embeddings of an m-manifold of
/// codimension c (c = 1 is the hypersurface case).  Requires k >= 3.
std::size_t hypersurface_bound(std::size_t m, std::size_t c, std::size_t k);

struct BoundsCell {
  std::size_t k = 0, m = 0;
  Bound lower, upper;
  bool tight = false;
};

/// Full grid of cells for k = 1..k_max over the given m values (k_max <= 64).
std::vector<BoundsCell> bounds_table(std::size_t k_max,
                                     const std::vector<std::size_t>& m_list);

std::string bounds_table_text(const std::vector<BoundsCell>& cells);
std::string bounds_table_json(const std::vector<BoundsCell>& cells);

}  // namespace kreg
