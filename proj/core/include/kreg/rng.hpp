#pragma once

#include <cstdint>

namespace kreg {

// Deterministic splitmix64 generator. The library never uses std:: random
// distributions, so identical seeds produce identical streams on every
// platform and in every thread.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), n > 0.  Rejection keeps the draw unbiased.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

// Stable mixing of a seed with stream indices; used to derive per-trial and
// per-point generators so that results do not depend on execution order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a,
                              std::uint64_t b = 0) {
  Rng r(seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xd1342543de82ef95ULL));
  return r.next();
}

}  // namespace kreg
