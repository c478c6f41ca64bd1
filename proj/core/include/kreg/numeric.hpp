#pragma once

#include <cstdint>
#include <optional>

namespace kreg {

// Binomial coefficient; returns nullopt when the value exceeds `cap`
// (used for ambient-dimension caps without overflow).
std::optional<std::uint64_t> binomial_capped(std::uint64_t n, std::uint64_t k,
                                             std::uint64_t cap);

// Binomial coefficient for small arguments (result must fit in 64 bits).
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

// Arithmetic in F_p for p < 2^32.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b,
                            std::uint64_t p) {
  return (a * b) % p;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  return powmod(a, p - 2, p);
}

}  // namespace kreg
