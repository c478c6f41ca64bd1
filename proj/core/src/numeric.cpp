#include "kreg/numeric.hpp"

#include <algorithm>

namespace kreg {

std::optional<std::uint64_t> binomial_capped(std::uint64_t n, std::uint64_t k,
                                             std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;  // exact: product of i consecutive integers
    if (acc > cap) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  auto v = binomial_capped(n, k, ~std::uint64_t{0} >> 1);
  return v ? *v : 0;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) acc = mulmod(acc, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return acc;
}

namespace {

std::uint64_t mulmod128(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod128(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) acc = mulmod128(acc, base, m);
    base = mulmod128(base, base, m);
    exp >>= 1;
  }
  return acc;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // This base set is deterministic for all 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod128(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod128(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace kreg
