#include "kreg/secant.hpp"

#include <algorithm>
#include <vector>

#include <nlohmann/json.hpp>

#include "kreg/errors.hpp"
#include "kreg/matrix.hpp"
#include "kreg/numeric.hpp"
#include "kreg/polynomial.hpp"
#include "kreg/rng.hpp"

namespace kreg {

using ordered_json = nlohmann::ordered_json;

bool ah_exceptional(std::size_t m, std::size_t d, std::size_t k) {
  if (d == 2 && 2 <= k && k <= m) return true;
  if (m == 2 && d == 4 && k == 5) return true;
  if (m == 3 && d == 4 && k == 9) return true;
  if (m == 4 && d == 3 && k == 7) return true;
  if (m == 4 && d == 4 && k == 14) return true;
  return false;
}

SecantDimResult secant_dimension(std::size_t m, std::size_t d, std::size_t k) {
  if (m < 1 || d < 1 || k < 1) throw DomainError("m, d, k must be >= 1");
  SecantDimResult r;
  r.m = m;
  r.d = d;
  r.k = k;
  auto amb = binomial_capped(m + d, d, ~std::uint64_t{0} >> 2);
  if (!amb) throw CapExceededError("ambient dimension overflow");
  r.ambient_dim = static_cast<std::size_t>(*amb) - 1;
  r.expected_dim = std::min(k * m + k - 1, r.ambient_dim);
  r.defective = ah_exceptional(m, d, k);

  if (m == 2 && d == 3 && k == 4) r.actual_dim = 9;
  else if (m == 2 && d == 4 && k == 5) r.actual_dim = 13;
  else if (d == 2 && k == 3 && m >= 2) r.actual_dim = 3 * m - 1;
  else if (m == 1 && 2 * k > d + 1 && k <= d + 1) r.actual_dim = d;
  return r;
}

std::string SecantDimResult::to_json() const {
  ordered_json j;
  j["schema"] = 1;
  j["m"] = m;
  j["d"] = d;
  j["k"] = k;
  j["ambient_dim"] = ambient_dim;
  j["expected_dim"] = expected_dim;
  j["defective"] = defective;
  if (actual_dim) j["actual_dim"] = *actual_dim;
  else j["actual_dim"] = nullptr;
  return j.dump(2);
}

std::size_t terracini_dimension(std::size_t m, std::size_t d, std::size_t k,
                                const TerraciniOptions& opts) {
  if (m < 1 || d < 1 || k < 1) throw DomainError("m, d, k must be >= 1");
  auto cols_opt = binomial_capped(m + d, d, opts.cap);
  if (!cols_opt)
    throw CapExceededError("C(m+d,d) exceeds the configured cap of " +
                           std::to_string(opts.cap));
  const std::size_t cols = static_cast<std::size_t>(*cols_opt);
  const std::uint64_t p = opts.prime;
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    throw BadPrimeError("modulus must be a prime below 2^32");

  const auto monos = exponents_of_degree(m + 1, static_cast<unsigned>(d));

  std::size_t best = 0;
  for (unsigned rep = 0; rep < opts.repetitions; ++rep) {
    ModMatrix jac(p, k * (m + 1), cols);
    for (std::size_t pt = 0; pt < k; ++pt) {
      // Point index, not draw order, determines the coordinates, so the
      // stacked matrix for k is a sub-matrix of the one for k+1.
      Rng rng(mix_seed(opts.seed, rep + 1, pt + 1));
      std::vector<std::uint64_t> x(m + 1);
      for (auto& xi : x) xi = 1 + rng.below(p - 1);
      // Exponent-indexed power table.
      unsigned maxe = static_cast<unsigned>(d);
      std::vector<std::vector<std::uint64_t>> pw(m + 1,
                                                 std::vector<std::uint64_t>(maxe + 1, 1));
      for (std::size_t i = 0; i <= m; ++i)
        for (unsigned e = 1; e <= maxe; ++e) pw[i][e] = mulmod(pw[i][e - 1], x[i], p);

      for (std::size_t j = 0; j < cols; ++j) {
        const Exponents& e = monos[j];
        for (std::size_t i = 0; i <= m; ++i) {
          if (e[i] == 0) continue;
          // d/dx_i of the monomial, evaluated at x.
          std::uint64_t v = e[i] % p;
          for (std::size_t l = 0; l <= m; ++l)
            v = mulmod(v, pw[l][l == i ? e[l] - 1 : e[l]], p);
          jac.at(pt * (m + 1) + i, j) = v;
        }
      }
    }
    std::size_t r = rank_destructive(jac);
    best = std::max(best, r > 0 ? r - 1 : 0);
  }
  return best;
}

Feasibility strongly_regular_feasible(std::size_t m, std::size_t k, std::size_t n) {
  if (m < 1 || k < 1) throw DomainError("m and k must be >= 1");
  if (k <= 2) {
    if (n >= m) return {true, "k <= 2: any embedding works once N >= m"};
    return {false, "k <= 2 requires N >= m"};
  }
  if (n >= k * m + k - 1)
    return {true, "N >= km+k-1: a general projection avoids the secant variety"};
  if (m == 1 && n >= k - 1)
    return {true, "m=1: rational normal curves of degree >= k-1"};
  if (m == 2 && k == 4 && n >= 9)
    return {true, "m=2, k=4: the cubic Veronese surface case, N >= 9"};
  if (m == 2 && k == 5 && n >= 13)
    return {true, "m=2, k=5: the quartic Veronese surface case, N >= 13"};
  if (k == 3 && n >= 3 * m - 1)
    return {true, "k=3: the quadric Veronese case, N >= 3m-1"};
  return {false, "below the secant-variety dimension in every admissible case"};
}

}  // namespace kreg
