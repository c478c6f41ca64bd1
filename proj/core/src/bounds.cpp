#include "kreg/bounds.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kreg/errors.hpp"
#include "kreg/numeric.hpp"

namespace kreg {

using ordered_json = nlohmann::ordered_json;

unsigned digit_sum(std::uint64_t k, std::uint64_t p) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
  unsigned s = 0;
  while (k) {
    s += static_cast<unsigned>(k % p);
    k /= p;
  }
  return s;
}

namespace {

// m = p^t with t >= 1; returns p.
std::optional<std::uint64_t> prime_power_base(std::size_t m) {
  if (m < 2) return std::nullopt;
  std::size_t v = m;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p) continue;
    while (v % p == 0) v /= p;
    return v == 1 ? std::optional<std::uint64_t>(p) : std::nullopt;
  }
  return m;  // m itself is prime
}

Bound raw_lower(std::size_t m, std::size_t k) {
  Bound best{k, "trivial"};
  if (is_prime(k)) {
    std::size_t v = m * (k - 1) + 1;
    if (v > best.value) best = {v, "k prime"};
  }
  if (auto p = prime_power_base(m)) {
    unsigned a = digit_sum(k, *p);
    std::size_t v = m * (k - a) + a;
    if (v > best.value) best = {v, "m prime power (p=" + std::to_string(*p) + ")"};
  }
  return best;
}

}  // namespace

Bound lower_bound_min_n(std::size_t m, std::size_t k) {
  if (m < 1 || k < 1) throw DomainError("m and k must be >= 1");
  // Monotone propagation: an obstruction for j <= k points rules out k as
  // well, and an obstruction on a subspace of dimension m' <= m survives
  // restriction, so the best bound is the max over both parameters.
  Bound best = raw_lower(1, 1);
  std::size_t best_j = 1, best_m = 1;
  for (std::size_t mm = 1; mm <= m; ++mm) {
    for (std::size_t j = 1; j <= k; ++j) {
      Bound r = raw_lower(mm, j);
      if (r.value > best.value) {
        best = r;
        best_j = j;
        best_m = mm;
      }
    }
  }
  if (best_j < k || best_m < m)
    best.tag += " (monotone from m=" + std::to_string(best_m) +
                ", k=" + std::to_string(best_j) + ")";
  return best;
}

Bound upper_bound_min_n(std::size_t m, std::size_t k) {
  if (m < 1 || k < 1) throw DomainError("m and k must be >= 1");
  if (k == 1) return {1, "constant map"};
  Bound best{(m + 1) * (k - 1), "(m+1)(k-1)"};
  if (k <= 9 || m <= 2) {
    std::size_t v = m * (k - 1) + 1;
    if (v < best.value) best = {v, m == 1 ? "m=1 exact" : "m(k-1)+1 (k<=9 or m<=2)"};
  }
  std::size_t trans = k * m + k - 1;
  if (trans < best.value) best = {trans, "transversality km+k-1"};
  return best;
}

std::size_t hypersurface_bound(std::size_t m, std::size_t c, std::size_t k) {
  if (m < 1 || c < 1 || k < 3) throw DomainError("need m >= 1, c >= 1, k >= 3");
  if (c == 1) {
    if (k <= 9 || m == 1) return (m + 1) * (k - 1);
    if (10 <= k && k <= m + 2) return (m + 2) * (k - 1) - 1;
    return (m + 1) * k - 1;
  }
  // First case needs k <= (m+c)/(c-1), compared exactly.
  if (k <= 9 && k * (c - 1) <= m + c) return (m + c) * (k - 1);
  if (10 <= k && k * c <= m + c + 1) return (m + c + 1) * (k - 1) - 1;
  return (m + 1) * k - 1;
}

std::vector<BoundsCell> bounds_table(std::size_t k_max,
                                     const std::vector<std::size_t>& m_list) {
  if (k_max > 64) throw CapExceededError("k_max must be <= 64");
  std::vector<BoundsCell> cells;
  for (std::size_t k = 1; k <= k_max; ++k) {
    for (std::size_t m : m_list) {
      BoundsCell cell;
      cell.k = k;
      cell.m = m;
      cell.lower = lower_bound_min_n(m, k);
      cell.upper = upper_bound_min_n(m, k);
      cell.tight = cell.lower.value == cell.upper.value;
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::string bounds_table_text(const std::vector<BoundsCell>& cells) {
  std::vector<std::size_t> ms;
  std::size_t k_max = 0;
  for (const auto& c : cells) {
    if (std::find(ms.begin(), ms.end(), c.m) == ms.end()) ms.push_back(c.m);
    k_max = std::max(k_max, c.k);
  }
  std::sort(ms.begin(), ms.end());
  std::map<std::pair<std::size_t, std::size_t>, const BoundsCell*> grid;
  for (const auto& c : cells) grid[{c.k, c.m}] = &c;

  std::ostringstream out;
  out << std::left << std::setw(6) << "k";
  for (std::size_t m : ms) out << std::setw(14) << ("m=" + std::to_string(m));
  out << "\n";
  for (std::size_t k = 1; k <= k_max; ++k) {
    bool any = false;
    std::ostringstream line;
    line << std::left << std::setw(6) << k;
    for (std::size_t m : ms) {
      auto it = grid.find({k, m});
      if (it == grid.end()) {
        line << std::setw(14) << "-";
        continue;
      }
      any = true;
      const BoundsCell& c = *it->second;
      std::string cell = c.tight ? std::to_string(c.lower.value) + "*"
                                 : std::to_string(c.lower.value) + ".." +
                                       std::to_string(c.upper.value);
      line << std::setw(14) << cell;
    }
    if (any) out << line.str() << "\n";
  }
  out << "(* = bounds coincide)\n";
  return out.str();
}

std::string bounds_table_json(const std::vector<BoundsCell>& cells) {
  ordered_json j;
  j["schema"] = 1;
  j["cells"] = ordered_json::array();
  for (const auto& c : cells) {
    ordered_json cj;
    cj["k"] = c.k;
    cj["m"] = c.m;
    cj["lower"] = c.lower.value;
    cj["lower_rule"] = c.lower.tag;
    cj["upper"] = c.upper.value;
    cj["upper_rule"] = c.upper.tag;
    cj["tight"] = c.tight;
    j["cells"].push_back(cj);
  }
  return j.dump(2);
}

}  // namespace kreg
