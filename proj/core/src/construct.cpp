#include "kreg/construct.hpp"

#include <cctype>

#include "kreg/bounds.hpp"
#include "kreg/errors.hpp"
#include "kreg/rng.hpp"

namespace kreg {

namespace {

PolyMap parse_fixture(std::size_t m, const std::vector<std::string>& names,
                      const std::vector<std::string>& comps) {
  PolyMap map;
  map.num_vars = m;
  map.kind = MapKind::linear;
  map.var_names = names;
  for (const auto& c : comps)
    map.components.push_back(parse_polynomial(c, names));
  return map;
}

PolyMap vandermonde(std::size_t k) {
  if (k < 1) throw UnknownExampleError("vandermonde(k) needs k >= 1");
  PolyMap map;
  map.num_vars = 1;
  map.kind = MapKind::linear;
  map.var_names = {"t"};
  for (std::size_t j = 0; j < k; ++j)
    map.components.push_back(Polynomial::monomial(1, {static_cast<unsigned>(j)},
                                                  Rational(1)));
  return map;
}

PolyMap threereg(std::size_t m) {
  if (m < 1) throw UnknownExampleError("threereg(m) needs m >= 1");
  PolyMap map;
  map.num_vars = m;
  map.kind = MapKind::linear;
  map.var_names = default_var_names(m);
  map.components.push_back(Polynomial::constant(m, Rational(1)));
  for (std::size_t i = 0; i < m; ++i) {
    Exponents e1(m, 0), e2(m, 0);
    e1[i] = 1;
    e2[i] = 2;
    map.components.push_back(Polynomial::monomial(m, e1, Rational(1)));
    map.components.push_back(Polynomial::monomial(m, e2, Rational(1)));
  }
  return map;
}

// "name(arg)" or "name:arg"
bool split_param(const std::string& s, const std::string& prefix, long& arg) {
  if (s.rfind(prefix, 0) != 0) return false;
  std::string rest = s.substr(prefix.size());
  if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')')
    rest = rest.substr(1, rest.size() - 2);
  else if (!rest.empty() && rest.front() == ':')
    rest = rest.substr(1);
  else
    return false;
  if (rest.empty()) return false;
  for (char c : rest)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  arg = std::stol(rest);
  return true;
}

}  // namespace

PolyMap example_map(const std::string& name) {
  long arg = 0;
  if (split_param(name, "vandermonde", arg)) return vandermonde(arg);
  if (split_param(name, "threereg", arg)) return threereg(arg);
  if (name == "monomial-nonreg-2-7")
    return parse_fixture(2, {"s", "t"},
                         {"1", "s", "t", "s^2", "t^2", "s^3", "t^3"});
  if (name == "fourreg-2-7")
    return parse_fixture(2, {"s", "t"},
                         {"1", "s", "t", "s^2", "s*t", "t^2 - s^3", "t^3"});
  if (name == "fourreg-3-10")
    return parse_fixture(3, {"s", "t", "u"},
                         {"1", "t", "s", "u", "s*t", "s*u", "s^2 - t*u",
                          "t^2 - s^3", "u^2 - t^3", "u^3"});
  if (name == "fivereg-2-9")
    return parse_fixture(2, {"s", "t"},
                         {"1", "s", "t", "s^2", "s*t", "t^2", "t^3",
                          "s^3 - t^4", "s^4"});
  throw UnknownExampleError("unknown example '" + name + "'");
}

FixtureInfo fixture(const std::string& name) {
  FixtureInfo info;
  info.map = example_map(name);
  info.default_radius = Rational(1);
  long arg = 0;
  if (split_param(name, "vandermonde", arg)) {
    info.claimed_k = static_cast<std::size_t>(arg);
  } else if (split_param(name, "threereg", arg)) {
    info.claimed_k = 3;
  } else if (name == "fourreg-2-7") {
    info.claimed_k = 4;
  } else if (name == "fourreg-3-10") {
    info.claimed_k = 4;
    info.default_radius = Rational(1, 8);  // the claim is local around 0
  } else if (name == "fivereg-2-9") {
    info.claimed_k = 5;
  } else if (name == "monomial-nonreg-2-7") {
    info.claimed_k = 3;  // fails at 4
  }
  return info;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (int k = 2; k <= 6; ++k) names.push_back("vandermonde(" + std::to_string(k) + ")");
  for (int m = 1; m <= 4; ++m) names.push_back("threereg(" + std::to_string(m) + ")");
  names.insert(names.end(), {"monomial-nonreg-2-7", "fourreg-2-7",
                             "fourreg-3-10", "fivereg-2-9"});
  return names;
}

ConstructedMap construct_k_regular(std::size_t m, std::size_t k,
                                   std::optional<std::size_t> n_opt,
                                   std::uint64_t seed,
                                   const ConstructOptions& opts) {
  if (m < 1 || k < 1) throw DomainError("m and k must be >= 1");
  const std::size_t n = n_opt.value_or(
      (k <= 9 || m <= 2) ? m * (k - 1) : (m + 1) * (k - 1) - 1);

  std::optional<std::string> warning;
  const std::size_t lower = lower_bound_min_n(m, k).value;
  if (n + 1 < lower) {
    warning = "target dimension " + std::to_string(n + 1) +
              " is below the lower bound " + std::to_string(lower) +
              " for the minimal ambient dimension; no k-regular map exists";
  }

  const unsigned d = static_cast<unsigned>(k - 1);
  PolyMap ver = (k == 1) ? veronese_map(m, 1, MapKind::affine)
                         : veronese_map(m, d, MapKind::affine);
  if (k == 1) ver.components.resize(1);  // the constant alone suffices

  std::optional<RegularityReport> best;
  for (std::uint64_t attempt = 0; attempt < opts.budget; ++attempt) {
    const std::uint64_t attempt_seed = mix_seed(seed, 11, attempt);
    Rng rng(attempt_seed);

    PolyMap cand;
    cand.num_vars = m;
    cand.kind = MapKind::linear;
    cand.var_names = default_var_names(m);
    cand.components.push_back(Polynomial::constant(m, Rational(1)));
    for (std::size_t row = 0; row < n; ++row) {
      Polynomial g(m);
      for (const auto& comp : ver.components) {
        Rational c(rng.range(-1000, 1000), rng.range(1, 1000));
        g = g + c * comp;
      }
      cand.components.push_back(std::move(g));
    }

    CheckOptions copts;
    copts.prime = opts.prime;
    copts.map_id = "construct(m=" + std::to_string(m) + ",k=" + std::to_string(k) +
                   ",n=" + std::to_string(n) + ",attempt=" + std::to_string(attempt) + ")";
    RegularityReport rep =
        check_regularity(cand, k, DomainBall::origin(m, opts.radius),
                         opts.trials, attempt_seed, copts);
    if (rep.passed) {
      ConstructedMap out;
      out.map = std::move(cand);
      out.m = m;
      out.k = k;
      out.n = n;
      out.projection_seed = attempt_seed;
      out.attempts = attempt + 1;
      out.report = std::move(rep);
      out.infeasible_warning = warning;
      return out;
    }
    // Keep the attempt that survived the most trials before failing.
    auto survived = [](const RegularityReport& r) {
      std::uint64_t total = 0;
      for (const auto& s : r.strategies) total += s.trials - s.failures;
      return total;
    };
    if (!best || survived(rep) > survived(*best)) best = std::move(rep);
  }
  throw BudgetExhaustedError(
      "no verified construction within " + std::to_string(opts.budget) + " attempts",
      best ? *best : RegularityReport{}, warning);
}

}  // namespace kreg
