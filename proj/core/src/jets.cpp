#include <algorithm>

#include "kreg/errors.hpp"
#include "kreg/regularity.hpp"
#include "kreg/rng.hpp"

namespace kreg {

namespace {

// Truncated univariate series with exact rational coefficients.
using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b, std::size_t len) {
  Series r(len, Rational(0));
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j + i < len && j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

}  // namespace

RationalMatrix jet_matrix(const PolyMap& f, const std::vector<Rational>& base,
                          const std::vector<std::vector<Rational>>& arc_coeffs,
                          std::size_t order) {
  if (base.size() != f.num_vars) throw ArityError("base point length mismatch");
  for (const auto& c : arc_coeffs)
    if (c.size() != f.num_vars) throw ArityError("arc coefficient length mismatch");

  // gamma_i(t) truncated at t^(order-1)
  std::vector<Series> gamma(f.num_vars, Series(order, Rational(0)));
  for (std::size_t i = 0; i < f.num_vars; ++i) {
    gamma[i][0] = base[i];
    for (std::size_t j = 0; j < arc_coeffs.size() && j + 1 < order; ++j)
      gamma[i][j + 1] = arc_coeffs[j][i];
  }

  // Power cache per variable.
  std::vector<unsigned> max_exp(f.num_vars, 0);
  for (const auto& comp : f.components)
    for (const auto& [e, c] : comp.terms())
      for (std::size_t i = 0; i < e.size(); ++i)
        max_exp[i] = std::max(max_exp[i], e[i]);
  std::vector<std::vector<Series>> pow(f.num_vars);
  for (std::size_t i = 0; i < f.num_vars; ++i) {
    pow[i].resize(max_exp[i] + 1);
    pow[i][0] = Series(order, Rational(0));
    pow[i][0][0] = Rational(1);
    for (unsigned e = 1; e <= max_exp[i]; ++e)
      pow[i][e] = series_mul(pow[i][e - 1], gamma[i], order);
  }

  RationalMatrix m(order, f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    Series acc(order, Rational(0));
    for (const auto& [e, c] : f.components[j].terms()) {
      Series t(order, Rational(0));
      t[0] = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) t = series_mul(t, pow[i][e[i]], order);
      for (std::size_t i = 0; i < order; ++i) acc[i] += t[i];
    }
    for (std::size_t i = 0; i < order; ++i) m.at(i, j) = acc[i];
  }
  return m;
}

JetResult check_jet(const PolyMap& f, std::size_t k,
                    const std::vector<Rational>& base, std::uint64_t arcs,
                    std::uint64_t seed, std::uint64_t prime) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (base.size() != f.num_vars) throw ArityError("base point length mismatch");

  JetResult result;
  for (std::uint64_t a = 0; a < arcs; ++a) {
    Rng rng(mix_seed(seed, 7, a));
    std::vector<std::vector<Rational>> coeffs;
    if (k >= 2) {
      coeffs.resize(k - 1, std::vector<Rational>(f.num_vars));
      do {
        for (auto& c : coeffs)
          for (auto& x : c) x = Rational(rng.range(-20, 20), rng.range(1, 20));
      } while (std::all_of(coeffs[0].begin(), coeffs[0].end(),
                           [](const Rational& x) { return x.is_zero(); }));
    }
    RationalMatrix m = jet_matrix(f, base, coeffs, k);
    bool ok = false;
    try {
      ok = rank_mod_p(m, prime) == k;
    } catch (const BadPrimeError&) {
    }
    if (!ok) ok = rank(m) == k;
    ++result.arcs_run;
    if (!ok) {
      auto basis = kernel_basis(m.transpose());
      JetCounterexample ce;
      ce.base = base;
      ce.arc_coeffs = coeffs;
      if (!basis.empty()) ce.kernel_vector = basis.front();
      ce.arc_index = a;
      result.passed = false;
      result.counterexample = std::move(ce);
      return result;
    }
  }
  return result;
}

}  // namespace kreg
