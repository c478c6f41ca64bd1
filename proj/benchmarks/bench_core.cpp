#include <benchmark/benchmark.h>

#include "kreg/construct.hpp"
#include "kreg/gorenstein.hpp"
#include "kreg/matrix.hpp"
#include "kreg/regularity.hpp"
#include "kreg/rng.hpp"
#include "kreg/secant.hpp"

using namespace kreg;

namespace {

RationalMatrix random_matrix(Rng& rng, std::size_t n, long mag, long den) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = Rational(rng.range(-mag, mag), rng.range(1, den));
  return m;
}

}  // namespace

static void BM_BareissRank(benchmark::State& state) {
  Rng rng(1);
  RationalMatrix m = random_matrix(rng, state.range(0), 1000, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_BareissRank)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_RankModP(benchmark::State& state) {
  Rng rng(2);
  RationalMatrix m = random_matrix(rng, state.range(0), 1000, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(m, 2147483647));
}
BENCHMARK(BM_RankModP)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_KernelBasis(benchmark::State& state) {
  Rng rng(3);
  const std::size_t n = state.range(0);
  RationalMatrix m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j)
      m.at(i, j) = Rational(rng.range(-50, 50), rng.range(1, 8));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_KernelBasis)->Arg(4)->Arg(8)->Arg(16);

static void BM_EvaluationMatrix(benchmark::State& state) {
  PolyMap f = example_map("fivereg-2-9");
  Rng rng(4);
  DomainBall ball = DomainBall::origin(2, Rational(1));
  auto cfg = sample_random_config(rng, ball, 5);
  for (auto _ : state) benchmark::DoNotOptimize(evaluation_matrix(f, cfg));
}
BENCHMARK(BM_EvaluationMatrix);

static void BM_RegularityTrials(benchmark::State& state) {
  PolyMap f = example_map("fourreg-2-7");
  DomainBall ball = DomainBall::origin(2, Rational(1));
  for (auto _ : state) {
    auto rep = check_regularity(f, 4, ball, state.range(0), 7);
    benchmark::DoNotOptimize(rep.passed);
  }
}
BENCHMARK(BM_RegularityTrials)->Arg(10)->Arg(50);

static void BM_JetMatrix(benchmark::State& state) {
  PolyMap f = example_map("fourreg-3-10");
  std::vector<Rational> base{Rational(1, 30), Rational(-1, 40), Rational(1, 50)};
  std::vector<std::vector<Rational>> coeffs{
      {Rational(1), Rational(1, 2), Rational(1, 3)},
      {Rational(0), Rational(2, 5), Rational(1, 7)},
      {Rational(1, 9), Rational(0), Rational(3, 4)}};
  for (auto _ : state) benchmark::DoNotOptimize(jet_matrix(f, base, coeffs, 4));
}
BENCHMARK(BM_JetMatrix);

static void BM_Terracini(benchmark::State& state) {
  TerraciniOptions opts;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        terracini_dimension(2, state.range(0), state.range(0) + 1, opts));
}
BENCHMARK(BM_Terracini)->Arg(4)->Arg(8)->Arg(12);

static void BM_PartialsSpace(benchmark::State& state) {
  Polynomial f = parse_polynomial("x^4 + y^4 + z^4 + x*y*z^2", {"x", "y", "z"});
  for (auto _ : state) benchmark::DoNotOptimize(partials_space(f));
}
BENCHMARK(BM_PartialsSpace);

static void BM_NegligibilityAudit(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(negligibility_audit(state.range(0), 3).negligible);
}
BENCHMARK(BM_NegligibilityAudit)->Arg(9)->Arg(12);

BENCHMARK_MAIN();
