// Microbenchmarks for the hot paths: multivariate gcd on planted inputs,
// compose-and-normalize iteration, the family drop-locus scan, and the
// randomized gcd-degree oracle (to quantify its advantage over the exact
// computation it estimates).

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "cremona/birmap.hpp"
#include "cremona/family.hpp"
#include "cremona/gcd.hpp"
#include "cremona/multipoly.hpp"
#include "cremona/oracle.hpp"
#include "cremona/poly_format.hpp"

namespace {

using namespace cremona;

Poly random_poly(std::mt19937_64& rng, const ContextPtr& ctx, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg_dist(0, max_deg);
  std::uniform_int_distribution<int> var_dist(0, ctx->size() - 1);
  std::uniform_int_distribution<int> coeff(-9, 9);
  Poly acc = Poly::zero(ctx);
  while (acc.is_zero()) {
    for (int t = 0; t < terms; ++t) {
      Monomial m(static_cast<size_t>(ctx->size()), 0);
      int budget = deg_dist(rng);
      for (int d = 0; d < budget; ++d) ++m[static_cast<size_t>(var_dist(rng))];
      acc = acc + Poly::monomial(ctx, std::move(m), Rational(coeff(rng)));
    }
  }
  return acc;
}

// A pair (a*g, b*g) with a known planted common factor g; the degree range
// scales with the benchmark argument.
std::vector<Poly> planted_pair(uint64_t seed, int deg) {
  std::mt19937_64 rng(seed);
  ContextPtr ctx = projective(2);
  Poly g = random_poly(rng, ctx, deg, deg + 2);
  Poly a = random_poly(rng, ctx, deg, deg + 2);
  Poly b = random_poly(rng, ctx, deg, deg + 2);
  return {a * g, b * g};
}

void BM_gcd_planted(benchmark::State& state) {
  auto inputs = planted_pair(71, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcd_many(inputs));
  }
}
BENCHMARK(BM_gcd_planted)->Arg(2)->Arg(4)->Arg(6);

void BM_gcd_oracle_estimate(benchmark::State& state) {
  auto inputs = planted_pair(71, static_cast<int>(state.range(0)));
  OracleConfig cfg;
  cfg.trials = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcd_degree_estimate(inputs, cfg));
  }
}
BENCHMARK(BM_gcd_oracle_estimate)->Arg(2)->Arg(4)->Arg(6);

// Degree growth under iteration: the m-th power of this map has degree 2^m,
// so each step composes and then strips an ever larger common factor.
void BM_power_sequence(benchmark::State& state) {
  ContextPtr ctx = projective(2);
  RationalMap henon = RationalMap::make(
      2, {parse_poly("x1*x2", ctx), parse_poly("x1^2 - x0*x2", ctx),
          parse_poly("x2^2", ctx)});
  const int max_power = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(power_degree_sequence(henon, max_power));
  }
}
BENCHMARK(BM_power_sequence)->Arg(4)->Arg(6)->Arg(8);

void BM_compose_normalize(benchmark::State& state) {
  RationalMap sigma = standard_quadratic();
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(sigma, sigma));
  }
}
BENCHMARK(BM_compose_normalize);

void BM_drop_locus_nodal(benchmark::State& state) {
  ParamWriting w = nodal_cubic_family(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(drop_locus(minimal_writing(w)));
  }
}
BENCHMARK(BM_drop_locus_nodal);

void BM_stratify_demo(benchmark::State& state) {
  ParamWriting w = degeneration_demo();
  for (auto _ : state) {
    benchmark::DoNotOptimize(stratify(w));
  }
}
BENCHMARK(BM_stratify_demo);

void BM_specialize_nodal(benchmark::State& state) {
  ParamWriting w = minimal_writing(nodal_cubic_family(2));
  Rational t0 = make_rational(7, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(specialize(w, t0));
  }
}
BENCHMARK(BM_specialize_nodal);

}  // namespace

BENCHMARK_MAIN();
