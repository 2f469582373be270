#include <benchmark/benchmark.h>

#include "bicirc/automorphisms.hpp"
#include "bicirc/families.hpp"
#include "bicirc/predicates.hpp"
#include "bicirc/reduce.hpp"
#include "bicirc/stabilizer_chain.hpp"

using namespace bicirc;

namespace {

// Schreier-Sims on the automorphism generators of a fixed graph.
void BM_SchreierSims(benchmark::State& state) {
  const auto g = gen_bpg(3, 4, false);
  const auto gens = automorphism_group(g).generators();
  for (auto _ : state) {
    StabilizerChain chain(g.order(), gens);
    benchmark::DoNotOptimize(chain.order());
  }
}
BENCHMARK(BM_SchreierSims);

void BM_AutSearchGP(benchmark::State& state) {
  const auto g = gen_gp(static_cast<std::uint32_t>(state.range(0)), 5).graph;
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).order());
}
BENCHMARK(BM_AutSearchGP)->Arg(12)->Arg(24)->Arg(48);

void BM_AutSearchClebsch(benchmark::State& state) {
  const auto g = gen_clebsch();
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).order());
}
BENCHMARK(BM_AutSearchClebsch);

void BM_CirculantSearch(benchmark::State& state) {
  const auto g = gen_g2p(static_cast<std::uint32_t>(state.range(0)), 2).graph;
  const auto aut = automorphism_group(g);
  for (auto _ : state) benchmark::DoNotOptimize(is_circulant(g, aut).witness.has_value());
}
BENCHMARK(BM_CirculantSearch)->Arg(7)->Arg(13);

void BM_BicirculantSearch(benchmark::State& state) {
  const auto g = gen_gp(24, 5).graph;
  const auto aut = automorphism_group(g);
  for (auto _ : state) benchmark::DoNotOptimize(is_bicirculant(g, aut).has_value());
}
BENCHMARK(BM_BicirculantSearch);

void BM_Reduce(benchmark::State& state) {
  const auto g = gen_bc(12, {}, {0, 1, 2, 4, 9}, {}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(reduce(g).verdict);
}
BENCHMARK(BM_Reduce);

}  // namespace

BENCHMARK_MAIN();
