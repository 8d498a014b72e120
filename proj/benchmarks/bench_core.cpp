#include <benchmark/benchmark.h>

#include "porigami/families.hpp"
#include "porigami/origami.hpp"
#include "porigami/pgroup_props.hpp"
#include "porigami/presentation.hpp"

using namespace porigami;

static void BM_SchreierSimsSylow(benchmark::State& state) {
  const auto p = static_cast<unsigned>(state.range(0));
  const auto r = static_cast<unsigned>(state.range(1));
  std::vector<Permutation> gens;
  std::uint64_t count = 1;
  for (unsigned i = 1; i <= r; ++i, count *= p)
    for (std::uint64_t j = 1; j <= count; ++j) gens.push_back(sylow_wreath_generator(p, r, i, j));
  for (auto _ : state) {
    StabilizerChain chain(gens.front().degree(), gens);
    benchmark::DoNotOptimize(chain.order());
  }
}
BENCHMARK(BM_SchreierSimsSylow)->Args({2, 4})->Args({2, 6})->Args({3, 4});

static void BM_ToddCoxeterDihedral(benchmark::State& state) {
  const Presentation pres =
      maximal_class_presentation(MaximalClassKind::kDihedral, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(pres).cosets);
}
BENCHMARK(BM_ToddCoxeterDihedral)->Arg(6)->Arg(9);

static void BM_ToddCoxeterWollmilchsau(benchmark::State& state) {
  const Presentation pres = wollmilchsau_presentation(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(pres).cosets);
}
BENCHMARK(BM_ToddCoxeterWollmilchsau)->Arg(2)->Arg(4);

static void BM_PropertyC(benchmark::State& state) {
  const GroupWithPair g = strata_family(2, static_cast<unsigned>(state.range(0)), 2);
  PropertyCOptions opt;
  opt.strategy = state.range(1) ? PairStrategy::kConjugationPruned : PairStrategy::kExhaustive;
  opt.early_exit = false;
  g.group.elements();
  for (auto _ : state) benchmark::DoNotOptimize(property_c(g.group, opt).holds);
}
BENCHMARK(BM_PropertyC)->Args({6, 0})->Args({6, 1})->Args({8, 1});

static void BM_Sl2Orbit(benchmark::State& state) {
  const GroupWithPair g = strata_family(3, 5, 2);
  const Origami o = make_origami(g.group, g.x, g.y);
  for (auto _ : state) benchmark::DoNotOptimize(sl2_orbit(o, 1 << 16).size());
}
BENCHMARK(BM_Sl2Orbit);

BENCHMARK_MAIN();
