#include <benchmark/benchmark.h>

#include "primroot/applications.hpp"
#include "primroot/characters.hpp"
#include "primroot/circulant.hpp"
#include "primroot/exact_linalg.hpp"
#include "primroot/ff_arith.hpp"

namespace {

using namespace primroot;

PrimitiveRoot root_for(benchmark::State& state) {
  return find_primitive_root(OddPrime(static_cast<std::int64_t>(state.range(0))));
}

void BM_RankRational(benchmark::State& state) {
  const auto m = build_tp(root_for(state)).materialize();
  for (auto _ : state) benchmark::DoNotOptimize(rank_rational(m));
}
BENCHMARK(BM_RankRational)->Arg(53)->Arg(101)->Arg(199)->Unit(benchmark::kMillisecond);

void BM_RankModP(benchmark::State& state) {
  const auto g = root_for(state);
  const auto m = build_tp(g).materialize();
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(m, g.prime()));
}
BENCHMARK(BM_RankModP)->Arg(101)->Arg(499)->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto m = build_tp(root_for(state)).materialize();
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(47)->Arg(101)->Arg(199)->Unit(benchmark::kMillisecond);

void BM_SmithDecomposition(benchmark::State& state) {
  const auto m = build_tp(root_for(state)).materialize();
  for (auto _ : state) benchmark::DoNotOptimize(smith_decomposition(m));
}
BENCHMARK(BM_SmithDecomposition)->Arg(11)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_Eigenvalues(benchmark::State& state) {
  const auto t = build_tp(root_for(state));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(t));
}
BENCHMARK(BM_Eigenvalues)->Arg(199)->Arg(1009)->Arg(9973)->Unit(benchmark::kMillisecond);

void BM_GaussSums(benchmark::State& state) {
  const CharacterFamily f(root_for(state));
  for (auto _ : state) {
    for (std::int64_t k = 0; k < f.size(); ++k) benchmark::DoNotOptimize(gauss_sum(f[k]));
  }
}
BENCHMARK(BM_GaussSums)->Arg(101)->Arg(1009)->Unit(benchmark::kMillisecond);

void BM_MinDistanceBlocks(benchmark::State& state) {
  const auto code = block_diagonal_code(find_primitive_root(OddPrime(7)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_distance(code));
}
BENCHMARK(BM_MinDistanceBlocks)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
