#include <benchmark/benchmark.h>

#include <random>

#include "filt/factorial.hpp"
#include "filt/filter.hpp"
#include "filt/filtrum.hpp"
#include "filt/monoid.hpp"
#include "filt/topo.hpp"

namespace {

  filt::FiniteMonoid bench_monoid(std::int64_t n) {
    return filt::monoids::zmod_mul(static_cast<std::size_t>(n));
  }

  void BM_filters_subset_scan(benchmark::State& state) {
    auto m = bench_monoid(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(filt::all_filters(m, filt::FilterAlgorithm::oracle));
    }
  }
  BENCHMARK(BM_filters_subset_scan)->DenseRange(8, 20, 4);

  void BM_filters_closure(benchmark::State& state) {
    auto m = bench_monoid(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(filt::all_filters(m, filt::FilterAlgorithm::closure));
    }
  }
  BENCHMARK(BM_filters_closure)->DenseRange(8, 20, 4)->Arg(60)->Arg(120)->Arg(210);

  void BM_filters_truncated_free(benchmark::State& state) {
    auto m = filt::monoids::truncated_free(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) {
      benchmark::DoNotOptimize(filt::all_filters(m));
    }
    state.counters["elements"] = static_cast<double>(m.size());
  }
  BENCHMARK(BM_filters_truncated_free)->DenseRange(1, 5);

  void BM_filtrum_space(benchmark::State& state) {
    auto m = bench_monoid(state.range(0));
    for (auto _ : state) {
      filt::Filtrum phi(m);
      benchmark::DoNotOptimize(filt::filtrum_space(phi));
    }
  }
  BENCHMARK(BM_filtrum_space)->Arg(12)->Arg(30)->Arg(60)->Arg(210);

  void BM_ultrafilters(benchmark::State& state) {
    auto m = bench_monoid(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(filt::ultrafilters(m));
    }
  }
  BENCHMARK(BM_ultrafilters)->Arg(30)->Arg(210);

  void BM_sobrify_chain(benchmark::State& state) {
    auto x = filt::spaces::chain(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(filt::sobrify(x));
    }
  }
  BENCHMARK(BM_sobrify_chain)->DenseRange(2, 8, 2);

  void BM_characterize_filtrum(benchmark::State& state) {
    filt::Filtrum phi(bench_monoid(state.range(0)));
    auto          x = filt::filtrum_space(phi);
    for (auto _ : state) {
      benchmark::DoNotOptimize(filt::characterize_filtrum_space(x));
    }
  }
  BENCHMARK(BM_characterize_filtrum)->Arg(6)->Arg(12)->Arg(30);

  void BM_minimal_elements(benchmark::State& state) {
    std::mt19937_64                         rng(5);
    std::vector<filt::factorial::Exponents> set(static_cast<std::size_t>(state.range(0)),
                                                filt::factorial::Exponents(4));
    for (auto& v : set) {
      for (auto& x : v) {
        x = rng() % 11;
      }
    }
    for (auto _ : state) {
      if (state.range(1) == 0) {
        benchmark::DoNotOptimize(filt::factorial::minimal_elements_pairwise(set));
      } else {
        benchmark::DoNotOptimize(filt::factorial::minimal_elements_recursive(set));
      }
    }
  }
  BENCHMARK(BM_minimal_elements)->ArgsProduct({{16, 128, 1024}, {0, 1}});

}  // namespace

BENCHMARK_MAIN();
