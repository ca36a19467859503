#include <benchmark/benchmark.h>

#include "lmm/classical.hpp"
#include "lmm/fuzz.hpp"
#include "lmm/logarithmic.hpp"

using namespace lmm;

namespace {

Image test_image(int size) {
  fuzz::Rng rng(1);
  return fuzz::integer_image(rng, size, size, 0, 255);
}

void BM_LogDilate(benchmark::State& state, logarithmic::Impl impl, bool flat) {
  const Image f = test_image(static_cast<int>(state.range(0)));
  const auto b = flat ? flat_sf(5.0, SfKind::logarithmic)
                      : hemisphere_sf(5.0, 40.0, SfKind::logarithmic);
  for (auto _ : state) benchmark::DoNotOptimize(logarithmic::dilate(f, b, impl));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.size()));
}

void BM_ClassicalDilate(benchmark::State& state, bool reference, bool flat) {
  const Image f = test_image(static_cast<int>(state.range(0)));
  const auto b = flat ? flat_sf(5.0, SfKind::additive) : hemisphere_sf(5.0, 40.0, SfKind::additive);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference ? classical::reference::dilate(f, b)
                                       : classical::dilate(f, b));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.size()));
}

}  // namespace

BENCHMARK_CAPTURE(BM_LogDilate, direct_hemisphere, logarithmic::Impl::direct, false)->Arg(128)->Arg(256);
BENCHMARK_CAPTURE(BM_LogDilate, iso_hemisphere, logarithmic::Impl::isomorphism, false)->Arg(128)->Arg(256);
BENCHMARK_CAPTURE(BM_LogDilate, direct_flat, logarithmic::Impl::direct, true)->Arg(256);
BENCHMARK_CAPTURE(BM_LogDilate, iso_flat, logarithmic::Impl::isomorphism, true)->Arg(256);
BENCHMARK_CAPTURE(BM_ClassicalDilate, reference_hemisphere, true, false)->Arg(256);
BENCHMARK_CAPTURE(BM_ClassicalDilate, optimized_hemisphere, false, false)->Arg(256);
BENCHMARK_CAPTURE(BM_ClassicalDilate, reference_flat, true, true)->Arg(256);
BENCHMARK_CAPTURE(BM_ClassicalDilate, optimized_flat, false, true)->Arg(256);

BENCHMARK_MAIN();
