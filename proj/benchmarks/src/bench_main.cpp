#include <benchmark/benchmark.h>

#include "hqds/catalog.hpp"
#include "hqds/classifier.hpp"
#include "hqds/derivation.hpp"

using namespace hqds;

namespace {

StructureTensorQ conjugated_sample(Family f, unsigned long long seed) {
  const auto& e = catalog_entry(f);
  std::vector<Rational> ps =
      e.sample_params.empty() ? std::vector<Rational>{} : e.sample_params[0];
  StructureTensorQ t = emit_canonical(f, ps).tensor;
  ExactField fld;
  return *conjugate_tensor(t, random_conjugation(seed), fld);
}

void BM_Classify(benchmark::State& state) {
  Family f = static_cast<Family>(state.range(0));
  StructureTensorQ t = conjugated_sample(f, 42);
  for (auto _ : state) {
    auto res = classify(t);
    benchmark::DoNotOptimize(res.status);
  }
  state.SetLabel(family_name(f));
}

void BM_DerivationAlgebra(benchmark::State& state) {
  Family f = static_cast<Family>(state.range(0));
  StructureTensorQ t = conjugated_sample(f, 7);
  for (auto _ : state) {
    auto ders = derivation_algebra(t);
    benchmark::DoNotOptimize(ders.size());
  }
  state.SetLabel(family_name(f));
}

void BM_DerivationSearch(benchmark::State& state) {
  Family f = static_cast<Family>(state.range(0));
  StructureTensorQ t = conjugated_sample(f, 13);
  for (auto _ : state) {
    auto res = find_semisimple_onedim_kernel(t);
    benchmark::DoNotOptimize(res.found);
  }
  state.SetLabel(family_name(f));
}

void BM_ClassifyCatalogSweep(benchmark::State& state) {
  // One full pass over all 35 canonical tensors per iteration.
  std::vector<StructureTensorQ> tensors;
  for (const auto& e : catalog()) {
    std::vector<Rational> ps =
        e.sample_params.empty() ? std::vector<Rational>{} : e.sample_params[0];
    tensors.push_back(emit_canonical(e.family, ps).tensor);
  }
  for (auto _ : state) {
    int classified = 0;
    for (const auto& t : tensors)
      if (classify(t).status == ClassifyStatus::Classified) ++classified;
    benchmark::DoNotOptimize(classified);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long>(tensors.size()));
}

}  // namespace

BENCHMARK(BM_Classify)
    ->Arg(static_cast<int>(Family::A1))
    ->Arg(static_cast<int>(Family::A10))
    ->Arg(static_cast<int>(Family::A17))
    ->Arg(static_cast<int>(Family::A27))
    ->Arg(static_cast<int>(Family::A32));
BENCHMARK(BM_DerivationAlgebra)
    ->Arg(static_cast<int>(Family::A1))
    ->Arg(static_cast<int>(Family::A10))
    ->Arg(static_cast<int>(Family::A32));
BENCHMARK(BM_DerivationSearch)
    ->Arg(static_cast<int>(Family::A1))
    ->Arg(static_cast<int>(Family::A23))
    ->Arg(static_cast<int>(Family::A32));
BENCHMARK(BM_ClassifyCatalogSweep);

BENCHMARK_MAIN();
