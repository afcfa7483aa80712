#include <benchmark/benchmark.h>

#include "tcs/coskeleton.hpp"
#include "tcs/domains.hpp"
#include "tcs/group.hpp"
#include "tcs/invariants.hpp"
#include "tcs/io.hpp"
#include "tcs/kan.hpp"
#include "tcs/laws.hpp"
#include "tcs/mapping.hpp"
#include "tcs/products.hpp"
#include "tcs/spaces.hpp"

using namespace tcs;

namespace {

// Group order n = 2..8 for the cyclic-group sweeps.
void cyclic_orders(benchmark::internal::Benchmark* b) {
  for (int n = 2; n <= 8; n += 2) b->Arg(n);
}

void BM_ClassifyingSpace(benchmark::State& state) {
  const auto g = FiniteGroup::cyclic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classifying_space(g));
}
BENCHMARK(BM_ClassifyingSpace)->Apply(cyclic_orders);

void BM_RaiseBound(benchmark::State& state) {
  auto b = classifying_space(FiniteGroup::symmetric(3));
  const int target = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(raise_bound(b, target));
}
BENCHMARK(BM_RaiseBound)->DenseRange(3, 4);

void BM_KanCheck(benchmark::State& state) {
  auto k = eilenberg_maclane(FiniteGroup::cyclic(static_cast<int>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(kan_check(k.ptr()));
}
BENCHMARK(BM_KanCheck)->DenseRange(2, 4);

void BM_FundamentalGroup(benchmark::State& state) {
  auto b = product(classifying_space(FiniteGroup::cyclic(static_cast<int>(state.range(0)))),
                   classifying_space(FiniteGroup::cyclic(2)));
  for (auto _ : state) benchmark::DoNotOptimize(pi_n(b, 0, 1));
}
BENCHMARK(BM_FundamentalGroup)->Apply(cyclic_orders);

void BM_HomComplex(benchmark::State& state) {
  const auto g = FiniteGroup::cyclic(static_cast<int>(state.range(0)));
  auto b = classifying_space(g);
  for (auto _ : state) benchmark::DoNotOptimize(hom_complex(b, b));
}
BENCHMARK(BM_HomComplex)->DenseRange(2, 4);

void BM_FreeLoops(benchmark::State& state) {
  auto b = classifying_space(FiniteGroup::symmetric(3));
  AuxiliaryDomain circle(share(simplicial_circle(b.bound())));
  for (auto _ : state) benchmark::DoNotOptimize(pi0(hom_complex(circle, b)));
}
BENCHMARK(BM_FreeLoops);

void BM_AreEquivalent(benchmark::State& state) {
  auto l = loop_space(eilenberg_maclane(FiniteGroup::cyclic(2), 2), 0);
  auto b = classifying_space(FiniteGroup::cyclic(2));
  for (auto _ : state) benchmark::DoNotOptimize(are_equivalent(l, b));
}
BENCHMARK(BM_AreEquivalent);

void BM_HomotopyQuotient(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::vector<SimplexId>> shift;
  for (int g = 0; g < n; ++g) {
    std::vector<SimplexId> row;
    for (int x = 0; x < n; ++x) row.push_back(static_cast<SimplexId>((g + x) % n));
    shift.push_back(row);
  }
  auto a = GroupAction::on_vertices(FiniteGroup::cyclic(n), discrete(static_cast<std::size_t>(n)), shift);
  for (auto _ : state) benchmark::DoNotOptimize(homotopy_quotient(a));
}
BENCHMARK(BM_HomotopyQuotient)->Apply(cyclic_orders);

void BM_Serialization(benchmark::State& state) {
  auto b = raise_bound(classifying_space(FiniteGroup::symmetric(3)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(complex_from_json(complex_to_json(b.data())));
}
BENCHMARK(BM_Serialization);

void BM_LawSuite(benchmark::State& state) {
  SuiteOptions options;
  for (auto _ : state) {
    options.seed = static_cast<std::uint64_t>(state.iterations()) + 1;
    benchmark::DoNotOptimize(run_suite(options));
  }
}
BENCHMARK(BM_LawSuite)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace
BENCHMARK_MAIN();
