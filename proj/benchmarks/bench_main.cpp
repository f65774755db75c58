#include <benchmark/benchmark.h>

#include "coxkit/bruhat.hpp"
#include "coxkit/coxeter.hpp"
#include "coxkit/parabolic.hpp"
#include "coxkit/symgroup.hpp"

using namespace cox;

namespace {

void BM_BuildSystem(benchmark::State& state, const char* name) {
  for (auto _ : state) {
    auto sys = CoxeterSystem::build(CoxeterSpec::named(name));
    benchmark::DoNotOptimize(sys.positive_roots());
  }
}
BENCHMARK_CAPTURE(BM_BuildSystem, a5, "A5");
BENCHMARK_CAPTURE(BM_BuildSystem, h4, "H4");

void BM_Enumerate(benchmark::State& state, const char* name) {
  for (auto _ : state) {
    // rebuilt each round so the cached enumeration is timed, not skipped
    auto sys = CoxeterSystem::build(CoxeterSpec::named(name));
    benchmark::DoNotOptimize(sys.order());
  }
}
BENCHMARK_CAPTURE(BM_Enumerate, a4, "A4");
BENCHMARK_CAPTURE(BM_Enumerate, h3, "H3");

void BM_BruhatAllPairsCold(benchmark::State& state) {
  for (auto _ : state) {
    auto sys = CoxeterSystem::build(CoxeterSpec::named("A3"));
    const auto& elems = sys.elements();
    std::size_t count = 0;
    for (const Element& u : elems)
      for (const Element& v : elems)
        if (bruhat_leq(u, v)) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_BruhatAllPairsCold);

void BM_BruhatAllPairsMemoized(benchmark::State& state) {
  auto sys = CoxeterSystem::build(CoxeterSpec::named("B3"));
  const auto& elems = sys.elements();
  for (auto _ : state) {
    std::size_t count = 0;
    for (const Element& u : elems)
      for (const Element& v : elems)
        if (bruhat_leq(u, v)) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_BruhatAllPairsMemoized);

void BM_DecomposeDouble(benchmark::State& state) {
  auto sys = CoxeterSystem::build(CoxeterSpec::named("B3"));
  const GenSubset I = GenSubset::of({0, 1});
  const GenSubset J = GenSubset::of({1, 2});
  for (auto _ : state) {
    int total = 0;
    for (const Element& w : sys.elements()) total += decompose_double(w, I, J).b.length();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_DecomposeDouble);

void BM_CosetDominanceS7(benchmark::State& state) {
  const auto u = sn::Permutation::parse("1342567");
  const auto v = sn::Permutation::parse("3471526");
  const GenSubset I = GenSubset::of({0, 1, 3, 5});
  const GenSubset J = GenSubset::of({0, 2, 3, 4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sn::coset_dominance_leq(u, v, I, J));
  }
}
BENCHMARK(BM_CosetDominanceS7);

}  // namespace

BENCHMARK_MAIN();
