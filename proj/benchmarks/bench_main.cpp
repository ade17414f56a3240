#include <benchmark/benchmark.h>

#include "skelcov/fixtures.hpp"
#include "skelcov/galois.hpp"
#include "skelcov/rigid.hpp"

using namespace skelcov;

namespace {

void BM_EnumerateCoverings(benchmark::State& state) {
  auto base = fixtures::theta2();
  int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto reps = enumerate_coverings(base, degree, true);
    benchmark::DoNotOptimize(reps.size());
  }
}
BENCHMARK(BM_EnumerateCoverings)->Arg(2)->Arg(3)->Arg(4);

void BM_LiftingClasses(benchmark::State& state) {
  auto phi = fixtures::tate_cover();
  for (auto _ : state) {
    auto lifting = lifting_classes(phi);
    benchmark::DoNotOptimize(lifting.classes.size());
  }
}
BENCHMARK(BM_LiftingClasses);

void BM_HallRecursion(benchmark::State& state) {
  for (auto _ : state) {
    auto count = count_index_subgroups_free(3, state.range(0));
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_HallRecursion)->Arg(5)->Arg(7);

void BM_GaloisClosure(benchmark::State& state) {
  auto rep = fixtures::s3_cover();
  for (auto _ : state) {
    auto closure = galois_closure(rep);
    benchmark::DoNotOptimize(closure.closure.degree());
  }
}
BENCHMARK(BM_GaloisClosure);

void BM_DivisorClass(benchmark::State& state) {
  auto g = fixtures::theta2();
  Divisor d{DivisorEntry::on_vertex("v1", 3), DivisorEntry::on_edge("e2", Rational(1, 3), -1),
            DivisorEntry::on_vertex("v2", -2)};
  for (auto _ : state) {
    auto cls = divisor_class(g, d);
    benchmark::DoNotOptimize(cls.zero);
  }
}
BENCHMARK(BM_DivisorClass);

void BM_CyclicSplitCovers(benchmark::State& state) {
  auto c = canonical_complex(fixtures::theta2(), 0);
  for (auto _ : state) {
    auto covers = cyclic_split_covers(c, state.range(0));
    benchmark::DoNotOptimize(covers.size());
  }
}
BENCHMARK(BM_CyclicSplitCovers)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
