// Serial reference kernels against their OpenMP versions. Arg 0 is serial,
// arg 1 parallel.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "pfister/abstract_tight.hpp"
#include "pfister/kernels.hpp"
#include "pfister/oracle.hpp"
#include "pfister/parse.hpp"

using namespace pfister;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void set_label(benchmark::State& st) {
  st.SetLabel(st.range(0) == 0 ? "serial" : "parallel x" + std::to_string(kernels::max_threads()));
}

// Scan with no hit, so both versions visit the whole range.
void BM_FirstHit(benchmark::State& st) {
  const auto hit = [](std::uint64_t i) {
    std::uint64_t z = i * 0x9E3779B97F4A7C15ull;
    for (int r = 0; r < 8; ++r) z = (z ^ (z >> 29)) * 0xBF58476D1CE4E5B9ull;
    return z == 1;
  };
  for (auto _ : st) benchmark::DoNotOptimize(kernels::first_hit(0, 1 << 20, hit, exec_of(st)));
  set_label(st);
}
BENCHMARK(BM_FirstHit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// [1, delta] with trace(delta) = 1 is anisotropic, so the scan is exhaustive.
void BM_FindIsotropic(benchmark::State& st) {
  const FiniteField f = FiniteField::standard(10);
  FiniteField::Element delta = 1;
  while (f.trace(delta) == 0) ++delta;
  const FiniteForm phi = FiniteBlockForm{f, {FiniteBlock{false, 1, delta, 1}}}.to_dense();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::find_isotropic(phi, false, exec_of(st)));
  set_label(st);
}
BENCHMARK(BM_FindIsotropic)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveWittIndex(benchmark::State& st) {
  const FiniteField f = FiniteField::standard(2);
  const FiniteForm phi = FiniteBlockForm{f,
                                         {FiniteBlock{false, 1, 1, 1}, FiniteBlock{false, 2, 3, 1},
                                          FiniteBlock{false, 1, 2, 3}, FiniteBlock{false, 3, 3, 2}}}
                             .to_dense();
  for (auto _ : st) benchmark::DoNotOptimize(exhaustive_witt_index(phi, exec_of(st)));
  set_label(st);
}
BENCHMARK(BM_ExhaustiveWittIndex)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// Anisotropic by the value-class argument, so the search finds nothing.
void BM_IsotropySearch(benchmark::State& st) {
  const RingPtr ring = make_ring({"x", "y", "z"});
  const QuadraticForm phi = parse_form("z*[1,x] _|_ x*[1,y] _|_ [1,x+y]", ring);
  IsotropyOptions opts;
  opts.degree_bound = 1;
  opts.exec = exec_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(isotropy_search(phi, opts));
  set_label(st);
}
BENCHMARK(BM_IsotropySearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TightFuzz(benchmark::State& st) {
  tight::FuzzOptions opts;
  opts.max_dim_v = 4;
  opts.samples = 100;
  opts.exec = exec_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(tight::fuzz(opts));
  set_label(st);
}
BENCHMARK(BM_TightFuzz)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
