// OpenMP kernels against their serial references.
#include <benchmark/benchmark.h>

#include "lgraph/generators.hpp"
#include "lgraph/labeling.hpp"
#include "lgraph/lift3d.hpp"
#include "lgraph/lrep.hpp"
#include "lgraph/recognition.hpp"
#include "lgraph/schnyder.hpp"

using namespace lgraph;

namespace {

struct Instance {
  SchnyderRealizer r;
  LRepresentation rep;
  CuboidRepresentation cubes;
};

Instance make(int n) {
  auto r = compute_realizer(random_triangulation(n, 7), {0, 1, n - 1});
  auto d = delete_green(r);
  auto rep = equilateralize(build_lrep(d.graph, two_canonical_from_labeling(labeling_from_realizer(r, d))));
  auto cubes = lift_cuboids(rep, r, heights_from_canonical(canonical_order_from_realizer(r)));
  return {r, rep, cubes};
}

// small n only: large random stackings are almost never planar
PlaneGraph stacking(int n) {
  for (std::uint64_t seed = 0;; ++seed) {
    auto g = random_stacking(n, 500 + seed);
    if (is_planar(g)) return g;
  }
}

template <Report (*F)(const LRepresentation&)>
void BM_lrep(benchmark::State& st) {
  auto in = make(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(F(in.rep));
}

template <CuboidCheck (*F)(const CuboidRepresentation&)>
void BM_cuboids(benchmark::State& st) {
  auto in = make(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(F(in.cubes));
}

template <Recognition (*F)(const PlaneGraph&)>
void BM_recognize_stacking(benchmark::State& st) {
  auto g = stacking(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(F(g));
}

// positive instances: a triangulation with its green edges removed
template <Recognition (*F)(const PlaneGraph&)>
void BM_recognize_lgraph(benchmark::State& st) {
  auto in = make(static_cast<int>(st.range(0)));
  auto g = in.rep.host;
  for (auto _ : st) benchmark::DoNotOptimize(F(g));
}

}  // namespace

BENCHMARK(BM_lrep<validate_lrep>)->Name("validate_lrep/omp")->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lrep<validate_lrep_serial>)->Name("validate_lrep/serial")->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cuboids<validate_cuboids>)->Name("validate_cuboids/omp")->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cuboids<validate_cuboids_serial>)
    ->Name("validate_cuboids/serial")
    ->Arg(50)
    ->Arg(200)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_recognize_stacking<recognize>)->Name("recognize_stacking/omp")->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_recognize_stacking<recognize_serial>)
    ->Name("recognize_stacking/serial")
    ->Arg(9)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_recognize_lgraph<recognize>)->Name("recognize_lgraph/omp")->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_recognize_lgraph<recognize_serial>)
    ->Name("recognize_lgraph/serial")
    ->Arg(30)
    ->Arg(60)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
