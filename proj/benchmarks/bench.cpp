#include <benchmark/benchmark.h>

#include <random>

#include "shellseq/generators.hpp"
#include "shellseq/homology.hpp"
#include "shellseq/quiver.hpp"
#include "shellseq/smith.hpp"
#include "shellseq/spectral.hpp"

using namespace shellseq;

namespace {

void bm_sphere_homology(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const auto k = underlying_complex(simplex_boundary_shelling(n).tiling);
  const auto z = CoefficientRing::integers();
  for (auto _ : state) benchmark::DoNotOptimize(homology(k, z));
}
BENCHMARK(bm_sphere_homology)->DenseRange(2, 5);

// Sparse matrices with entries in {-1, 0, 1} and three nonzeros per row,
// mimicking the shape of simplicial boundary matrices.
void bm_smith_normal_form(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(42);
  std::uniform_int_distribution<std::size_t> column(0, size - 1);
  std::bernoulli_distribution sign;
  Matrix<int> m(size, size);
  for (std::size_t r = 0; r < size; ++r)
    for (int k = 0; k < 3; ++k) m(r, column(rng)) = sign(rng) ? 1 : -1;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(bm_smith_normal_form)->RangeMultiplier(2)->Range(8, 64);

void bm_quiver_build(benchmark::State& state) {
  const auto t = searched_octahedron_shelling().tiling;
  for (auto _ : state) benchmark::DoNotOptimize(build_quiver(t));
}
BENCHMARK(bm_quiver_build);

void bm_spectral_pages(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const auto gen = simplex_boundary_shelling(n);
  const auto sf = filtration_from_shelling(gen.tiling, gen.order);
  RationalField f;
  for (auto _ : state) benchmark::DoNotOptimize(run_to_limit(sf.complex, f));
}
BENCHMARK(bm_spectral_pages)->DenseRange(2, 4);

void bm_octahedron_enumeration(benchmark::State& state) {
  for (auto _ : state) {
    int count = 0;
    enumerate_octahedron_tilings([&](const MorseTiling&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(bm_octahedron_enumeration);

void bm_octahedron_search(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(searched_octahedron_shelling());
}
BENCHMARK(bm_octahedron_search);

}  // namespace

BENCHMARK_MAIN();
