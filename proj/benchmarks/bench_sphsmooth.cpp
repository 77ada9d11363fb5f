#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include "sphsmooth/catalog.hpp"
#include "sphsmooth/document.hpp"
#include "sphsmooth/smoothness.hpp"

using namespace sphsmooth;

namespace {

Document fixture(const std::string& name) {
  std::ifstream in(std::string(SPHSMOOTH_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::vector<IntVector> random_rows(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<IntVector> out(rows, IntVector(cols));
  for (auto& r : out)
    for (auto& x : r) x = dist(rng);
  return out;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = IntMatrix::from_rows(random_rows(n, n, 1), n);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_ExtremalRays(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  // generators in the open upper half-space keep the cone pointed
  auto gens = random_rows(k, 4, 2);
  for (auto& g : gens) g[3] = abs(g[3]) + 1;
  const RationalCone c(4, gens);
  for (auto _ : state) benchmark::DoNotOptimize(extremal_rays(c));
}
BENCHMARK(BM_ExtremalRays)->Arg(4)->Arg(8)->Arg(16);

void BM_IsSmoothWorkedExample(benchmark::State& state) {
  const auto doc = fixture("example_a3c2.json");
  for (auto _ : state) benchmark::DoNotOptimize(is_smooth(doc.datum, *doc.cone));
}
BENCHMARK(BM_IsSmoothWorkedExample);

void BM_IsSmoothLiftedEntry(benchmark::State& state) {
  const auto doc = fixture("mfs/mfs_" + std::to_string(state.range(0)) + ".json");
  for (auto _ : state) benchmark::DoNotOptimize(is_smooth(doc.datum, *doc.cone));
}
BENCHMARK(BM_IsSmoothLiftedEntry)->Arg(20)->Arg(38)->Arg(42);

void BM_MatchComponent(benchmark::State& state) {
  const auto inst = instantiate(static_cast<int>(state.range(0)), catalog_entry(static_cast<int>(state.range(0))).smallest(1).front());
  for (auto _ : state) benchmark::DoNotOptimize(match_component(inst.system));
}
BENCHMARK(BM_MatchComponent)->Arg(1)->Arg(13)->Arg(42);

}  // namespace

BENCHMARK_MAIN();
