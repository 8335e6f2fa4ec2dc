// Microbenchmarks for the expensive stages. Fixtures are loaded once.
#include <benchmark/benchmark.h>

#include <map>

#include "srgforge/cliques.hpp"
#include "srgforge/construct.hpp"
#include "srgforge/pipeline.hpp"
#include "srgforge/search.hpp"

using namespace srgforge;

namespace {

const FixtureSet& u42() {
  static const FixtureSet set = load_fixtures(std::string(SRGFORGE_FIXTURE_DIR) + "/u42/manifest.json", false);
  return set;
}

const FixtureSet& a8() {
  static const FixtureSet set = load_fixtures(std::string(SRGFORGE_FIXTURE_DIR) + "/a8/manifest.json", false);
  return set;
}

const Graph& graph(const FixtureSet& set, const char* name) {
  static std::map<std::string, Graph> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, named_graph(set, set.graph(name))).first;
  return it->second;
}

void BM_CosetAction540(benchmark::State& state) {
  const auto& set = u42();
  const auto& sub = set.subgroup("H2_9");
  for (auto _ : state) benchmark::DoNotOptimize(coset_action(set.group, sub.group).rank());
}
BENCHMARK(BM_CosetAction540)->Unit(benchmark::kMillisecond);

void BM_OrbitalAlgebra540(benchmark::State& state) {
  const auto& set = u42();
  const auto& act = fixture_action(set, set.subgroup("H2_9"));
  for (auto _ : state) benchmark::DoNotOptimize(OrbitalAlgebra(act).rank());
}
BENCHMARK(BM_OrbitalAlgebra540)->Unit(benchmark::kMillisecond);

void BM_EquitablePartition540(benchmark::State& state) {
  const Graph& g = graph(u42(), "G2_10");
  for (auto _ : state) benchmark::DoNotOptimize(equitable_partition(g).size());
}
BENCHMARK(BM_EquitablePartition540)->Unit(benchmark::kMillisecond);

void BM_Fingerprint540(benchmark::State& state) {
  const Graph& g = graph(u42(), "G2_10");
  for (auto _ : state) benchmark::DoNotOptimize(invariant_fingerprint(g));
}
BENCHMARK(BM_Fingerprint540)->Unit(benchmark::kMillisecond);

void BM_Isomorphism540(benchmark::State& state) {
  const Graph& g = graph(u42(), "G2_9");
  std::vector<Point> img(g.order());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<Point>((i * 7 + 3) % img.size());
  const Graph h = g.relabelled(Permutation(img));
  for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(g, h).isomorphic);
}
BENCHMARK(BM_Isomorphism540)->Unit(benchmark::kMillisecond);

void BM_Automorphisms(benchmark::State& state, const char* name) {
  const Graph& g = graph(u42(), name);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).order());
}
BENCHMARK_CAPTURE(BM_Automorphisms, G2_1, "G2_1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Automorphisms, G2_12, "G2_12")->Unit(benchmark::kMillisecond);

void BM_Cliques12(benchmark::State& state) {
  const Graph& g = graph(u42(), "G2_9");
  for (auto _ : state) benchmark::DoNotOptimize(count_cliques(g, 12, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Cliques12)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SearchA8(benchmark::State& state) {
  const auto& set = a8();
  SearchOptions options;
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(srg_search(set, options).rows.size());
}
BENCHMARK(BM_SearchA8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
