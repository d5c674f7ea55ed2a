// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "gtrace/boundary.hpp"
#include "gtrace/trace_polytope.hpp"

using namespace gtrace;

namespace {

// Many singular vertices feeding a few regular ones gives a trace polytope
// with a large number of extreme points.
Graph wide_graph(std::size_t sources, std::size_t sinks, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < sources + sinks; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Graph::EdgeSpec> edges;
  std::uniform_int_distribution<std::size_t> sink(sources, sources + sinks - 1);
  for (std::size_t i = 0; i < sources; ++i) {
    edges.push_back({"e" + std::to_string(edges.size()), names[i], names[sink(rng)]});
  }
  for (std::size_t i = sources; i + 1 < sources + sinks; ++i) {
    edges.push_back({"e" + std::to_string(edges.size()), names[i], names[i + 1]});
  }
  return Graph(names, edges);
}

Graph bouquet(std::size_t loops) {
  std::vector<Graph::EdgeSpec> edges;
  for (std::size_t i = 0; i < loops; ++i) edges.push_back({"l" + std::to_string(i), "v", "w"});
  edges.push_back({"back", "w", "v"});
  edges.push_back({"self", "w", "w"});
  return Graph({"v", "w"}, edges);
}

void extreme_points(benchmark::State& state, Execution exec) {
  const Graph g = wide_graph(static_cast<std::size_t>(state.range(0)), 3, 1);
  std::size_t count = 0;
  for (auto _ : state) {
    auto traces = extreme_traces(g, exec);
    count = traces.size();
    benchmark::DoNotOptimize(traces);
  }
  state.counters["extreme_points"] = static_cast<double>(count);
}

void boundary_propagation(benchmark::State& state, Execution exec) {
  const Graph g = bouquet(3);
  const auto mu = extreme_traces(g);
  const VertexWeights w = mu.empty() ? VertexWeights(g.vertex_count(), Rational(1, 2)) : mu.front().values;
  const auto depth = static_cast<std::size_t>(state.range(0));
  std::size_t paths = 0;
  for (auto _ : state) {
    auto levels = propagate_boundary_measure(g, w, depth, exec, 10'000'000);
    paths = levels.back().paths.size();
    benchmark::DoNotOptimize(levels);
  }
  state.counters["paths"] = static_cast<double>(paths);
}

}  // namespace

BENCHMARK_CAPTURE(extreme_points, serial, Execution::Serial)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(extreme_points, parallel, Execution::Parallel)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(boundary_propagation, serial, Execution::Serial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(boundary_propagation, parallel, Execution::Parallel)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
