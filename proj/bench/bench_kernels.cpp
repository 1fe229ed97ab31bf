#include <benchmark/benchmark.h>

#include <random>

#include "idg/cograph.hpp"
#include "idg/encodings.hpp"
#include "idg/wellformed.hpp"

using namespace idg;

namespace {

// Threshold graph: a cograph, so the P4 search never exits early.
AdjacencyMatrix threshold_graph(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  AdjacencyMatrix g(n);
  for (std::size_t v = 1; v < n; ++v)
    if (rng() % 2)
      for (std::size_t u = 0; u < v; ++u) g.set(u, v);
  return g;
}

FWGraph random_fw(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution f(3.0 / n), w(1.5 / n);
  FWGraph g;
  for (std::size_t v = 0; v < n; ++v) g.ports.push_back("p" + std::to_string(1000 + v));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (f(rng)) g.f.emplace(g.ports[a], g.ports[b]);
      if (w(rng)) g.w.emplace(g.ports[a], g.ports[b]);
    }
  return g;
}

void p4_parallel(benchmark::State& st) {
  const auto g = threshold_graph(st.range(0), 7);
  for (auto _ : st) benchmark::DoNotOptimize(find_induced_p4(g));
}

void p4_serial(benchmark::State& st) {
  const auto g = threshold_graph(st.range(0), 7);
  for (auto _ : st) benchmark::DoNotOptimize(find_induced_p4_serial(g));
}

void cycles_parallel(benchmark::State& st) {
  const auto g = random_fw(st.range(0), 11);
  for (auto _ : st) benchmark::DoNotOptimize(find_chordless_cycles(g));
}

void cycles_serial(benchmark::State& st) {
  const auto g = random_fw(st.range(0), 11);
  for (auto _ : st) benchmark::DoNotOptimize(find_chordless_cycles_serial(g));
}

void cycles_tree(benchmark::State& st) {
  BinTree t = BinTree::leaf();
  for (int k = 1; k < st.range(0); ++k) t = BinTree::branch(std::move(t), BinTree::leaf());
  const Bundle b = encode_tree(t);
  const FWGraph g = build_fw(b.type, b.term, b.external);
  for (auto _ : st) benchmark::DoNotOptimize(find_chordless_cycles(g));
}

}  // namespace

BENCHMARK(p4_parallel)->Arg(20)->Arg(40)->Arg(80);
BENCHMARK(p4_serial)->Arg(20)->Arg(40)->Arg(80);
BENCHMARK(cycles_parallel)->Arg(30)->Arg(60);
BENCHMARK(cycles_serial)->Arg(30)->Arg(60);
BENCHMARK(cycles_tree)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
