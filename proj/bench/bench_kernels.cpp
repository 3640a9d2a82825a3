// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "iecp/feasibility.hpp"
#include "iecp/fstab.hpp"
#include "iecp/generators.hpp"
#include "iecp/spectral.hpp"

namespace {

using namespace iecp;

struct Instance {
  Graph graph;
  CentralityTarget target;
};

Instance random_instance(int n, std::uint64_t seed) {
  Rng rng(seed);
  Graph g = random_connected_graph(n, rng, 0.15);
  std::vector<Rational> c(n);
  for (auto& v : c) v = random_positive_rational(rng, 9, 4);
  return {std::move(g), CentralityTarget(std::move(c))};
}

// all_witnesses makes both versions evaluate every condition.
template <bool Parallel>
void BM_Feasibility(benchmark::State& state) {
  Instance inst = random_instance(static_cast<int>(state.range(0)), 1);
  FeasibilityOptions options;
  options.all_witnesses = true;
  for (auto _ : state) {
    auto v = Parallel ? check_feasibility(inst.graph, inst.target, options)
                      : check_feasibility_serial(inst.graph, inst.target, options);
    benchmark::DoNotOptimize(v.feasible);
  }
}

template <bool Parallel>
void BM_FarkasScan(benchmark::State& state) {
  Instance inst = random_instance(static_cast<int>(state.range(0)), 2);
  const Rational eps(1, 10);
  for (auto _ : state) {
    auto s = Parallel ? farkas_scan(inst.graph, inst.target, eps, true)
                      : farkas_scan_serial(inst.graph, inst.target, eps, true);
    benchmark::DoNotOptimize(s.pass);
  }
}

template <bool Parallel>
void BM_ShiftedMatvec(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> a(static_cast<std::size_t>(n) * n), x(n), y(n);
  for (auto& v : a) v = u(rng);
  for (auto& v : x) v = u(rng);
  for (auto _ : state) {
    if (Parallel) kernels::shifted_matvec(a, n, 1.0, x, y);
    else kernels::shifted_matvec_serial(a, n, 1.0, x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n) * n);
}

BENCHMARK(BM_Feasibility<true>)->Name("feasibility/parallel")->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Feasibility<false>)->Name("feasibility/serial")->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FarkasScan<true>)->Name("farkas_scan/parallel")->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FarkasScan<false>)->Name("farkas_scan/serial")->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShiftedMatvec<true>)->Name("matvec/parallel")->Arg(256)->Arg(1024);
BENCHMARK(BM_ShiftedMatvec<false>)->Name("matvec/serial")->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
