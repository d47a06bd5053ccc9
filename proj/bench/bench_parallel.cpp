// Serial reference vs OpenMP kernels: wall time and result agreement.
//
//   bench_parallel [threads]

#include "tdlab/critical.hpp"
#include "tdlab/generators.hpp"
#include "tdlab/solver.hpp"
#include "tdlab/sweeps.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <thread>

using namespace tdlab;
using h_clock = std::chrono::steady_clock;

namespace {

template <typename F>
auto timed(F &&work) -> std::pair<double, decltype(work())> {
  const auto start = h_clock::now();
  auto result = work();
  return {std::chrono::duration<double, std::milli>(h_clock::now() - start).count(), std::move(result)};
}

auto report(const char *name, double serial_ms, double parallel_ms, bool agree) -> void {
  std::printf("%-44s serial %10.2f ms  parallel %10.2f ms  speedup %5.2fx  %s\n", name, serial_ms, parallel_ms,
              serial_ms / std::max(parallel_ms, 1e-9), agree ? "agree" : "MISMATCH");
}

} // namespace

int main(int argc, char **argv) {
  const int threads = argc > 1 ? std::atoi(argv[1]) : static_cast<int>(std::max(2U, std::thread::hardware_concurrency()));
  std::printf("threads: %d\n", threads);

  SolverConfig serial;
  SolverConfig parallel;
  parallel.threads = threads;

  for (int n = 8; n <= 10; ++n) {
    const auto g = h_n(n).graph;
    auto [s_ms, s] = timed([&] { return treedepth(g, serial); });
    auto [p_ms, p] = timed([&] { return treedepth(g, parallel); });
    report(("treedepth H_" + std::to_string(n)).c_str(), s_ms, p_ms, s.value == p.value && s.witness == p.witness);
  }

  std::mt19937_64 rng(4);
  for (int n : {18, 20, 22}) {
    const auto g = random_graph(n, 0.3, rng());
    auto [s_ms, s] = timed([&] { return treedepth(g, serial); });
    auto [p_ms, p] = timed([&] { return treedepth(g, parallel); });
    report(("treedepth G(" + std::to_string(n) + ", 0.3)").c_str(), s_ms, p_ms,
           s.value == p.value && s.witness == p.witness);
  }

  {
    const auto g = h_n(7).graph;
    auto [s_ms, s] = timed([&] { return is_critical(g, serial); });
    auto [p_ms, p] = timed([&] { return is_critical(g, parallel); });
    report("is_critical H_7", s_ms, p_ms, s.critical == p.critical && s.steps.size() == p.steps.size());
  }

  const auto graphs = connected_labelled_graphs(6);
  {
    auto [s_ms, s] = timed([&] { return oracle_sweep(graphs, 1); });
    auto [p_ms, p] = timed([&] { return oracle_sweep(graphs, threads); });
    report("oracle sweep, connected 6-vertex graphs", s_ms, p_ms, s.disagreements == p.disagreements);
  }
  {
    auto [s_ms, s] = timed([&] { return starclique_sweep(graphs, 1); });
    auto [p_ms, p] = timed([&] { return starclique_sweep(graphs, threads); });
    report("star-clique sweep, connected 6-vertex graphs", s_ms, p_ms, s.disagreements == p.disagreements);
  }
  return 0;
}
