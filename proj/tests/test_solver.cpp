#include "tdlab/generators.hpp"
#include "tdlab/graph_io.hpp"
#include "tdlab/minors.hpp"
#include "tdlab/solver.hpp"
#include "tdlab/sweeps.hpp"

#include <doctest.h>

#include <random>
#include <thread>

using namespace tdlab;

namespace {

auto certified(const Graph &g, SolverConfig config = {}) -> int {
  const auto cert = treedepth(g, config);
  REQUIRE(is_valid(verify_ranking(g, cert.witness)));
  REQUIRE(cert.witness.max_label() == cert.value);
  return cert.value;
}

} // namespace

TEST_CASE("brute-force oracle") {
  for (int m = 1; m <= 5; ++m)
    CHECK(brute_force_td(complete(m)) == m);
  CHECK(brute_force_td(cycle(5)) == 4);
  CHECK(brute_force_td(path(4)) == 3);
  CHECK(brute_force_td(path(7)) == 3);
  CHECK(brute_force_td(path(8)) == 4);
  CHECK_THROWS_AS(brute_force_td(path(9)), std::invalid_argument);
}

TEST_CASE("exact values on the named families") {
  CHECK(certified(complete(1)) == 1);
  CHECK(certified(cycle(5)) == 4);
  CHECK(certified(path(4)) == 3);
  for (int k = 1; k <= 8; ++k)
    CHECK(certified(k_net(k)) == k + 1);
  for (int a = 1; a <= 7; ++a)
    CHECK(certified(cartesian_k2(a)) == (3 * a + 1) / 2);
  for (int n = 3; n <= 8; ++n)
    CHECK(certified(h_n(n).graph) == n + 1);
  CHECK(certified(complete(20)) == 20);
  CHECK(certified(Graph(5)) == 1);
}

TEST_CASE("decision form") {
  CHECK_FALSE(treedepth_le(cycle(5), 3));
  CHECK(treedepth_le(cycle(5), 4));
  CHECK_FALSE(treedepth_le(h_n(5).graph, 5));
  CHECK(treedepth_le(h_n(5).graph, 6));
  CHECK_FALSE(treedepth_le(path(2), 0));
  CHECK_THROWS_AS(treedepth_le(path(2), -1), std::invalid_argument);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    CHECK(treedepth_le(random_graph(n, 0.5, rng()), n));
  }

  // the decision queries share one memo with the exact solve
  const auto g = h_n(6).graph;
  TreedepthSolver solver(g);
  CHECK_FALSE(solver.at_most(6));
  const auto after_decision = solver.stats().memo_entries;
  CHECK(after_decision > 0);
  CHECK(solver.solve().value == 7);
  CHECK(solver.stats().memo_entries >= after_decision);
}

TEST_CASE("cheap bounds") {
  const auto k6 = bounds(complete(6));
  CHECK(k6.lower >= 6);
  CHECK(k6.upper == 6);
  CHECK(bounds(path(7)).lower >= 3);
  CHECK(bounds(h_n(5).graph).lower >= 4);
  CHECK(clique_lower_bound(h_n(5).graph) == 4);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto g = random_graph(n, 0.45, rng());
    const auto b = bounds(g);
    const int td = brute_force_td(g);
    CHECK(b.lower <= td);
    CHECK(td <= b.upper);
  }
}

TEST_CASE("solver agrees with brute force on all connected graphs up to 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    const auto result = oracle_sweep(connected_labelled_graphs(n));
    INFO(result.first_failure);
    CHECK(result.ok());
  }
}

TEST_CASE("tree-depth of a disconnected graph is the maximum over components") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_graph(1 + static_cast<int>(rng() % 8), 0.5, rng());
    const auto b = random_graph(1 + static_cast<int>(rng() % 8), 0.5, rng());
    const int joined = certified(disjoint_union(a, b));
    CHECK(joined == std::max(certified(a), certified(b)));
  }
}

TEST_CASE("tree-depth never grows under one-step minors") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const auto g = random_graph(n, 0.4, rng());
    const int td = certified(g);
    for (const auto &step : one_step_minors(g))
      CHECK(certified(apply(g, step)) <= td);
    for (int x = 0; x < n; ++x)
      CHECK(certified(delete_vertex(g, x)) <= td);
  }
}

TEST_CASE("H_{k+1} sits at least one level above H_k") {
  for (int k = 3; k <= 7; ++k)
    CHECK(certified(h_n(k + 1).graph) >= 1 + certified(h_n(k).graph));
}

TEST_CASE("budget exhaustion reports bounds instead of a value") {
  SolverConfig tight;
  tight.node_budget = 3;
  const auto g = h_n(8).graph;
  try {
    (void)treedepth(g, tight);
    FAIL("expected BudgetExhausted");
  } catch (const BudgetExhausted &e) {
    CHECK(e.bounds().lower <= 9);
    CHECK(e.bounds().upper >= 9);
    CHECK(e.bounds().lower >= 1);
  }
  CHECK_THROWS_AS(treedepth_le(g, 8, tight), BudgetExhausted);

  SolverConfig timed;
  timed.time_budget_seconds = 1e-9;
  const auto big = random_graph(40, 0.3, 5);
  CHECK_THROWS_AS(treedepth(big, timed), BudgetExhausted);
}

TEST_CASE("certificates do not depend on the thread count") {
  std::mt19937_64 rng(41);
  std::vector<Graph> graphs;
  for (int n = 4; n <= 9; ++n)
    graphs.push_back(h_n(n).graph);
  for (int trial = 0; trial < 20; ++trial)
    graphs.push_back(random_graph(10 + static_cast<int>(rng() % 8), 0.4, rng()));
  for (const auto &g : graphs) {
    SolverConfig serial;
    SolverConfig parallel;
    parallel.threads = 4;
    const auto a = treedepth(g, serial);
    const auto b = treedepth(g, parallel);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("memo store tightens monotonically under concurrent writers") {
  MemoStore memo;
  const VertexSet key(0b1011);
  std::vector<std::thread> writers;
  for (int t = 0; t < 8; ++t)
    writers.emplace_back([&, t] {
      for (int i = 0; i < 1000; ++i)
        memo.tighten(key, 1 + (t + i) % 3, 9 - (t * i) % 4);
    });
  for (auto &w : writers)
    w.join();
  const auto entry = memo.find(key);
  REQUIRE(entry.has_value());
  CHECK(entry->lower == 3);
  CHECK(entry->upper == 6);
  CHECK(memo.size() == 1);

  MemoStore tiny(1);
  tiny.tighten(VertexSet(1), 1, 1);
  tiny.tighten(VertexSet(2), 1, 1);
  CHECK(tiny.size() == 1);
  CHECK_FALSE(tiny.find(VertexSet(2)).has_value());
}
