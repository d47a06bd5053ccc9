#include "tdlab/critical.hpp"
#include "tdlab/generators.hpp"
#include "tdlab/graph_io.hpp"
#include "tdlab/report.hpp"
#include "tdlab/sweeps.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace tdlab;

namespace {

/// Largest tree-depth among all minors reachable in 1..depth steps (edge and vertex moves).
auto max_minor_td(const Graph &g, int depth, std::set<std::string> &seen) -> int {
  int best = 0;
  std::vector<MinorStep> steps = one_step_minors(g);
  if (g.order() > 1)
    for (int x = 0; x < g.order(); ++x)
      if (g.degree(x) > 0)
        steps.push_back(MinorStep::delete_vertex(x));
  for (const auto &step : steps) {
    const auto m = apply(g, step);
    const auto key = write_edge_list(m);
    if (!seen.insert(key).second)
      continue;
    best = std::max(best, brute_force_td(m));
    if (depth > 1 && m.order() > 1)
      best = std::max(best, max_minor_td(m, depth - 1, seen));
  }
  return best;
}

} // namespace

TEST_CASE("H_n is critical for n = 4..7") {
  for (int n = 4; n <= 7; ++n) {
    const auto report = is_critical(h_n(n).graph);
    CHECK(report.base_td == n + 1);
    CHECK(report.conclusive);
    CHECK(report.critical);
    CHECK(report.failing_steps.empty());
    CHECK(report.steps.size() == 2 * static_cast<std::size_t>(h_n(n).graph.size()));
    for (const auto &s : report.steps)
      CHECK(s.td.value() < n + 1);
  }
}

TEST_CASE("P_3 is not critical") {
  const auto report = is_critical(path(3));
  CHECK(report.base_td == 2);
  CHECK_FALSE(report.critical);
  // deleting either edge leaves K_2 plus K_1 and contracting either leaves K_2, all still of tree-depth 2
  CHECK(report.failing_steps == std::vector<MinorStep>{MinorStep::delete_edge(0, 1), MinorStep::delete_edge(1, 2),
                                                       MinorStep::contract_edge(0, 1), MinorStep::contract_edge(1, 2)});
  for (const auto &s : report.steps)
    CHECK(brute_force_td(apply(path(3), s.step)) == 2);
}

TEST_CASE("complete graphs are critical") {
  for (int m = 2; m <= 6; ++m) {
    const auto report = is_critical(complete(m));
    CHECK(report.critical);
    // independent check of every one-step minor against the brute-force oracle
    for (const auto &s : report.steps)
      CHECK(brute_force_td(apply(complete(m), s.step)) == *s.td);
  }
}

TEST_CASE("isolated vertices are enumerated and spoil criticality") {
  const auto g = disjoint_union(cycle(5), Graph(1));
  const auto report = is_critical(g);
  CHECK_FALSE(report.critical);
  CHECK(report.failing_steps == std::vector<MinorStep>{MinorStep::delete_vertex(5)});
  CHECK_THROWS_AS(is_critical(Graph(1)), std::invalid_argument);
}

TEST_CASE("criticality budget exhaustion is inconclusive") {
  SolverConfig tight;
  tight.node_budget = 1;
  const auto report = is_critical(h_n(6).graph, tight);
  CHECK_FALSE(report.conclusive);
  CHECK_FALSE(report.critical);
}

TEST_CASE("one-step criticality is not contradicted by deeper minors") {
  std::mt19937_64 rng(77);
  std::vector<Graph> graphs{cycle(5), complete(4), h_n(4).graph, k_net(3), cartesian_k2(3)};
  for (int trial = 0; trial < 40; ++trial)
    graphs.push_back(random_graph(4 + static_cast<int>(rng() % 4), 0.5, rng()));
  int critical_seen = 0;
  for (const auto &g : graphs) {
    const auto report = is_critical(g);
    if (!report.critical)
      continue;
    ++critical_seen;
    std::set<std::string> seen;
    CHECK(max_minor_td(g, 3, seen) < *report.base_td);
  }
  CHECK(critical_seen >= 3);
}

TEST_CASE("star-clique uniqueness test") {
  for (int n = 4; n <= 7; ++n) {
    const auto g = h_n(n).graph;
    CHECK_FALSE(one_unique_starclique(g, 0));
    CHECK(one_unique_starclique(g, 1));
    CHECK(one_unique_starclique(g, n));
  }
  for (int m = 2; m <= 5; ++m)
    for (int v = 0; v < m; ++v)
      CHECK(one_unique_starclique(complete(m), v));
  CHECK_THROWS_AS(one_unique_starclique(Graph(1), 0), std::invalid_argument);
}

TEST_CASE("direct uniqueness search") {
  const auto g = h_n(4).graph;
  CHECK_FALSE(one_unique_direct(g, 0).has_value());
  for (int a = 4; a <= 6; ++a) {
    const auto w = one_unique_direct(g, a);
    REQUIRE(w.has_value());
    CHECK(w->colors() == 5);
    CHECK(is_valid(verify_ranking(g, *w)));
    CHECK(w->with_label(1) == VertexSet::single(a));
  }
  for (int v = 0; v < 3; ++v) {
    const auto w = one_unique_direct(complete(3), v);
    REQUIRE(w.has_value());
    CHECK((*w)[v] == 1);
    CHECK(w->max_label() == 3);
  }
  CHECK(one_unique_direct(Graph(1), 0).has_value());
  CHECK_THROWS_AS(one_unique_direct(h_n(5).graph, 0), std::invalid_argument);
}

TEST_CASE("uniqueness reports") {
  const auto hn = uniqueness_report(h_n(4).graph);
  CHECK(hn.non_1_unique == std::vector<int>{0});
  CHECK(hn.methods_agree);
  CHECK_FALSE(hn.one_unique);
  for (const auto &v : hn.vertices) {
    CHECK_FALSE(v.direct_skipped);
    if (v.witness) {
      CHECK(is_valid(verify_ranking(h_n(4).graph, *v.witness)));
      CHECK(v.witness->with_label(1).size() == 1);
    }
  }

  const auto k4 = uniqueness_report(complete(4));
  CHECK(k4.one_unique);
  CHECK(k4.non_1_unique.empty());

  // the 5-cycle is vertex-transitive, so all vertices share one verdict; both methods agree on it
  const auto c5 = uniqueness_report(cycle(5));
  CHECK(c5.methods_agree);
  CHECK(c5.conclusive);
  for (const auto &v : c5.vertices)
    CHECK(v.one_unique() == c5.vertices[0].one_unique());

  const auto big = uniqueness_report(h_n(5).graph);
  CHECK(big.non_1_unique == std::vector<int>{0});
  for (const auto &v : big.vertices)
    CHECK(v.direct_skipped);
}

TEST_CASE("star-clique test agrees with direct search on connected graphs up to 5 vertices") {
  for (int n = 2; n <= 5; ++n) {
    const auto result = starclique_sweep(connected_labelled_graphs(n));
    INFO(result.first_failure);
    CHECK(result.ok());
  }
}

TEST_CASE("reproduction rows") {
  const auto rows = reproduce_hn(5);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 4);
  CHECK(rows[0].td == 5);
  CHECK(rows[0].critical);
  CHECK(rows[0].non_1_unique == std::vector<int>{0});
  CHECK(rows[0].starclique_td == 5);
  CHECK(rows[0].starclique_isomorphic == true);
  CHECK(rows[0].passed());
  CHECK(rows[1].passed());

  const auto six = reproduce_hn_row(6);
  CHECK(six.td == 7);
  CHECK(six.starclique_td == 8);
  CHECK(six.passed());

  const auto doc = to_json(rows);
  REQUIRE(doc.is_array());
  for (const char *field : {"n", "td", "critical", "non_1_unique", "starclique_td", "witnesses_ok"})
    CHECK(doc[0].contains(field));
  CHECK(doc[0]["non_1_unique"] == nlohmann::json::array({0}));

  CHECK_THROWS_AS(reproduce_hn(3), std::invalid_argument);
  CHECK_THROWS_AS(reproduce_hn(9), std::invalid_argument);
}
