// Acceptance gate: one line per criterion, nonzero exit if any criterion fails.

#include "tdlab/critical.hpp"
#include "tdlab/generators.hpp"
#include "tdlab/graph_io.hpp"
#include "tdlab/isomorphism.hpp"
#include "tdlab/minors.hpp"
#include "tdlab/solver.hpp"
#include "tdlab/sweeps.hpp"
#include "tdlab/witnesses.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

using namespace tdlab;

namespace {

constexpr std::uint64_t fixed_seed = 20260101;

struct Outcome
{
  bool passed = true;
  std::string detail;
};

class Checker
{
public:
  auto expect(bool condition, const std::string &what) -> void {
    if (!condition && _outcome.passed) {
      _outcome.passed = false;
      _outcome.detail = what;
    }
  }
  auto note(const std::string &what) -> void {
    if (_outcome.passed)
      _outcome.detail = what;
  }
  auto outcome() const -> Outcome { return _outcome; }

private:
  Outcome _outcome;
};

auto sweep_threads() -> int {
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

auto seconds_since(std::chrono::steady_clock::time_point start) -> double {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

auto fmt_seconds(double s) -> std::string {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << " s";
  return out.str();
}

auto connected_up_to(int n_max) -> std::vector<Graph> {
  std::vector<Graph> all;
  for (int n = 1; n <= n_max; ++n)
    for (auto &g : connected_labelled_graphs(n))
      all.push_back(std::move(g));
  return all;
}

auto certified_value(const Graph &g) -> std::optional<int> {
  const auto cert = treedepth(g);
  if (!is_valid(verify_ranking(g, cert.witness)) || cert.witness.max_label() != cert.value)
    return std::nullopt;
  return cert.value;
}

// 1. td(H_n) = n + 1 for n = 3..8 within 10 s.
auto hn_treedepth() -> Outcome {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 3; n <= 8; ++n) {
    const auto td = certified_value(h_n(n).graph);
    c.expect(td == n + 1, "td(H_" + std::to_string(n) + ") = " + (td ? std::to_string(*td) : "uncertified"));
  }
  const double took = seconds_since(start);
  c.expect(took < 10.0, "took " + fmt_seconds(took) + ", limit 10 s");
  c.note(fmt_seconds(took));
  return c.outcome();
}

// 2. H_n critical for n = 4..7 within 60 s.
auto hn_critical() -> Outcome {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 4; n <= 7; ++n) {
    const auto report = is_critical(h_n(n).graph);
    c.expect(report.conclusive && report.critical && report.base_td == n + 1,
             "H_" + std::to_string(n) + " not certified critical");
  }
  const double took = seconds_since(start);
  c.expect(took < 60.0, "took " + fmt_seconds(took) + ", limit 60 s");
  c.note(fmt_seconds(took));
  return c.outcome();
}

// 3. Exactly the hub is non-1-unique, both methods agreeing where the direct search runs.
auto hn_uniqueness() -> Outcome {
  Checker c;
  int direct_runs = 0;
  for (int n = 4; n <= 7; ++n) {
    const auto report = uniqueness_report(h_n(n).graph);
    c.expect(report.conclusive, "H_" + std::to_string(n) + " inconclusive");
    c.expect(report.non_1_unique == std::vector<int>{0}, "H_" + std::to_string(n) + " flags the wrong vertex set");
    c.expect(report.methods_agree, "H_" + std::to_string(n) + " methods disagree");
    for (const auto &v : report.vertices) {
      if (v.direct_skipped)
        continue;
      ++direct_runs;
      c.expect(v.direct.has_value() && v.starclique.has_value() && *v.direct == *v.starclique,
               "H_" + std::to_string(n) + " vertex " + std::to_string(v.vertex) + " direct/star-clique mismatch");
    }
  }
  c.expect(direct_runs == 7, "direct search should cover all 7 vertices of H_4");
  c.note("direct search on " + std::to_string(direct_runs) + " vertices");
  return c.outcome();
}

// 4. td(k-net) = k + 1 for k = 1..8.
auto knet_treedepth() -> Outcome {
  Checker c;
  for (int k = 1; k <= 8; ++k)
    c.expect(certified_value(k_net(k)) == k + 1, "k = " + std::to_string(k));
  return c.outcome();
}

// 5. td(K_a x K_2) = ceil(3a/2) for a = 1..7; separator ranking valid for a = 3..7.
auto kak2_treedepth() -> Outcome {
  Checker c;
  for (int a = 1; a <= 7; ++a)
    c.expect(certified_value(cartesian_k2(a)) == (3 * a + 1) / 2, "td for a = " + std::to_string(a));
  for (int a = 3; a <= 7; ++a) {
    const auto w = witness_kak2(a);
    c.expect(is_valid(verify_ranking(cartesian_k2(a), w)) && w.max_label() == (3 * a + 1) / 2 &&
                 w.colors() == (3 * a + 1) / 2,
             "witness for a = " + std::to_string(a));
  }
  return c.outcome();
}

// 6. star_clique(H_n, hub) is isomorphic to K_{n-1} x K_2 for n = 4..6.
auto starclique_isomorphism() -> Outcome {
  Checker c;
  for (int n = 4; n <= 6; ++n)
    c.expect(is_isomorphic(star_clique(h_n(n).graph, 0), cartesian_k2(n - 1)), "n = " + std::to_string(n));
  return c.outcome();
}

// 7. Star-clique test = direct search on every connected labelled graph with <= 6 vertices.
auto starclique_cross_validation() -> Outcome {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  std::vector<Graph> graphs;
  for (int n = 2; n <= 6; ++n)
    for (auto &g : connected_labelled_graphs(n))
      graphs.push_back(std::move(g));
  const auto result = starclique_sweep(graphs, sweep_threads());
  const double took = seconds_since(start);
  c.expect(result.ok(), std::to_string(result.disagreements) + " disagreements; first: " + result.first_failure);
  c.expect(took < 600.0, "took " + fmt_seconds(took) + ", limit 10 min");
  c.note(std::to_string(graphs.size()) + " graphs, " + std::to_string(result.checked) + " vertices, " +
         fmt_seconds(took));
  return c.outcome();
}

// 8. Solver = brute force on all connected graphs <= 6 vertices and >= 1000 random 7-8 vertex graphs.
auto oracle_equivalence() -> Outcome {
  Checker c;
  const auto exhaustive = oracle_sweep(connected_up_to(6), sweep_threads());
  c.expect(exhaustive.ok(), "exhaustive: " + exhaustive.first_failure);

  std::mt19937_64 rng(fixed_seed);
  std::vector<Graph> sample;
  for (int i = 0; i < 1000; ++i) {
    const int n = 7 + static_cast<int>(rng() % 2);
    const double p = 0.15 + 0.7 * static_cast<double>(rng() % 1000) / 1000.0;
    sample.push_back(random_graph(n, p, rng()));
  }
  const auto random = oracle_sweep(sample, sweep_threads());
  c.expect(random.ok(), "random: " + random.first_failure);
  c.note(std::to_string(exhaustive.checked) + " exhaustive + " + std::to_string(random.checked) + " random graphs");
  return c.outcome();
}

// 9. witness_hn and every minor coloring valid with the stated color counts, no solver involved.
auto witness_suite() -> Outcome {
  Checker c;
  int colorings = 0;
  for (int n = 4; n <= 7; ++n) {
    const auto host = h_n(n).graph;
    const auto top = witness_hn(n);
    c.expect(is_valid(verify_ranking(host, top)) && top.max_label() == n + 1, "witness_hn(" + std::to_string(n) + ")");
    for (const auto &step : one_step_minors(host)) {
      const auto w = hn_minor_witness(n, step);
      ++colorings;
      c.expect(w.minor == apply(host, step) && is_valid(verify_ranking(w.minor, w.ranking)) &&
                   w.ranking.max_label() <= n,
               "n = " + std::to_string(n) + " " + to_string(step));
    }
  }
  c.note(std::to_string(colorings) + " minor colorings");
  return c.outcome();
}

// 10. Minor monotonicity, component rule, certificate soundness, serialization round trips.
auto property_suite() -> Outcome {
  Checker c;
  std::mt19937_64 rng(fixed_seed);
  int checks = 0;

  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const auto g = random_graph(n, 0.2 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng());
    const auto td = certified_value(g);
    c.expect(td.has_value(), "certificate unsound on graph6 " + write_graph6(g));
    for (const auto &step : one_step_minors(g)) {
      const auto m = certified_value(apply(g, step));
      c.expect(m && td && *m <= *td, "minor monotonicity on graph6 " + write_graph6(g) + " " + to_string(step));
      ++checks;
    }
  }

  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_graph(1 + static_cast<int>(rng() % 9), 0.5, rng());
    const auto b = random_graph(1 + static_cast<int>(rng() % 9), 0.5, rng());
    const auto joined = certified_value(disjoint_union(a, b));
    c.expect(joined && joined == std::max(*certified_value(a), *certified_value(b)), "component rule");
    ++checks;
  }

  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 64);
    const auto g = random_graph(n, static_cast<double>(rng() % 100) / 100.0, rng());
    c.expect(parse_graph6(write_graph6(g)) == g, "graph6 round trip, n = " + std::to_string(n));
    c.expect(parse_edge_list(write_edge_list(g)) == g, "edge list round trip, n = " + std::to_string(n));
    checks += 2;
  }
  c.note(std::to_string(checks) + " checks, seed " + std::to_string(fixed_seed));
  return c.outcome();
}

} // namespace

int main() {
  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
      {"1  td(H_n) = n+1, n = 3..8", hn_treedepth},
      {"2  H_n critical, n = 4..7", hn_critical},
      {"3  H_n non-1-unique set = {v}, n = 4..7", hn_uniqueness},
      {"4  td(k-net) = k+1, k = 1..8", knet_treedepth},
      {"5  td(K_a x K_2) = ceil(3a/2), a = 1..7; witnesses a = 3..7", kak2_treedepth},
      {"6  star_clique(H_n, v) ~ K_{n-1} x K_2, n = 4..6", starclique_isomorphism},
      {"7  star-clique test = direct search, connected graphs <= 6 vertices", starclique_cross_validation},
      {"8  solver = brute force, <= 6 exhaustive + 1000 random 7-8 vertex", oracle_equivalence},
      {"9  H_n witness colorings, n = 4..7", witness_suite},
      {"10 property suite (fixed seed)", property_suite},
  };

  int failures = 0;
  for (const auto &[name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception &e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += outcome.passed ? 0 : 1;
    std::printf("[%s] %-70s %s\n", outcome.passed ? "PASS" : "FAIL", name, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
