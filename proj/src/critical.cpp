#include "tdlab/critical.hpp"

#include "tdlab/generators.hpp"
#include "tdlab/isomorphism.hpp"
#include "tdlab/witnesses.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdlab {

namespace {

/// Inner solves run single-threaded when the outer loop is already parallel.
auto inner_config(SolverConfig config) -> SolverConfig {
  config.threads = 1;
  return config;
}

auto try_treedepth(const Graph &g, const SolverConfig &config) -> std::optional<int> {
  try {
    return treedepth(g, config).value;
  } catch (const BudgetExhausted &) {
    return std::nullopt;
  }
}

} // namespace

auto is_critical(const Graph &g, SolverConfig config) -> CriticalityReport {
  if (g.order() < 2)
    throw std::invalid_argument("criticality needs at least 2 vertices");
  CriticalityReport report;
  report.base_td = try_treedepth(g, config);
  const auto steps = one_step_minors(g);
  report.steps.resize(steps.size());

  const auto inner = inner_config(config);
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(config.threads, 1)) if (config.threads > 1)
  for (std::size_t i = 0; i < steps.size(); ++i)
    report.steps[i] = {steps[i], try_treedepth(apply(g, steps[i]), inner)};

  report.conclusive = report.base_td.has_value();
  for (const auto &r : report.steps) {
    if (!r.td) {
      report.conclusive = false;
      continue;
    }
    if (report.base_td && *r.td >= *report.base_td)
      report.failing_steps.push_back(r.step);
  }
  report.critical = report.conclusive && report.failing_steps.empty();
  return report;
}

auto one_unique_starclique(const Graph &g, int v, SolverConfig config) -> bool {
  if (g.order() < 2)
    throw std::invalid_argument("star-clique uniqueness needs at least 2 vertices");
  const auto transformed = star_clique(g, v);
  return treedepth(transformed, config).value < treedepth(g, config).value;
}

namespace {

/// Component criterion restricted to the labelled vertices `done`.  A clash
/// there is a clash in the whole graph, since its path exists in g.
auto partial_feasible(const Graph &g, const std::vector<int> &labels, VertexSet done, int top) -> bool {
  VertexSet at_most;
  for (int label = 1; label <= top; ++label) {
    VertexSet level;
    for (int x : done)
      if (labels[x] == label)
        level.insert(x);
    at_most |= level;
    while (level.size() > 1) {
      const int x = level.first();
      const auto comp = component_of(g, at_most, x);
      if ((comp & level).size() > 1)
        return false;
      level -= comp;
    }
  }
  return true;
}

class UniqueOneSearch
{
public:
  UniqueOneSearch(const Graph &g, int v, int colors) : _g(g), _v(v), _colors(colors), _labels(g.order(), 0) {
    for (int x = 0; x < g.order(); ++x)
      if (x != v)
        _order.push_back(x);
  }

  auto run() -> std::optional<Ranking> {
    _labels[_v] = 1;
    if (_colors == 1)
      return _g.order() == 1 ? std::optional(Ranking(_labels, 1)) : std::nullopt;
    if (!extend(0, VertexSet::single(_v)))
      return std::nullopt;
    return Ranking(_labels, _colors);
  }

private:
  auto extend(std::size_t i, VertexSet done) -> bool {
    if (i == _order.size())
      return true;
    const int x = _order[i];
    const auto next = done.with(x);
    for (int label = 2; label <= _colors; ++label) {
      _labels[x] = label;
      if (partial_feasible(_g, _labels, next, _colors) && extend(i + 1, next))
        return true;
    }
    _labels[x] = 0;
    return false;
  }

  const Graph &_g;
  int _v;
  int _colors;
  std::vector<int> _labels;
  std::vector<int> _order;
};

} // namespace

auto one_unique_direct(const Graph &g, int v, int td) -> std::optional<Ranking> {
  if (g.order() > direct_uniqueness_vertex_cap)
    throw std::invalid_argument("direct uniqueness search limited to " + std::to_string(direct_uniqueness_vertex_cap) +
                                " vertices");
  if (!g.has_vertex(v))
    throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
  auto found = UniqueOneSearch(g, v, td).run();
  if (found && !is_valid(verify_ranking(g, *found)))
    throw std::logic_error("direct search produced an infeasible ranking");
  return found;
}

auto one_unique_direct(const Graph &g, int v, SolverConfig config) -> std::optional<Ranking> {
  if (g.order() > direct_uniqueness_vertex_cap)
    throw std::invalid_argument("direct uniqueness search limited to " + std::to_string(direct_uniqueness_vertex_cap) +
                                " vertices");
  return one_unique_direct(g, v, treedepth(g, config).value);
}

auto uniqueness_report(const Graph &g, SolverConfig config) -> UniquenessReport {
  if (g.order() < 2)
    throw std::invalid_argument("uniqueness report needs at least 2 vertices");
  UniquenessReport report;
  report.td = try_treedepth(g, config);
  report.vertices.resize(g.order());
  const bool run_direct = g.order() <= direct_uniqueness_vertex_cap;

  const auto inner = inner_config(config);
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(config.threads, 1)) if (config.threads > 1)
  for (int v = 0; v < g.order(); ++v) {
    VertexUniqueness &entry = report.vertices[v];
    entry.vertex = v;
    if (report.td) {
      if (auto reduced = try_treedepth(star_clique(g, v), inner))
        entry.starclique = *reduced < *report.td;
      if (run_direct) {
        entry.witness = one_unique_direct(g, v, *report.td);
        entry.direct = entry.witness.has_value();
      }
    }
    entry.direct_skipped = !run_direct;
  }

  for (const auto &entry : report.vertices) {
    const auto verdict = entry.one_unique();
    if (!verdict) {
      report.conclusive = false;
      continue;
    }
    if (!*verdict)
      report.non_1_unique.push_back(entry.vertex);
    report.methods_agree = report.methods_agree && entry.agree();
  }
  report.one_unique = report.conclusive && report.non_1_unique.empty();
  return report;
}

auto hn_minor_witnesses_valid(int n) -> bool {
  const auto host = h_n(n).graph;
  for (const auto &step : one_step_minors(host)) {
    const auto w = hn_minor_witness(n, step);
    if (!is_valid(verify_ranking(w.minor, w.ranking)) || w.ranking.max_label() > n)
      return false;
  }
  return true;
}

auto HnRow::passed() const -> bool {
  return complete && td == td_expected() && critical && non_1_unique == std::vector<int>{0} &&
         starclique_td == starclique_expected() && starclique_isomorphic.value_or(true) && witnesses_ok() &&
         methods_agree;
}

auto reproduce_hn_row(int n, SolverConfig config) -> HnRow {
  if (n < 4 || n > 8)
    throw std::invalid_argument("reproduction rows cover 4 <= n <= 8, got " + std::to_string(n));
  const auto host = h_n(n).graph;
  HnRow row;
  row.n = n;

  row.td = try_treedepth(host, config);
  const auto crit = is_critical(host, config);
  row.critical = crit.critical;
  const auto uniq = uniqueness_report(host, config);
  row.non_1_unique = uniq.non_1_unique;
  row.methods_agree = uniq.methods_agree;

  const auto transformed = star_clique(host, 0);
  row.starclique_td = try_treedepth(transformed, config);
  if (transformed.order() <= isomorphism_vertex_cap)
    row.starclique_isomorphic = is_isomorphic(transformed, cartesian_k2(n - 1));

  row.witness_hn_ok = is_valid(verify_ranking(host, witness_hn(n))) && witness_hn(n).max_label() == n + 1;
  row.minor_witnesses_ok = hn_minor_witnesses_valid(n);
  row.complete = row.td && crit.conclusive && uniq.conclusive && row.starclique_td;
  return row;
}

auto reproduce_hn(int n_max, SolverConfig config) -> std::vector<HnRow> {
  if (n_max < 4 || n_max > 8)
    throw std::invalid_argument("reproduce needs 4 <= n_max <= 8, got " + std::to_string(n_max));
  std::vector<HnRow> rows;
  for (int n = 4; n <= n_max; ++n)
    rows.push_back(reproduce_hn_row(n, config));
  return rows;
}

} // namespace tdlab
