#include "tdlab/witnesses.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdlab {

auto witness_hn(int n) -> Ranking {
  const auto layout = hn_layout(n);
  std::vector<int> labels(2 * n - 1, 0);
  labels[layout.hub] = n + 1;
  int next = 2;
  for (int b : layout.clique)
    labels[b] = next++;
  for (int a : layout.subdivision)
    labels[a] = 1;
  return Ranking(std::move(labels), n + 1);
}

auto witness_kak2(int a) -> Ranking {
  if (a < 3 || a > 32)
    throw std::invalid_argument("witness_kak2 needs 3 <= a <= 32, got " + std::to_string(a));
  const int floor_half = a / 2;
  const int ceil_half = (a + 1) / 2;
  const int colors = (3 * a + 1) / 2;

  std::vector<int> labels(2 * a, 0);
  VertexSet separator;
  for (int i = 0; i < floor_half; ++i)
    separator.insert(i);
  for (int i = floor_half; i < a; ++i)
    separator.insert(a + i);

  int high = ceil_half + 1;
  for (int x : separator)
    labels[x] = high++;
  int low_first = 1;
  int low_second = 1;
  for (int x = 0; x < 2 * a; ++x) {
    if (separator.contains(x))
      continue;
    labels[x] = x < a ? low_first++ : low_second++;
  }
  return Ranking(std::move(labels), colors);
}

auto to_string(HnMinorCase c) -> std::string {
  switch (c) {
  case HnMinorCase::HubOrPairEdgeDeleted:
    return "hub-or-pair-edge-deleted";
  case HnMinorCase::CliqueEdgeDeleted:
    return "clique-edge-deleted";
  case HnMinorCase::SubdivisionContracted:
    return "subdivision-edge-contracted";
  case HnMinorCase::CliqueEdgeContracted:
    return "clique-edge-contracted";
  case HnMinorCase::VertexDeleted:
    return "vertex-deleted";
  }
  return "?";
}

namespace {

/// Labels written against h_n numbering; `merged` overrides the contracted vertex.
struct HostLabels
{
  std::vector<int> labels;
  int merged_label = 0;
};

auto count_up(std::vector<int> &labels, const std::vector<int> &vertices, VertexSet skip, int first) -> void {
  for (int x : vertices)
    if (!skip.contains(x))
      labels[x] = first++;
}

auto edge_case_labels(const HnLayout &layout, int lo, int hi, bool contract) -> std::pair<HnMinorCase, HostLabels> {
  const int n = layout.n;
  HostLabels out{std::vector<int>(2 * n - 1, 0), 0};
  auto &labels = out.labels;

  if (layout.in_clique(lo) && layout.in_clique(hi)) {
    const auto ends = VertexSet::single(lo).with(hi);
    if (!contract) {
      labels[lo] = labels[hi] = 1;
      for (int a : layout.subdivision)
        labels[a] = 2;
      labels[layout.hub] = 3;
      count_up(labels, layout.clique, ends, 4);
      return {HnMinorCase::CliqueEdgeDeleted, out};
    }
    for (int a : layout.subdivision)
      labels[a] = 1;
    out.merged_label = 2;
    labels[layout.hub] = 3;
    count_up(labels, layout.clique, ends, 4);
    return {HnMinorCase::CliqueEdgeContracted, out};
  }

  // Remaining edges join a subdivision vertex to the hub or to its clique partner.
  const int sub = layout.in_subdivision(lo) ? lo : hi;
  const int partner = layout.partner(sub);
  if (!contract) {
    labels[layout.hub] = 2;
    labels[partner] = 2;
    for (int a : layout.subdivision)
      labels[a] = 1;
    count_up(labels, layout.clique, VertexSet::single(partner), 3);
    return {HnMinorCase::HubOrPairEdgeDeleted, out};
  }
  for (int a : layout.subdivision)
    labels[a] = 1;
  labels[layout.hub] = 2;
  labels[partner] = 1;
  count_up(labels, layout.clique, VertexSet::single(partner), 3);
  // Contracting into the hub leaves the partner as the extra vertex; contracting
  // into the partner makes the merged vertex the extra one.  Either way it gets 1.
  out.merged_label = (lo == layout.hub) ? 2 : 1;
  return {HnMinorCase::SubdivisionContracted, out};
}

auto project(const HostLabels &host, const MinorStep &step, int minor_order) -> std::vector<int> {
  std::vector<int> labels(minor_order, 0);
  for (int x = 0; x < static_cast<int>(host.labels.size()); ++x) {
    const int y = renumber(step, x);
    if (y >= 0 && host.labels[x] != 0)
      labels[y] = host.labels[x];
  }
  if (step.kind == MinorStep::Kind::ContractEdge)
    labels[std::min(step.u, step.v)] = host.merged_label;
  return labels;
}

} // namespace

auto hn_minor_witness(int n, const MinorStep &step) -> MinorWitness {
  if (n < 4)
    throw std::invalid_argument("hn_minor_witness needs n >= 4, got " + std::to_string(n));
  const auto [host, layout] = h_n(n);
  auto minor = apply(host, step);

  if (step.kind == MinorStep::Kind::DeleteVertex) {
    const int x = step.u;
    const int y = host.neighbors(x).first();
    const auto edge_step = MinorStep::delete_edge(std::min(x, y), std::max(x, y));
    auto via_edge = hn_minor_witness(n, edge_step);
    auto ranking = restrict_ranking(via_edge.ranking, host.vertices().without(x));
    return {std::move(minor), std::move(ranking), HnMinorCase::VertexDeleted};
  }

  const int lo = std::min(step.u, step.v);
  const int hi = std::max(step.u, step.v);
  auto [which, labels] = edge_case_labels(layout, lo, hi, step.kind == MinorStep::Kind::ContractEdge);
  auto projected = project(labels, step, minor.order());
  return {std::move(minor), Ranking(std::move(projected), n), which};
}

} // namespace tdlab
