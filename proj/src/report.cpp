#include "tdlab/report.hpp"

#include <iomanip>
#include <sstream>

namespace tdlab {

using nlohmann::json;

namespace {

template <typename T>
auto optional_json(const std::optional<T> &value) -> json {
  return value ? json(*value) : json(nullptr);
}

auto yes_no(bool b) -> const char * { return b ? "yes" : "no"; }

auto optional_text(const std::optional<int> &value) -> std::string {
  return value ? std::to_string(*value) : std::string("?");
}

auto optional_text(const std::optional<bool> &value) -> std::string {
  return value ? yes_no(*value) : "?";
}

} // namespace

auto to_json(const Ranking &r) -> json {
  return json(std::vector<int>(r.labels().begin(), r.labels().end()));
}

auto to_json(const SolverStats &s) -> json {
  return {{"nodes", s.nodes}, {"memo_entries", s.memo_entries}, {"elapsed_ms", s.elapsed_ms}};
}

auto to_json(const TdCertificate &c) -> json {
  return {{"exact", true}, {"td", c.value}, {"witness", to_json(c.witness)}, {"stats", to_json(c.stats)}};
}

auto to_json(const Bounds &b) -> json {
  return {{"exact", false}, {"lower", b.lower}, {"upper", b.upper}};
}

auto to_json(const CriticalityReport &r) -> json {
  json steps = json::array();
  for (const auto &s : r.steps)
    steps.push_back({{"step", to_string(s.step)}, {"td", optional_json(s.td)}});
  json failing = json::array();
  for (const auto &s : r.failing_steps)
    failing.push_back(to_string(s));
  return {{"td", optional_json(r.base_td)},
          {"critical", r.critical},
          {"conclusive", r.conclusive},
          {"steps", steps},
          {"failing_steps", failing}};
}

auto to_json(const UniquenessReport &r) -> json {
  json vertices = json::array();
  for (const auto &v : r.vertices) {
    vertices.push_back({{"vertex", v.vertex},
                        {"one_unique", optional_json(v.one_unique())},
                        {"method_starclique", optional_json(v.starclique)},
                        {"method_direct", v.direct_skipped ? json("skipped") : optional_json(v.direct)},
                        {"witness", v.witness ? to_json(*v.witness) : json(nullptr)}});
  }
  return {{"td", optional_json(r.td)},
          {"one_unique", r.one_unique},
          {"conclusive", r.conclusive},
          {"methods_agree", r.methods_agree},
          {"non_1_unique", r.non_1_unique},
          {"vertices", vertices}};
}

auto to_json(const HnRow &row) -> json {
  return {{"n", row.n},
          {"td", optional_json(row.td)},
          {"td_expected", row.td_expected()},
          {"critical", row.critical},
          {"non_1_unique", row.non_1_unique},
          {"starclique_td", optional_json(row.starclique_td)},
          {"starclique_td_expected", row.starclique_expected()},
          {"starclique_isomorphic", optional_json(row.starclique_isomorphic)},
          {"witnesses_ok", row.witnesses_ok()},
          {"methods_agree", row.methods_agree},
          {"complete", row.complete},
          {"passed", row.passed()}};
}

auto to_json(const std::vector<HnRow> &rows) -> json {
  json out = json::array();
  for (const auto &row : rows)
    out.push_back(to_json(row));
  return out;
}

auto format_vertex_list(const std::vector<int> &vertices) -> std::string {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i)
    out += (i ? ", " : "") + std::to_string(vertices[i]);
  return out + "}";
}

auto format_certificate(const TdCertificate &c) -> std::string {
  std::ostringstream out;
  out << "td       " << c.value << "\n"
      << "witness  " << to_string(c.witness) << "\n"
      << "nodes    " << c.stats.nodes << "\n"
      << "memo     " << c.stats.memo_entries << "\n";
  return out.str();
}

auto format_criticality(const CriticalityReport &r) -> std::string {
  std::ostringstream out;
  out << "td " << optional_text(r.base_td) << "\n";
  for (const auto &s : r.steps)
    out << "  " << std::left << std::setw(22) << to_string(s.step) << " td " << optional_text(s.td) << "\n";
  if (!r.conclusive)
    out << "inconclusive: solver budget exhausted\n";
  else if (r.critical)
    out << "critical\n";
  else
    out << "not critical; failing steps: " << r.failing_steps.size() << "\n";
  return out.str();
}

auto format_uniqueness(const UniquenessReport &r) -> std::string {
  std::ostringstream out;
  out << "td " << optional_text(r.td) << "\n";
  out << "vertex  1-unique  star-clique  direct\n";
  for (const auto &v : r.vertices) {
    out << std::left << std::setw(8) << v.vertex << std::setw(10) << optional_text(v.one_unique()) << std::setw(13)
        << optional_text(v.starclique) << (v.direct_skipped ? "skipped" : optional_text(v.direct)) << "\n";
  }
  if (!r.methods_agree)
    out << "methods disagree\n";
  if (!r.conclusive)
    out << "inconclusive: solver budget exhausted\n";
  else if (r.one_unique)
    out << "1-unique\n";
  else
    out << "non-1-unique: " << format_vertex_list(r.non_1_unique) << "\n";
  return out.str();
}

auto format_reproduction(const std::vector<HnRow> &rows) -> std::string {
  std::ostringstream out;
  out << " n  td(exp)  critical  non-1-unique  star-clique td(exp)  iso  witnesses  result\n";
  for (const auto &row : rows) {
    out << std::right << std::setw(2) << row.n << "  " << std::setw(2) << optional_text(row.td) << "(" << std::setw(2)
        << row.td_expected() << ")  " << std::left << std::setw(8) << yes_no(row.critical) << "  " << std::setw(12)
        << format_vertex_list(row.non_1_unique) << "  " << std::right << std::setw(11) << optional_text(row.starclique_td)
        << "(" << std::setw(2) << row.starclique_expected() << ")       " << std::left << std::setw(3)
        << (row.starclique_isomorphic ? yes_no(*row.starclique_isomorphic) : "-") << "  " << std::setw(9)
        << yes_no(row.witnesses_ok()) << "  " << (row.passed() ? "PASS" : (row.complete ? "FAIL" : "INCOMPLETE"))
        << "\n";
  }
  return out.str();
}

} // namespace tdlab
