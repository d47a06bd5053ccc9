// tdlab: exact tree-depth, rankings, minor-criticality and 1-uniqueness from the command line.
//
// Exit codes: 0 success, 1 property check failed, 2 parse error,
// 3 solver budget exhausted, 4 usage error.

#include "tdlab/critical.hpp"
#include "tdlab/generators.hpp"
#include "tdlab/graph_io.hpp"
#include "tdlab/ranking.hpp"
#include "tdlab/report.hpp"
#include "tdlab/solver.hpp"
#include "tdlab/sweeps.hpp"
#include "tdlab/witnesses.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

using namespace tdlab;
using nlohmann::json;

namespace {

enum ExitCode : int { Success = 0, CheckFailed = 1, ParseFailed = 2, BudgetOut = 3, UsageError = 4 };

struct Options
{
  std::string format;
  bool json = false;
  int threads = 1;
  std::uint64_t node_budget = 0;
  double time_budget = 0;
  std::uint64_t seed = 1;

  auto solver() const -> SolverConfig {
    SolverConfig config;
    config.threads = threads;
    config.node_budget = node_budget;
    config.time_budget_seconds = time_budget;
    return config;
  }
};

class UsageFailure : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

auto read_source(const std::string &source) -> std::string {
  std::ostringstream buffer;
  if (source == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(source);
  if (!in)
    throw UsageFailure("cannot open '" + source + "'");
  buffer << in.rdbuf();
  return buffer.str();
}

auto load_graph(const std::string &source, const Options &opts) -> Graph {
  const auto text = read_source(source);
  if (opts.format.empty())
    return parse_graph(text);
  return parse_graph(text, parse_format_name(opts.format));
}

/// A ranking argument is a file path, or inline `k: labels` text when no such file exists.
auto load_ranking(const std::string &arg) -> Ranking {
  if (arg == "-" || std::filesystem::exists(arg))
    return parse_ranking(read_source(arg));
  return parse_ranking(arg);
}

auto emit(const Options &opts, const json &doc, const std::string &human) -> void {
  if (opts.json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << human;
}

auto run_td(const std::string &input, const Options &opts) -> int {
  const auto g = load_graph(input, opts);
  try {
    const auto cert = treedepth(g, opts.solver());
    emit(opts, to_json(cert), format_certificate(cert));
    return Success;
  } catch (const BudgetExhausted &e) {
    const auto b = e.bounds();
    emit(opts, to_json(b), "budget exhausted\nlower    " + std::to_string(b.lower) + "\nupper    " +
                               std::to_string(b.upper) + "\n");
    return BudgetOut;
  }
}

auto run_verify(const std::string &graph_src, const std::string &ranking_src, const Options &opts) -> int {
  const auto g = load_graph(graph_src, opts);
  const auto r = load_ranking(ranking_src);
  if (r.size() != g.order())
    throw UsageFailure("ranking has " + std::to_string(r.size()) + " labels, graph has " + std::to_string(g.order()) +
                       " vertices");
  const auto verdict = verify_ranking(g, r);
  if (is_valid(verdict)) {
    emit(opts, {{"valid", true}, {"colors", r.colors()}, {"max_label", r.max_label()}}, "valid\n");
    return Success;
  }
  const auto &bad = std::get<Violation>(verdict);
  std::string path;
  for (int x : bad.path)
    path += (path.empty() ? "" : " ") + std::to_string(x);
  emit(opts,
       {{"valid", false}, {"label", bad.label}, {"first", bad.first}, {"second", bad.second}, {"path", bad.path}},
       "invalid: vertices " + std::to_string(bad.first) + " and " + std::to_string(bad.second) + " share label " +
           std::to_string(bad.label) + " along path " + path + "\n");
  return CheckFailed;
}

auto generate(const std::string &family, int param) -> Graph {
  if (family == "hn")
    return h_n(param).graph;
  if (family == "knet")
    return k_net(param);
  if (family == "kak2")
    return cartesian_k2(param);
  if (family == "complete")
    return complete(param);
  if (family == "cycle")
    return cycle(param);
  if (family == "path")
    return path(param);
  throw UsageFailure("unknown family '" + family + "' (expected hn, knet, kak2, complete, cycle, path)");
}

auto run_gen(const std::string &family, int param, const Options &opts) -> int {
  const auto format = opts.format.empty() ? GraphFormat::EdgeList : parse_format_name(opts.format);
  std::cout << write_graph(generate(family, param), format);
  return Success;
}

auto run_critical(const std::string &input, const Options &opts) -> int {
  const auto g = load_graph(input, opts);
  const auto report = is_critical(g, opts.solver());
  emit(opts, to_json(report), format_criticality(report));
  if (!report.conclusive)
    return BudgetOut;
  return report.critical ? Success : CheckFailed;
}

auto run_unique1(const std::string &input, std::optional<int> vertex, const Options &opts) -> int {
  const auto g = load_graph(input, opts);
  if (vertex && !g.has_vertex(*vertex))
    throw UsageFailure("vertex " + std::to_string(*vertex) + " not in graph");
  const auto report = uniqueness_report(g, opts.solver());
  if (!vertex) {
    emit(opts, to_json(report), format_uniqueness(report));
    if (!report.conclusive)
      return BudgetOut;
    return report.one_unique ? Success : CheckFailed;
  }
  const auto &entry = report.vertices[*vertex];
  const auto verdict = entry.one_unique();
  auto doc = to_json(report)["vertices"][*vertex];
  std::string human = "vertex " + std::to_string(*vertex) + ": " +
                      (verdict ? (*verdict ? "1-unique" : "non-1-unique") : "inconclusive") + "\n";
  if (entry.witness)
    human += "witness " + to_string(*entry.witness) + "\n";
  emit(opts, doc, human);
  if (!verdict)
    return BudgetOut;
  return *verdict ? Success : CheckFailed;
}

auto run_reproduce(int n_max, const Options &opts) -> int {
  const auto rows = reproduce_hn(n_max, opts.solver());
  emit(opts, to_json(rows), format_reproduction(rows));
  for (const auto &row : rows)
    if (!row.complete)
      return BudgetOut;
  for (const auto &row : rows)
    if (!row.passed())
      return CheckFailed;
  return Success;
}

auto run_selftest(const Options &opts) -> int {
  struct Line
  {
    std::string name;
    SweepResult result;
  };
  std::vector<Line> lines;
  std::vector<Graph> connected;
  for (int n = 1; n <= 5; ++n)
    for (auto &g : connected_labelled_graphs(n))
      connected.push_back(std::move(g));
  lines.push_back({"solver = brute force, connected graphs <= 5 vertices", oracle_sweep(connected, opts.threads)});
  lines.push_back({"star-clique = direct search, connected graphs <= 5 vertices",
                   starclique_sweep(connected, opts.threads)});
  std::vector<Graph> small;
  for (int n = 1; n <= 4; ++n)
    for (auto &g : connected_labelled_graphs(n))
      small.push_back(std::move(g));
  lines.push_back({"component criterion = path definition, <= 4 vertices, 4 colors",
                   criterion_sweep(small, 4, opts.threads)});
  std::mt19937_64 rng(opts.seed);
  std::vector<Graph> sample;
  for (int i = 0; i < 50; ++i)
    sample.push_back(random_graph(5, 0.5, rng()));
  lines.push_back({"solver = brute force, 50 random 5-vertex graphs (seeded)", oracle_sweep(sample, opts.threads)});

  bool ok = true;
  json doc = json::array();
  std::string human;
  for (const auto &line : lines) {
    ok = ok && line.result.ok();
    doc.push_back({{"check", line.name},
                   {"checked", line.result.checked},
                   {"disagreements", line.result.disagreements},
                   {"passed", line.result.ok()}});
    human += std::string(line.result.ok() ? "PASS " : "FAIL ") + line.name + " (" +
             std::to_string(line.result.checked) + " checked)\n";
    if (!line.result.ok())
      human += "     first failure: " + line.result.first_failure + "\n";
  }
  emit(opts, doc, human);
  return ok ? Success : CheckFailed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact tree-depth, vertex rankings, minor-criticality and 1-uniqueness on small graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--format", opts.format, "Graph format: edgelist or graph6 (input default: auto-detect)")
      ->check(CLI::IsMember({"edgelist", "graph6"}))
      ->envname("TDLAB_FORMAT");
  app.add_flag("--json", opts.json, "Machine-readable output")->envname("TDLAB_JSON");
  app.add_option("--threads", opts.threads, "Solver threads (1 = serial)")
      ->check(CLI::Range(1, 1024))
      ->envname("TDLAB_THREADS");
  app.add_option("--node-budget", opts.node_budget, "Maximum search nodes per solve (0 = unlimited)")
      ->envname("TDLAB_NODE_BUDGET");
  app.add_option("--time-budget", opts.time_budget, "Wall-clock seconds per solve (0 = unlimited)")
      ->check(CLI::NonNegativeNumber)
      ->envname("TDLAB_TIME_BUDGET");
  app.add_option("--seed", opts.seed, "Seed for randomized checks")->envname("TDLAB_SEED");

  std::string input = "-";
  auto *td = app.add_subcommand("td", "Exact tree-depth with a witness ranking");
  td->add_option("graph", input, "Graph file, '-' for stdin");

  std::string ranking;
  auto *verify = app.add_subcommand("verify", "Check that a ranking is feasible");
  verify->add_option("graph", input, "Graph file, '-' for stdin")->required();
  verify->add_option("ranking", ranking, "Ranking file, or inline text such as '3: 1 2 1'")->required();

  std::string family;
  int param = 0;
  auto *gen = app.add_subcommand("gen", "Emit a named graph family");
  gen->add_option("family", family, "hn, knet, kak2, complete, cycle or path")->required();
  gen->add_option("size", param, "Family parameter")->required();

  auto *critical = app.add_subcommand("critical", "One-step minor criticality report");
  critical->add_option("graph", input, "Graph file, '-' for stdin");

  std::optional<int> vertex;
  auto *unique1 = app.add_subcommand("unique1", "Per-vertex 1-uniqueness report");
  unique1->add_option("graph", input, "Graph file, '-' for stdin");
  unique1->add_option("--vertex", vertex, "Report on a single vertex");

  int n_max = 6;
  auto *reproduce = app.add_subcommand("reproduce", "Check every claim about H_n for n = 4..N");
  reproduce->add_option("n_max", n_max, "Largest n (4..8)")->check(CLI::Range(4, 8));

  auto *selftest = app.add_subcommand("selftest", "Oracle cross-checks at reduced scale");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? Success : UsageError;
  }

  try {
    if (*td)
      return run_td(input, opts);
    if (*verify)
      return run_verify(input, ranking, opts);
    if (*gen)
      return run_gen(family, param, opts);
    if (*critical)
      return run_critical(input, opts);
    if (*unique1)
      return run_unique1(input, vertex, opts);
    if (*reproduce)
      return run_reproduce(n_max, opts);
    if (*selftest)
      return run_selftest(opts);
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return ParseFailed;
  } catch (const BudgetExhausted &e) {
    std::cerr << e.what() << "\n";
    return BudgetOut;
  } catch (const UsageFailure &e) {
    std::cerr << "error: " << e.what() << "\n";
    return UsageError;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return UsageError;
  }
  return UsageError;
}
