// Command-line front end: graph generation, CFI construction, formula
// evaluation, refinement, equivalence, games and experiment suites.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 budget exceeded.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rqwl/cfi.hpp"
#include "rqwl/experiments.hpp"
#include "rqwl/games.hpp"
#include "rqwl/graph.hpp"
#include "rqwl/json_io.hpp"
#include "rqwl/logic.hpp"
#include "rqwl/streamwl.hpp"
#include "rqwl/wl.hpp"

namespace {

using namespace rqwl;

/// Misuse of the command line that CLI11 cannot detect by itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes `content` to stdout ("" or "-") or atomically to a file: the data
/// goes to a sibling temporary that is renamed over the target.
void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content << std::flush;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw DomainError("cannot write '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, target);
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// "inf" (or "unbounded") means until stable.
int parse_rounds(const std::string& text) {
  if (text == "inf" || text == "unbounded") return kUnbounded;
  try {
    size_t used = 0;
    const int r = std::stoi(text, &used);
    if (used == text.size() && r >= 0) return r;
  } catch (const std::exception&) {
  }
  throw UsageError("--rounds expects a non-negative integer or 'inf', got '" + text + "'");
}

/// "x1=0,y2=3" (empty string: empty assignment).
PartialAssignment parse_assignment(const std::string& text, int k1, int k2) {
  PartialAssignment a(k1, k2);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq < 2 || (item[0] != 'x' && item[0] != 'y')) {
      throw UsageError("assignment entries look like x1=0 or y2=3, got '" + item + "'");
    }
    int index = 0;
    Vertex v = 0;
    try {
      index = std::stoi(item.substr(1, eq - 1));
      v = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("malformed assignment entry '" + item + "'");
    }
    const int limit = item[0] == 'x' ? k1 : k2;
    if (index < 1 || index > limit) throw UsageError("no variable '" + item.substr(0, eq) + "'");
    if (v < 0) throw UsageError("vertex ids are non-negative in '" + item + "'");
    a.set(item[0] == 'x' ? index - 1 : k1 + index - 1, v);
  }
  return a;
}

/// A legend argument is a file path if one exists, otherwise literal text.
Legend load_legend(const std::string& arg) {
  if (arg.empty()) return {};
  if (std::filesystem::exists(arg)) return parse_legend(read_text(arg));
  return parse_legend(arg);
}

nlohmann::json meter_to_json(const MemoryMeter& m) {
  return {{"peak_cells", m.peak_cells}, {"live_cells", m.live_cells},
          {"peak_depth", m.peak_depth}, {"oracle_calls", m.oracle_calls},
          {"tables_built", m.tables_built}, {"operations", m.operations}};
}

std::string variable_list(std::uint32_t mask, int k1, int arity) {
  std::string out;
  for (int v = 0; v < arity; ++v) {
    if (mask >> v & 1u) out += (out.empty() ? "" : ",") + variable_name(v, k1);
  }
  return out;
}

/// Options shared by several subcommands.
struct Common {
  int k1 = 1;
  int k2 = 1;
  std::string rounds = "inf";
  std::string engine = "naive";
  bool meter = false;
  std::uint64_t seed = 0;
  std::int64_t budget = 50'000'000;
  std::string legend;
  std::string out;
};

void check_k(const Common& c) {
  if (c.k1 < 0 || c.k2 < 0) throw UsageError("--k1 and --k2 must be non-negative");
  if (c.k1 + c.k2 == 0) throw UsageError("--k1 + --k2 must be positive");
}

void add_k(CLI::App* cmd, Common& c) {
  cmd->add_option("--k1", c.k1, "reusable variables x1..x{k1}")->capture_default_str();
  cmd->add_option("--k2", c.k2, "non-reusable variables y1..y{k2}")->capture_default_str();
}

void add_budget(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget", c.budget, "work budget (exceeding it exits with code 3)")
      ->capture_default_str();
}

void add_out(CLI::App* cmd, Common& c) {
  cmd->add_option("-o,--out", c.out, "output file (default: stdout), written atomically");
}

// ---------------------------------------------------------------------------
// Subcommands

struct GenArgs {
  std::string family;
  std::vector<double> params;
  bool base_coloring = false;
  int colors = 1;
};

void run_gen(const GenArgs& a, const Common& c) {
  ColoredGraph g;
  if (a.family == "random") {
    if (a.params.size() != 2) throw DomainError("random takes parameters n p");
    std::mt19937_64 rng(c.seed);
    g = random_graph(static_cast<int>(a.params[0]), a.params[1], a.colors, rng);
    if (a.base_coloring) g = with_base_coloring(g);
  } else {
    std::vector<int> ints;
    for (double p : a.params) {
      if (p != static_cast<int>(p)) throw DomainError("family parameters are integers");
      ints.push_back(static_cast<int>(p));
    }
    g = gen_family(family_from_name(a.family), ints, a.base_coloring);
  }
  write_output(c.out, graph_to_json(g).dump() + "\n");
}

struct CfiArgs {
  std::string base;
  std::vector<std::string> twists;
  bool twisted = false;
  bool base_coloring = false;
};

void run_cfi(const CfiArgs& a, const Common& c) {
  ColoredGraph g = read_graph(a.base);
  if (a.base_coloring) g = with_base_coloring(g);
  const BaseGraph base = validate_base(g);
  if (a.twisted && !a.twists.empty()) throw UsageError("--twisted and --twist are exclusive");
  std::vector<Edge> twists;
  for (const auto& t : a.twists) {
    const auto dash = t.find('-');
    if (dash == std::string::npos) throw UsageError("--twist expects u-v, got '" + t + "'");
    try {
      twists.emplace_back(std::stoi(t.substr(0, dash)), std::stoi(t.substr(dash + 1)));
    } catch (const std::exception&) {
      throw UsageError("--twist expects u-v, got '" + t + "'");
    }
  }
  const CfiGraph x = a.twisted ? cfi_twisted(base) : build_cfi(base, twists);
  nlohmann::json j = graph_to_json(x.graph);
  nlohmann::json tw = nlohmann::json::array();
  for (auto [u, v] : x.twists) tw.push_back({u, v});
  j["cfi"] = {{"base", graph_to_json(x.base)},
              {"twists", tw},
              {"gadget_start", x.gadget_start},
              {"provenance", provenance_to_json(x)}};
  write_output(c.out, j.dump() + "\n");
}

struct EvalArgs {
  std::string formula;
  std::string graph;
  std::string assign;
  bool table = false;
};

void run_eval(const EvalArgs& a, const Common& c) {
  check_k(c);
  const Legend legend = load_legend(c.legend);
  const FormulaPtr f = parse_formula(read_text(a.formula), c.k1, c.k2, &legend);
  const ColoredGraph g = read_graph(a.graph);
  if (a.table) {
    // CSV: one row per assignment that satisfies the formula.
    const auto t = evaluate_table(g, c.k1, c.k2, *f);
    const AssignmentIndexer ix(g.order(), c.k1 + c.k2);
    std::ostringstream out;
    for (int v = 0; v < c.k1 + c.k2; ++v) out << (v ? "," : "") << variable_name(v, c.k1);
    out << '\n';
    std::vector<Vertex> tuple(static_cast<size_t>(c.k1 + c.k2));
    for (std::int64_t i = 0; i < ix.size(); ++i) {
      if (!t[static_cast<size_t>(i)]) continue;
      ix.decode(i, tuple);
      for (size_t v = 0; v < tuple.size(); ++v) {
        out << (v ? "," : "");
        if (tuple[v] != kUnassigned) out << tuple[v];
      }
      out << '\n';
    }
    write_output(c.out, out.str());
    return;
  }
  const bool value = evaluate(g, parse_assignment(a.assign, c.k1, c.k2), *f);
  write_output(c.out, std::string(value ? "true" : "false") + "\n");
}

void run_analyze(const std::string& formula, const Common& c) {
  check_k(c);
  const Legend legend = load_legend(c.legend);
  const FormulaPtr f = parse_formula(read_text(formula), c.k1, c.k2, &legend);
  const FormulaReport r = analyze(*f, c.k1, c.k2);
  const int arity = c.k1 + c.k2;
  const nlohmann::json j{{"formula", format_formula(*f, c.k1)},
                         {"k1", c.k1},
                         {"k2", c.k2},
                         {"free", variable_list(r.free, c.k1, arity)},
                         {"bound", variable_list(r.bound, c.k1, arity)},
                         {"requantified", variable_list(r.requantified, c.k1, arity)},
                         {"quantifier_rank", r.quantifier_rank},
                         {"in_logic", r.in_logic}};
  write_output(c.out, j.dump() + "\n");
}

/// CSV round log of a refinement run.
std::string round_log(const RefinementResult& r) {
  std::ostringstream out;
  out << "round,joint_classes";
  for (size_t g = 0; g < r.orders.size(); ++g) out << ",classes_g" << g;
  if (!r.watched.empty() && !r.watched.front().empty()) {
    for (size_t i = 0; i < r.watched.front().size(); ++i) out << ",watch" << i;
  }
  out << '\n';
  for (size_t round = 0; round < r.joint_class_counts.size(); ++round) {
    out << round << ',' << r.joint_class_counts[round];
    for (int count : r.class_counts[round]) out << ',' << count;
    if (round < r.watched.size()) {
      for (int color : r.watched[round]) out << ',' << color;
    }
    out << '\n';
  }
  return out.str();
}

struct WlArgs {
  std::vector<std::string> graphs;
  std::string variant = "restricted";
  int k = 2;
  std::string log;
};

void run_wl(const WlArgs& a, const Common& c) {
  if (a.graphs.empty() || a.graphs.size() > 2) throw UsageError("wl takes one or two graphs");
  std::vector<ColoredGraph> graphs;
  for (const auto& p : a.graphs) graphs.push_back(read_graph(p));
  std::vector<const ColoredGraph*> ptrs;
  for (const auto& g : graphs) ptrs.push_back(&g);
  RefineOptions o;
  o.rounds = parse_rounds(c.rounds);
  o.budget = c.budget;
  RefinementResult r;
  nlohmann::json j{{"variant", a.variant}};
  if (a.variant == "restricted") {
    check_k(c);
    r = owl_restricted(ptrs, c.k1, c.k2, o);
    j["k1"] = c.k1;
    j["k2"] = c.k2;
  } else if (a.variant == "wl" || a.variant == "owl") {
    if (a.k < 1) throw UsageError("--k must be positive");
    r = a.variant == "wl" ? wl_classic(ptrs, a.k, o) : owl_classic(ptrs, a.k, o);
    j["k"] = a.k;
  } else {
    throw UsageError("--variant is restricted, wl or owl");
  }
  j["rounds"] = r.rounds;
  j["stable"] = r.stable;
  if (r.stable) j["stabilization_round"] = r.stabilization_round();
  j["classes"] = r.class_counts.back();
  if (graphs.size() == 2) {
    const bool distinguished = r.with_bottom ? empty_assignment_distinguishes(r, 0, 1)
                                             : histogram_distinguishes(r, 0, 1);
    j["equivalent"] = !distinguished;
  }
  if (!a.log.empty()) write_output(a.log, round_log(r));
  write_output(c.out, j.dump() + "\n");
}

struct EquivArgs {
  std::string g;
  std::string h;
  std::string alpha;
  std::string beta;
  std::string mode = "faithful";
  std::string log;
};

void run_equiv(const EquivArgs& a, const Common& c) {
  check_k(c);
  const ColoredGraph g = read_graph(a.g);
  const ColoredGraph h = read_graph(a.h);
  const PartialAssignment alpha = parse_assignment(a.alpha, c.k1, c.k2);
  const PartialAssignment beta = parse_assignment(a.beta, c.k1, c.k2);
  const int rounds = parse_rounds(c.rounds);
  std::ostringstream out;
  if (c.engine == "stream") {
    if (rounds != kUnbounded) throw UsageError("--engine stream decides stable equivalence only");
    if (!a.log.empty()) throw UsageError("--log needs --engine naive");
    StreamOptions o;
    if (a.mode == "fast") {
      o.mode = StreamMode::kFast;
    } else if (a.mode != "faithful") {
      throw UsageError("--stream-mode is faithful or fast");
    }
    o.max_operations = c.budget;
    const StreamResult r = stream_equivalent(g, alpha, h, beta, c.k1, c.k2, o);
    out << (r.equivalent ? "true" : "false") << '\n';
    if (c.meter) out << meter_to_json(r.meter).dump() << '\n';
  } else if (c.engine == "naive") {
    if (c.meter) throw UsageError("--meter needs --engine stream");
    if (!alpha.valid_for(g) || !beta.valid_for(h)) {
      throw DomainError("assignment has entries outside the graph");
    }
    if (alpha.domain_mask() != beta.domain_mask()) {
      throw DomainError("alpha and beta have different domains");
    }
    // One joint run with both configurations watched yields verdict and log.
    RefineOptions o;
    o.rounds = rounds;
    o.budget = c.budget;
    o.watch = {{0, tuple_index(g.order(), true, alpha.entries())},
               {1, tuple_index(h.order(), true, beta.entries())}};
    const RefinementResult r = owl_restricted(g, &h, c.k1, c.k2, o);
    const auto& last = r.watched.back();
    out << (last[0] == last[1] ? "true" : "false") << '\n';
    if (!a.log.empty()) {
      std::ostringstream log;
      log << "round,joint_classes,color_alpha,color_beta,same\n";
      for (size_t round = 0; round < r.watched.size(); ++round) {
        const auto& w = r.watched[round];
        log << round << ',' << r.joint_class_counts[round] << ',' << w[0] << ',' << w[1] << ','
            << (w[0] == w[1] ? "true" : "false") << '\n';
      }
      write_output(a.log, log.str());
    }
  } else {
    throw UsageError("--engine is naive or stream");
  }
  write_output(c.out, out.str());
}

struct GameArgs {
  std::string kind;
  std::vector<std::string> graphs;
  std::string alpha;
  std::string beta;
  bool first_move = false;
};

void run_game(const GameArgs& a, const Common& c) {
  check_k(c);
  const int rounds = parse_rounds(c.rounds);
  std::ostringstream out;
  if (a.kind == "bp") {
    if (a.graphs.size() != 2) throw UsageError("game bp takes two graphs");
    const ColoredGraph g = read_graph(a.graphs[0]);
    const ColoredGraph h = read_graph(a.graphs[1]);
    const PartialAssignment alpha = parse_assignment(a.alpha, c.k1, c.k2);
    const PartialAssignment beta = parse_assignment(a.beta, c.k1, c.k2);
    if (!alpha.valid_for(g) || !beta.valid_for(h)) {
      throw DomainError("assignment has entries outside the graph");
    }
    BpSolver solver(g, h, c.k1, c.k2, c.budget);
    const bool dup = solver.duplicator_wins(alpha, beta, rounds);
    out << to_string(dup ? BpWinner::kDuplicator : BpWinner::kSpoiler) << '\n';
    if (a.first_move) {
      const auto m = solver.first_move(alpha, beta, rounds);
      nlohmann::json j{{"pebble", m.pebble < 0 ? std::string() : variable_name(m.pebble, c.k1)},
                       {"bijection", m.bijection},
                       {"reason", m.reason}};
      out << j.dump() << '\n';
    }
  } else if (a.kind == "cr") {
    if (a.graphs.size() != 1) throw UsageError("game cr takes one graph");
    if (!a.alpha.empty() || !a.beta.empty()) throw UsageError("game cr starts empty");
    const ColoredGraph g = read_graph(a.graphs[0]);
    CrSolver solver(g, c.k1, c.k2, c.budget);
    const bool cops = solver.cops_win(rounds);
    out << to_string(cops ? CrWinner::kCops : CrWinner::kRobber) << '\n';
    if (a.first_move) {
      nlohmann::json j = nullptr;
      if (const auto m = solver.first_move(rounds)) {
        j = {{"cop", variable_name(m->cop, c.k1)}, {"destination", m->destination}};
      }
      out << j.dump() << '\n';
    }
  } else {
    throw UsageError("game kind is bp or cr");
  }
  write_output(c.out, out.str());
}

struct ExperimentArgs {
  std::string name;
  std::string format = "csv";
  std::string mode = "faithful";
};

void run_experiment_cmd(const ExperimentArgs& a, const Common& c) {
  if (a.name == "list") {
    std::string names;
    for (const auto& n : experiment_names()) names += n + "\n";
    write_output(c.out, names);
    return;
  }
  ExperimentOptions o;
  o.seed = c.seed;
  o.budget = c.budget;
  if (c.engine == "stream") {
    o.engine = Engine::kStream;
  } else if (c.engine != "naive") {
    throw UsageError("--engine is naive or stream");
  }
  if (a.mode == "fast") {
    o.stream_mode = StreamMode::kFast;
  } else if (a.mode != "faithful") {
    throw UsageError("--stream-mode is faithful or fast");
  }
  if (a.format != "csv" && a.format != "json") throw UsageError("--format is csv or json");
  const ExperimentReport report = run_experiment(a.name, o);
  write_output(c.out, a.format == "csv" ? report.to_csv() : report.to_json().dump(2) + "\n");
  std::cerr << report.name << ": " << report.rows.size() << " rows, " << report.discrepancies
            << " discrepancies\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting logics with restricted requantification: refinement, games, "
               "equivalence and experiments"};
  app.require_subcommand(1);
  Common c;

  auto* gen = app.add_subcommand("gen", "emit a JSON graph from a named family");
  GenArgs gen_args;
  gen->add_option("family", gen_args.family,
                  "grid | bridged_grid | tree_of_grids | perfect_binary_tree | complete | "
                  "star | path | cycle | random")
      ->required();
  gen->add_option("params", gen_args.params, "family parameters (random: n p)");
  gen->add_flag("--base-coloring", gen_args.base_coloring, "color vertex i with color i");
  gen->add_option("--colors", gen_args.colors, "colors of random graphs")->capture_default_str();
  gen->add_option("--seed", c.seed, "random seed")->capture_default_str();
  add_out(gen, c);

  auto* cfi = app.add_subcommand("cfi", "emit the CFI graph X_S(B) of a base graph");
  CfiArgs cfi_args;
  cfi->add_option("base", cfi_args.base, "base graph JSON ('-' for stdin)")->required();
  cfi->add_option("--twist", cfi_args.twists, "twisted base edge u-v (repeatable)");
  cfi->add_flag("--twisted", cfi_args.twisted, "twist the smallest base edge");
  cfi->add_flag("--base-coloring", cfi_args.base_coloring, "recolor base vertex i with color i");
  add_out(cfi, c);

  auto* eval = app.add_subcommand("eval", "evaluate a formula on a graph");
  EvalArgs eval_args;
  eval->add_option("formula", eval_args.formula, "formula file ('-' for stdin)")->required();
  eval->add_option("graph", eval_args.graph, "graph JSON")->required();
  eval->add_option("--assign", eval_args.assign, "assignment, e.g. x1=0,y1=2");
  eval->add_flag("--table", eval_args.table, "list all satisfying assignments as CSV");
  eval->add_option("--legend", c.legend, "color legend file or text, e.g. 0=red,1=blue");
  add_k(eval, c);
  add_out(eval, c);

  auto* an = app.add_subcommand("analyze", "free/bound/requantified variables and rank");
  std::string analyze_formula;
  std::string analyze_graph;
  an->add_option("formula", analyze_formula, "formula file ('-' for stdin)")->required();
  an->add_option("graph", analyze_graph, "graph JSON (optional, checked for validity)");
  an->add_option("--legend", c.legend, "color legend file or text");
  add_k(an, c);
  add_out(an, c);

  auto* wl = app.add_subcommand("wl", "run a refinement; JSON summary, CSV round log");
  WlArgs wl_args;
  wl->add_option("graphs", wl_args.graphs, "one or two graph JSON files")->required();
  wl->add_option("--variant", wl_args.variant, "restricted | wl | owl")->capture_default_str();
  wl->add_option("--k", wl_args.k, "k for the classical variants")->capture_default_str();
  wl->add_option("--rounds", c.rounds, "round limit or 'inf'")->capture_default_str();
  wl->add_option("--log", wl_args.log, "CSV round log destination ('-' for stdout)");
  add_k(wl, c);
  add_budget(wl, c);
  add_out(wl, c);

  auto* eq = app.add_subcommand("equiv", "decide (k1,k2)-OWL equivalence of configurations");
  EquivArgs eq_args;
  eq->add_option("G", eq_args.g, "first graph JSON")->required();
  eq->add_option("H", eq_args.h, "second graph JSON")->required();
  eq->add_option("--alpha", eq_args.alpha, "assignment on g, e.g. x1=0,y1=2");
  eq->add_option("--beta", eq_args.beta, "assignment on h");
  eq->add_option("--engine", c.engine, "naive | stream")->capture_default_str();
  eq->add_option("--stream-mode", eq_args.mode, "faithful | fast")->capture_default_str();
  eq->add_flag("--meter", c.meter, "print the streaming memory meter as JSON");
  eq->add_option("--rounds", c.rounds, "round limit or 'inf' (naive engine)")
      ->capture_default_str();
  eq->add_option("--log", eq_args.log, "CSV round log destination (naive engine)");
  add_k(eq, c);
  add_budget(eq, c);
  add_out(eq, c);

  auto* game = app.add_subcommand("game", "solve the bijective pebble (bp) or cops-and-robber "
                                          "(cr) game");
  GameArgs game_args;
  game->add_option("kind", game_args.kind, "bp | cr")->required();
  game->add_option("graphs", game_args.graphs, "bp: G H; cr: base graph")->required();
  game->add_option("--alpha", game_args.alpha, "bp start assignment on G");
  game->add_option("--beta", game_args.beta, "bp start assignment on H");
  game->add_flag("--first-move", game_args.first_move, "also print an optimal first move");
  game->add_option("--rounds", c.rounds, "round limit or 'inf'")->capture_default_str();
  add_k(game, c);
  add_budget(game, c);
  add_out(game, c);

  auto* ex = app.add_subcommand("experiment", "run a named experiment suite ('list' for names)");
  ExperimentArgs ex_args;
  ex->add_option("name", ex_args.name, "suite name")->required();
  ex->add_option("--format", ex_args.format, "csv | json")->capture_default_str();
  ex->add_option("--engine", c.engine, "naive | stream")->capture_default_str();
  ex->add_option("--stream-mode", ex_args.mode, "faithful | fast")->capture_default_str();
  ex->add_option("--seed", c.seed, "random seed")->capture_default_str();
  add_budget(ex, c);
  add_out(ex, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*gen) run_gen(gen_args, c);
    if (*cfi) run_cfi(cfi_args, c);
    if (*eval) run_eval(eval_args, c);
    if (*an) {
      if (!analyze_graph.empty()) read_graph(analyze_graph);
      run_analyze(analyze_formula, c);
    }
    if (*wl) run_wl(wl_args, c);
    if (*eq) run_equiv(eq_args, c);
    if (*game) run_game(game_args, c);
    if (*ex) run_experiment_cmd(ex_args, c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
