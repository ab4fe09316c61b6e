#include "rqwl/experiments.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

#include "rqwl/cfi.hpp"
#include "rqwl/games.hpp"
#include "rqwl/json_io.hpp"
#include "rqwl/logic.hpp"
#include "rqwl/treedepth.hpp"
#include "rqwl/wl.hpp"

namespace rqwl {

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["columns"] = columns;
  j["rows"] = rows;
  j["summary"] = summary;
  j["discrepancies"] = discrepancies;
  return j;
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream out;
  for (size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "");
      if (row[i].is_string()) {
        out << row[i].get<std::string>();
      } else {
        out << row[i].dump();
      }
    }
    out << '\n';
  }
  return out.str();
}

namespace {

using KPair = std::pair<int, int>;

ColoredGraph copy_with_shuffle(const ColoredGraph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return permuted(g, perm);
}

// Random pair: about a third are isomorphic copies, so that both verdicts
// occur often.
std::pair<ColoredGraph, ColoredGraph> random_pair(int n, std::mt19937_64& rng) {
  ColoredGraph g = random_graph(n, 0.5, 2, rng);
  if (rng() % 3 == 0) {
    ColoredGraph h = copy_with_shuffle(g, rng);
    return {std::move(g), std::move(h)};
  }
  ColoredGraph h = random_graph(n, 0.5, 2, rng);
  return {std::move(g), std::move(h)};
}

BaseGraph base_of(const ColoredGraph& g) { return validate_base(with_base_coloring(g)); }

// ---------------------------------------------------------------------------
// Three-way characterization

struct ThreeWayTally {
  std::int64_t pairs = 0;
  std::int64_t configurations = 0;  // (alpha, beta, r) triples compared
  std::int64_t bp_owl_mismatches = 0;
  std::int64_t formula_checks = 0;
  std::int64_t formula_violations = 0;  // Duplicator wins but a formula separates
  std::int64_t formula_witnesses = 0;   // Spoiler wins and a formula separates
};

FormulaPtr sample_formula(std::mt19937_64& rng, int k1, int k2, std::uint32_t& free_x,
                          std::uint32_t& free_y) {
  RandomFormulaOptions o;
  o.k1 = k1;
  o.k2 = k2;
  o.max_threshold = 3;
  o.num_colors = 2;
  o.max_size = 12;
  while (true) {
    free_x = k1 ? static_cast<std::uint32_t>(rng() % (1u << k1)) : 0u;
    free_y = k2 ? static_cast<std::uint32_t>(rng() % (1u << k2)) : 0u;
    o.free_x = free_x;
    o.free_y = free_y;
    o.max_rank = static_cast<int>(rng() % 4);
    const bool has_atom_vars = (free_x | free_y) != 0;
    const bool can_quantify = k1 > 0 || static_cast<int>(std::popcount(free_y)) < k2;
    if (!has_atom_vars && (o.max_rank == 0 || !can_quantify)) continue;
    try {
      return random_formula(rng, o);
    } catch (const DomainError&) {
      continue;
    }
  }
}

void three_way_pair(const ColoredGraph& g, const ColoredGraph& h, int k1, int k2,
                    int formulas, std::mt19937_64& rng, ThreeWayTally& tally) {
  constexpr int kMaxRounds = 3;
  const int k = k1 + k2;
  ++tally.pairs;
  BpSolver solver(g, h, k1, k2);
  const AssignmentIndexer ix_g(g.order(), k);
  const AssignmentIndexer ix_h(h.order(), k);
  std::vector<std::uint32_t> mask_g(ix_g.size());
  std::vector<std::uint32_t> mask_h(ix_h.size());
  std::vector<std::int64_t> naive_g(ix_g.size());
  std::vector<std::int64_t> naive_h(ix_h.size());
  for (std::int64_t a = 0; a < ix_g.size(); ++a) {
    const auto p = ix_g.decode(a, k1, k2);
    mask_g[a] = p.domain_mask();
    naive_g[a] = tuple_index(g.order(), true, p.entries());
  }
  for (std::int64_t b = 0; b < ix_h.size(); ++b) {
    const auto p = ix_h.decode(b, k1, k2);
    mask_h[b] = p.domain_mask();
    naive_h[b] = tuple_index(h.order(), true, p.entries());
  }

  std::vector<const std::vector<std::uint8_t>*> bp(kMaxRounds + 1);
  for (int r = 0; r <= kMaxRounds; ++r) bp[r] = &solver.table(r);
  for (int r = 0; r <= kMaxRounds; ++r) {
    RefineOptions o;
    o.rounds = r;
    const auto owl = owl_restricted({&g, &h}, k1, k2, o);
    for (std::int64_t a = 0; a < ix_g.size(); ++a) {
      for (std::int64_t b = 0; b < ix_h.size(); ++b) {
        if (mask_g[a] != mask_h[b]) continue;
        ++tally.configurations;
        const bool dup = (*bp[r])[solver.state(a, b)] != 0;
        const bool same = owl.colors[0][naive_g[a]] == owl.colors[1][naive_h[b]];
        tally.bp_owl_mismatches += dup != same;
      }
    }
  }

  for (int f = 0; f < formulas; ++f) {
    std::uint32_t free_x = 0;
    std::uint32_t free_y = 0;
    const FormulaPtr phi = sample_formula(rng, k1, k2, free_x, free_y);
    const int qr = analyze(*phi, k1, k2).quantifier_rank;
    const auto tg = evaluate_table(g, k1, k2, *phi);
    const auto th = evaluate_table(h, k1, k2, *phi);
    for (std::int64_t a = 0; a < ix_g.size(); ++a) {
      const std::uint32_t m = mask_g[a];
      if ((m >> k1) != free_y || (free_x & ~m) != 0) continue;
      for (std::int64_t b = 0; b < ix_h.size(); ++b) {
        if (mask_h[b] != m) continue;
        ++tally.formula_checks;
        const bool dup = (*bp[qr])[solver.state(a, b)] != 0;
        const bool differ = tg[a] != th[b];
        if (dup && differ) ++tally.formula_violations;
        if (!dup && differ) ++tally.formula_witnesses;
      }
    }
  }
}

}  // namespace

ExperimentReport three_way_characterization(const ExperimentOptions& options, int max_n,
                                            int sample, int sample_n,
                                            int formulas_per_pair) {
  ExperimentReport report;
  report.name = "three-way";
  report.columns = {"set",           "k1",         "k2",
                    "pairs",         "configurations", "bp_owl_mismatches",
                    "formula_checks", "formula_violations", "formula_witnesses"};
  std::mt19937_64 rng(options.seed);
  const std::vector<KPair> ks{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  const auto graphs = enumerate_graphs(max_n, 2);
  std::vector<std::pair<ColoredGraph, ColoredGraph>> sampled;
  for (int i = 0; i < sample; ++i) sampled.push_back(random_pair(sample_n, rng));

  auto emit = [&](const std::string& set, KPair kp, const ThreeWayTally& t) {
    report.rows.push_back({set, kp.first, kp.second, t.pairs, t.configurations,
                           t.bp_owl_mismatches, t.formula_checks, t.formula_violations,
                           t.formula_witnesses});
    report.discrepancies += t.bp_owl_mismatches + t.formula_violations;
  };
  for (const KPair& kp : ks) {
    ThreeWayTally t;
    for (size_t i = 0; i < graphs.size(); ++i) {
      for (size_t j = i; j < graphs.size(); ++j) {
        three_way_pair(graphs[i], graphs[j], kp.first, kp.second, formulas_per_pair, rng, t);
      }
    }
    emit("all<=" + std::to_string(max_n), kp, t);
  }
  for (const KPair& kp : ks) {
    ThreeWayTally t;
    for (const auto& [g, h] : sampled) {
      three_way_pair(g, h, kp.first, kp.second, formulas_per_pair, rng, t);
    }
    emit("random" + std::to_string(sample_n), kp, t);
  }
  report.summary["graphs"] = graphs.size();
  report.summary["sampled_pairs"] = sample;
  report.summary["max_rounds"] = 3;
  return report;
}

ExperimentReport cfi_parity(const ExperimentOptions& options) {
  ExperimentReport report;
  report.name = "cfi-parity";
  report.columns = {"base", "twist_sets", "pairs", "isomorphic_pairs", "discrepancies"};
  const std::vector<std::pair<std::string, ColoredGraph>> bases{
      {"K3", complete_graph(3)},
      {"K4", complete_graph(4)},
      {"P4", path_graph(4)},
      {"G2x3", grid(2, 3)}};
  IsoOptions iso;
  iso.node_budget = options.budget;
  for (const auto& [name, g] : bases) {
    const BaseGraph base = base_of(g);
    const auto edges = g.edges();
    std::vector<std::vector<Edge>> sets{{}};
    for (size_t i = 0; i < edges.size(); ++i) {
      sets.push_back({edges[i]});
      for (size_t j = i + 1; j < edges.size(); ++j) sets.push_back({edges[i], edges[j]});
    }
    std::vector<ColoredGraph> built;
    for (const auto& s : sets) built.push_back(build_cfi(base, s).graph);
    std::int64_t pairs = 0;
    std::int64_t iso_pairs = 0;
    std::int64_t bad = 0;
    for (size_t i = 0; i < sets.size(); ++i) {
      for (size_t j = i; j < sets.size(); ++j) {
        ++pairs;
        const bool is_iso = iso_oracle(built[i], built[j], iso).has_value();
        iso_pairs += is_iso;
        bad += is_iso != (sets[i].size() % 2 == sets[j].size() % 2);
      }
    }
    report.rows.push_back({name, sets.size(), pairs, iso_pairs, bad});
    report.discrepancies += bad;
  }
  return report;
}

ExperimentReport hierarchy_separations(const ExperimentOptions& options) {
  ExperimentReport report;
  report.name = "hierarchy-separations";
  report.columns = {"instance", "base",           "k1",          "k2",
                    "cr_winner", "expected_winner", "owl_distinguishes", "consistent"};
  struct Case {
    std::string instance;
    std::string base_name;
    ColoredGraph base;
    int k1;
    int k2;
    CrWinner expected;
  };
  const ColoredGraph b2 = perfect_binary_tree(2);
  const ColoredGraph k3 = complete_graph(3);
  const ColoredGraph p9 = grid(1, 9);
  const std::vector<Case> cases{
      {"special_case", "B2", b2, 1, 1, CrWinner::kCops},
      {"special_case", "B2", b2, 0, 2, CrWinner::kRobber},
      {"capacity_advantage", "K3", k3, 0, 3, CrWinner::kCops},
      {"capacity_advantage", "K3", k3, 2, 0, CrWinner::kRobber},
      {"capacity_advantage", "K3", k3, 1, 1, CrWinner::kRobber},
      {"capacity_advantage", "K3", k3, 0, 2, CrWinner::kRobber},
      {"reusable_advantage", "P9", p9, 2, 0, CrWinner::kCops},
      {"reusable_advantage", "P9", p9, 1, 1, CrWinner::kRobber},
  };
  for (const auto& c : cases) {
    const CrWinner cr = CrSolver(c.base, c.k1, c.k2, options.budget).cops_win(kUnbounded)
                            ? CrWinner::kCops
                            : CrWinner::kRobber;
    const BaseGraph base = base_of(c.base);
    const auto x = cfi_untwisted(base);
    const auto xt = cfi_twisted(base);
    bool distinguishes = false;
    if (options.engine == Engine::kStream) {
      StreamOptions so;
      so.mode = options.stream_mode;
      const PartialAssignment empty(c.k1, c.k2);
      distinguishes =
          !stream_equivalent(x.graph, empty, xt.graph, empty, c.k1, c.k2, so).equivalent;
    } else {
      RefineOptions o;
      o.budget = options.budget;
      distinguishes = empty_assignment_distinguishes(
          owl_restricted(x.graph, &xt.graph, c.k1, c.k2, o), 0, 1);
    }
    const bool consistent = cr == c.expected && distinguishes == (cr == CrWinner::kCops);
    report.rows.push_back({c.instance, c.base_name, c.k1, c.k2, to_string(cr),
                           to_string(c.expected), distinguishes, consistent});
    report.discrepancies += !consistent;
  }
  report.summary["engine"] = options.engine == Engine::kStream ? "stream" : "naive";
  return report;
}

ExperimentReport cr_bp_bridge(const ExperimentOptions& options, int max_rounds) {
  ExperimentReport report;
  report.name = "cr-bp-bridge";
  report.columns = {"base", "k1", "k2", "rounds", "robber_survives", "duplicator_wins",
                    "agree"};
  const std::vector<std::pair<std::string, ColoredGraph>> bases{{"P3", path_graph(3)},
                                                                {"K3", complete_graph(3)}};
  for (const auto& [name, g] : bases) {
    const BaseGraph base = base_of(g);
    const auto x = cfi_untwisted(base);
    const auto xt = cfi_twisted(base);
    for (int k = 2; k <= 3; ++k) {
      for (int k1 = 0; k1 <= k; ++k1) {
        const int k2 = k - k1;
        CrSolver cr(g, k1, k2, options.budget);
        BpSolver bp(x.graph, xt.graph, k1, k2, options.budget);
        const PartialAssignment empty(k1, k2);
        for (int r = 0; r <= max_rounds; ++r) {
          const bool robber = !cr.cops_win(r);
          const bool dup = bp.duplicator_wins(empty, empty, r);
          report.rows.push_back({name, k1, k2, r, robber, dup, robber == dup});
          report.discrepancies += robber != dup;
        }
      }
    }
  }
  return report;
}

ExperimentReport iteration_bound_check(const ExperimentOptions& options, int graphs,
                                       int max_n) {
  ExperimentReport report;
  report.name = "iteration-bound";
  report.columns = {"graph", "n", "k1", "k2", "stabilization_round", "bound", "within"};
  std::mt19937_64 rng(options.seed);
  const std::vector<KPair> ks{{1, 0}, {1, 1}, {1, 2}, {2, 1}};
  std::map<std::string, std::int64_t> worst;
  for (int i = 0; i < graphs; ++i) {
    const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    const ColoredGraph g = random_graph(n, 0.5, 2, rng);
    for (const auto& [k1, k2] : ks) {
      RefineOptions o;
      o.budget = options.budget;
      const auto r = owl_restricted(g, nullptr, k1, k2, o);
      const std::int64_t measured = r.stabilization_round();
      const std::int64_t bound = iteration_bound(n, k1, k2);
      report.rows.push_back({i, n, k1, k2, measured, bound, measured <= bound});
      report.discrepancies += measured > bound || !r.stable;
      auto& w = worst["(" + std::to_string(k1) + "," + std::to_string(k2) + ")"];
      w = std::max(w, measured);
    }
  }
  report.summary["max_stabilization_round"] = worst;
  return report;
}

ExperimentReport stream_vs_naive(const ExperimentOptions& options, int pairs, int max_n) {
  ExperimentReport report;
  report.name = "stream-vs-naive";
  report.columns = {"case",       "n",           "k1",           "k2",
                    "naive",      "stream",      "peak_cells",   "peak_depth",
                    "oracle_calls", "cell_bound", "naive_cells"};
  std::mt19937_64 rng(options.seed);
  const std::vector<KPair> ks{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2},
                              {3, 0}, {2, 1}, {1, 2}, {0, 3}};
  StreamOptions so;
  so.mode = options.stream_mode;
  auto pow = [](std::int64_t b, int e) {
    std::int64_t p = 1;
    for (int i = 0; i < e; ++i) p *= b;
    return p;
  };
  std::int64_t agreements = 0;
  std::int64_t equivalent = 0;
  for (int i = 0; i < pairs; ++i) {
    const int n = std::uniform_int_distribution<int>(2, max_n)(rng);
    const auto [k1, k2] = ks[std::uniform_int_distribution<size_t>(0, ks.size() - 1)(rng)];
    ColoredGraph g = random_graph(n, 0.5, 2, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const bool copy = rng() % 3 == 0;
    ColoredGraph h;
    if (copy) {
      std::shuffle(perm.begin(), perm.end(), rng);
      h = permuted(g, perm);
    } else {
      h = random_graph(n, 0.5, 2, rng);
    }
    // Random configuration with equal domains; for copies, beta follows the
    // isomorphism so that both verdicts stay likely.
    PartialAssignment a(k1, k2);
    PartialAssignment b(k1, k2);
    for (int v = 0; v < k1 + k2; ++v) {
      if (rng() % 3 != 0) continue;
      const auto x = static_cast<Vertex>(rng() % n);
      a.set(v, x);
      b.set(v, copy ? perm[x] : static_cast<Vertex>(rng() % n));
    }
    const bool naive = equivalent_naive(g, a, h, b, k1, k2, kUnbounded, options.budget);
    const auto s = stream_equivalent(g, a, h, b, k1, k2, so);
    agreements += naive == s.equivalent;
    equivalent += naive;
    report.discrepancies += naive != s.equivalent;
    report.rows.push_back({"random", n, k1, k2, naive, s.equivalent, s.meter.peak_cells,
                           s.meter.peak_depth, s.meter.oracle_calls,
                           4 * (k2 + 1) * pow(n + 1, k1), 2 * pow(n + 1, k1 + k2)});
  }
  // Space law at (1,2): the same discretely colored path on both sides forces
  // every level of the recursion to run.
  double previous_ratio = 1e100;
  bool decreasing = true;
  double max_c = 0;
  nlohmann::json law = nlohmann::json::array();
  for (const int n : {4, 6, 8}) {
    const int k1 = 1;
    const int k2 = 2;
    const ColoredGraph g = with_base_coloring(path_graph(n));
    StreamOptions faithful;  // the space law is about the faithful engine
    const auto s = stream_equivalent(g, PartialAssignment(k1, k2), g, PartialAssignment(k1, k2),
                                     k1, k2, faithful);
    const std::int64_t unit = (k2 + 1) * pow(n + 1, k1);
    const std::int64_t naive_cells = 2 * pow(n + 1, k1 + k2);
    const double c = static_cast<double>(s.meter.peak_cells) / static_cast<double>(unit);
    const double ratio =
        static_cast<double>(s.meter.peak_cells) / static_cast<double>(naive_cells);
    decreasing = decreasing && ratio < previous_ratio;
    previous_ratio = ratio;
    max_c = std::max(max_c, c);
    report.rows.push_back({"space-law", n, k1, k2, true, s.equivalent, s.meter.peak_cells,
                           s.meter.peak_depth, s.meter.oracle_calls, 4 * unit, naive_cells});
    law.push_back({{"n", n}, {"peak_cells", s.meter.peak_cells}, {"c", c}, {"ratio", ratio}});
    report.discrepancies += !s.equivalent;
  }
  report.discrepancies += !decreasing || max_c > 4.0;
  report.summary["pairs"] = pairs;
  report.summary["agreements"] = agreements;
  report.summary["equivalent_pairs"] = equivalent;
  report.summary["space_law"] = law;
  report.summary["max_c"] = max_c;
  report.summary["ratio_strictly_decreasing"] = decreasing;
  report.summary["mode"] = options.stream_mode == StreamMode::kFast ? "fast" : "faithful";
  return report;
}

ExperimentReport degree_sequences(const ExperimentOptions& options, int max_n) {
  ExperimentReport report;
  report.name = "degree-sequences";
  report.columns = {"n", "pairs", "bp02_duplicator", "bp02_mismatches", "bp11_duplicator",
                    "bp11_mismatches"};
  const auto graphs = enumerate_graphs(max_n, 1);
  std::vector<DegreeProfiles> profiles;
  for (const auto& g : graphs) profiles.push_back(degree_profiles(g));
  // Pairs of different order are decided in the first round (no bijection);
  // they are solved as well, grouped under the smaller order.
  std::map<int, std::array<std::int64_t, 5>> by_n;
  for (size_t i = 0; i < graphs.size(); ++i) {
    for (size_t j = i + 1; j < graphs.size(); ++j) {
      const auto& g = graphs[i];
      const auto& h = graphs[j];
      const bool same_order = g.order() == h.order();
      auto& t = by_n[std::min(g.order(), h.order())];
      ++t[0];
      const bool d02 = BpSolver(g, h, 0, 2, options.budget)
                           .duplicator_wins(PartialAssignment(0, 2), PartialAssignment(0, 2),
                                            kUnbounded);
      const bool p02 = same_order && profiles[i].degrees == profiles[j].degrees;
      const bool d11 = BpSolver(g, h, 1, 1, options.budget)
                           .duplicator_wins(PartialAssignment(1, 1), PartialAssignment(1, 1),
                                            kUnbounded);
      const bool p11 = same_order && profiles[i].neighborhoods == profiles[j].neighborhoods;
      t[1] += d02;
      t[2] += d02 != p02;
      t[3] += d11;
      t[4] += d11 != p11;
    }
  }
  for (const auto& [n, t] : by_n) {
    report.rows.push_back({n, t[0], t[1], t[2], t[3], t[4]});
    report.discrepancies += t[2] + t[4];
  }
  report.summary["graphs"] = graphs.size();
  return report;
}

namespace {

// Same report as identifies_within, with every pair decided by the streaming
// engine. Fast mode: verdicts do not depend on the mode, and faithful
// recomputation is exponential in k2 here.
IdentificationReport identifies_within_stream(int k1, int k2,
                                              const std::vector<ColoredGraph>& candidates) {
  IdentificationReport report;
  report.k1 = k1;
  report.k2 = k2;
  report.candidates = static_cast<int>(candidates.size());
  StreamOptions so;
  so.mode = StreamMode::kFast;
  const PartialAssignment empty(k1, k2);
  for (size_t i = 0; i < candidates.size(); ++i) {
    for (size_t j = i + 1; j < candidates.size(); ++j) {
      ++report.pairs_checked;
      if (!stream_equivalent(candidates[i], empty, candidates[j], empty, k1, k2, so).equivalent) {
        continue;
      }
      ++report.equivalent_pairs;
      if (!iso_oracle(candidates[i], candidates[j])) {
        report.conflicts.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return report;
}

}  // namespace

ExperimentReport treedepth_identification(const ExperimentOptions& options) {
  ExperimentReport report;
  report.name = "treedepth-identification";
  report.columns = {"d",     "max_n",           "k1",        "k2",      "candidates",
                    "pairs", "equivalent_pairs", "conflicts", "asserted"};
  struct Run {
    int d;
    int max_n;
    int k1;
    int k2;
    bool asserted;  // false: the run only reports whether conflicts exist
  };
  const std::vector<Run> runs{{1, 7, 0, 2, true},  {2, 7, 0, 3, true}, {2, 7, 1, 1, true}, {2, 7, 0, 2, false},
                              {3, 6, 0, 4, true}, {3, 6, 1, 2, true}};
  std::map<std::pair<int, int>, std::vector<ColoredGraph>> candidates;
  nlohmann::json conflicts = nlohmann::json::array();
  for (const auto& run : runs) {
    auto& c = candidates[{run.d, run.max_n}];
    if (c.empty()) c = graphs_of_tree_depth_at_most(run.d, run.max_n);
    const auto rep = options.engine == Engine::kStream
                         ? identifies_within_stream(run.k1, run.k2, c)
                         : identifies_within(run.k1, run.k2, c, options.budget);
    report.rows.push_back({run.d, run.max_n, run.k1, run.k2, rep.candidates, rep.pairs_checked,
                           rep.equivalent_pairs, rep.conflicts.size(), run.asserted});
    for (const auto& [i, j] : rep.conflicts) {
      conflicts.push_back({{"d", run.d},
                           {"k1", run.k1},
                           {"k2", run.k2},
                           {"asserted", run.asserted},
                           {"g", graph_to_json(c[static_cast<size_t>(i)])},
                           {"h", graph_to_json(c[static_cast<size_t>(j)])}});
    }
    if (run.asserted) report.discrepancies += static_cast<std::int64_t>(rep.conflicts.size());
  }
  report.summary["conflicts"] = conflicts;
  report.summary["engine"] = options.engine == Engine::kStream ? "stream" : "naive";
  return report;
}

ExperimentReport wl_owl_equivalence(const ExperimentOptions& options, int max_n) {
  ExperimentReport report;
  report.name = "wl-owl";
  report.columns = {"colors", "max_n", "k", "graphs", "pairs", "wl_distinguished",
                    "owl_distinguished", "mismatches"};
  RefineOptions o;
  o.budget = options.budget;
  // Histogram of final colors per graph; equal histograms = not distinguished.
  auto classes = [](const RefinementResult& r) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> out;
    for (const auto& colors : r.colors) {
      std::vector<int> h = colors;
      std::sort(h.begin(), h.end());
      out.push_back(ids.emplace(h, static_cast<int>(ids.size())).first->second);
    }
    return out;
  };
  // Uncolored graphs go one vertex further: below six vertices 1-WL already
  // separates every pair of uncolored graphs.
  const std::vector<std::pair<int, int>> sets{{1, max_n + 1}, {2, max_n}};
  for (const auto& [num_colors, set_n] : sets) {
    const auto graphs = enumerate_graphs(set_n, num_colors);
    std::vector<const ColoredGraph*> ptrs;
    for (const auto& g : graphs) ptrs.push_back(&g);
    for (int k : {1, 2}) {
      const auto wl = classes(wl_classic(ptrs, k, o));
      const auto owl = classes(owl_classic(ptrs, k + 1, o));
      std::int64_t pairs = 0;
      std::int64_t wl_dist = 0;
      std::int64_t owl_dist = 0;
      std::int64_t bad = 0;
      for (size_t i = 0; i < graphs.size(); ++i) {
        for (size_t j = i + 1; j < graphs.size(); ++j) {
          ++pairs;
          const bool a = wl[i] != wl[j];
          const bool b = owl[i] != owl[j];
          wl_dist += a;
          owl_dist += b;
          bad += a != b;
        }
      }
      report.rows.push_back(
          {num_colors, set_n, k, graphs.size(), pairs, wl_dist, owl_dist, bad});
      report.discrepancies += bad;
    }
  }
  return report;
}

std::vector<std::string> experiment_names() {
  return {"hierarchy-separations", "iteration-bound", "treedepth-identification",
          "stream-vs-naive",       "three-way",       "cfi-parity",
          "cr-bp-bridge",          "degree-sequences", "wl-owl"};
}

ExperimentReport run_experiment(const std::string& name, const ExperimentOptions& options) {
  if (name == "hierarchy-separations") return hierarchy_separations(options);
  if (name == "iteration-bound") return iteration_bound_check(options);
  if (name == "treedepth-identification") return treedepth_identification(options);
  if (name == "stream-vs-naive") return stream_vs_naive(options);
  if (name == "three-way") return three_way_characterization(options);
  if (name == "cfi-parity") return cfi_parity(options);
  if (name == "cr-bp-bridge") return cr_bp_bridge(options);
  if (name == "degree-sequences") return degree_sequences(options);
  if (name == "wl-owl") return wl_owl_equivalence(options);
  throw DomainError("unknown experiment '" + name + "'");
}

}  // namespace rqwl
