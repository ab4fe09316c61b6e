#include "rqwl/treedepth.hpp"

#include <bit>
#include <unordered_map>

namespace rqwl {

namespace {

class TdSolver {
 public:
  explicit TdSolver(const ColoredGraph& g) : g_(g), n_(g.order()) {
    adj_.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(v)) adj_[v] |= 1u << w;
    }
  }

  std::uint32_t component_of(std::uint32_t set, Vertex start) const {
    std::uint32_t comp = 1u << start;
    std::uint32_t frontier = comp;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint32_t fresh = adj_[v] & set & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    return comp;
  }

  int td(std::uint32_t set) {
    if (set == 0) return 0;
    if (std::has_single_bit(set)) return 1;
    if (auto it = memo_.find(set); it != memo_.end()) return it->second;
    const std::uint32_t comp = component_of(set, std::countr_zero(set));
    int best;
    if (comp != set) {
      best = std::max(td(comp), td(set & ~comp));
    } else {
      best = n_ + 1;
      for (std::uint32_t rest = set; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        best = std::min(best, 1 + td(set & ~(1u << v)));
        if (best == 2) break;  // a connected set of two or more vertices has td >= 2
      }
    }
    memo_.emplace(set, best);
    return best;
  }

  // Build the elimination forest of a set below `parent`.
  void witness(std::uint32_t set, Vertex parent, std::vector<Vertex>& out) {
    while (set) {
      const std::uint32_t comp = component_of(set, std::countr_zero(set));
      set &= ~comp;
      const int value = td(comp);
      for (std::uint32_t rest = comp; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (1 + td(comp & ~(1u << v)) == value) {
          out[v] = parent;
          witness(comp & ~(1u << v), v, out);
          break;
        }
      }
    }
  }

 private:
  const ColoredGraph& g_;
  int n_;
  std::vector<std::uint32_t> adj_;
  std::unordered_map<std::uint32_t, int> memo_;
};

}  // namespace

TdCertificate tree_depth(const ColoredGraph& g, int max_vertices) {
  if (g.order() > max_vertices || g.order() > 30) {
    throw BudgetExceeded("tree_depth supports at most " + std::to_string(max_vertices) +
                         " vertices");
  }
  TdSolver solver(g);
  const std::uint32_t all = g.order() == 0 ? 0 : (std::uint32_t{1} << g.order()) - 1;
  TdCertificate cert;
  cert.value = solver.td(all);
  cert.parent.assign(g.order(), -1);
  solver.witness(all, -1, cert.parent);
  return cert;
}

bool verify_certificate(const ColoredGraph& g, const TdCertificate& cert) {
  const int n = g.order();
  if (static_cast<int>(cert.parent.size()) != n) return false;
  std::vector<int> depth(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    int d = 1;
    Vertex u = v;
    while (cert.parent[u] != -1) {
      u = cert.parent[u];
      if (u < 0 || u >= n || ++d > n) return false;
    }
    depth[v] = d;
  }
  auto is_ancestor = [&](Vertex a, Vertex b) {
    for (Vertex u = b; u != -1; u = cert.parent[u]) {
      if (u == a) return true;
    }
    return false;
  };
  for (auto [u, v] : g.edges()) {
    if (!is_ancestor(u, v) && !is_ancestor(v, u)) return false;
  }
  int max_depth = 0;
  for (int d : depth) max_depth = std::max(max_depth, d);
  if (max_depth != cert.value) return false;
  // Optimality of each root choice: the subtree below v has tree-depth
  // exactly (height of v's subtree) when recomputed from scratch.
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> sub;
    for (Vertex u = 0; u < n; ++u) {
      if (is_ancestor(v, u)) sub.push_back(u);
    }
    int height = 0;
    for (Vertex u : sub) height = std::max(height, depth[u] - depth[v] + 1);
    std::vector<Vertex> index(n, -1);
    for (size_t i = 0; i < sub.size(); ++i) index[sub[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) {
      if (index[a] >= 0 && index[b] >= 0) edges.emplace_back(index[a], index[b]);
    }
    auto induced = ColoredGraph::make(static_cast<int>(sub.size()), edges);
    if (connected_components(induced) != 1) return false;
    TdSolver solver(induced);
    const std::uint32_t all = (std::uint32_t{1} << sub.size()) - 1;
    if (solver.td(all) != height) return false;
  }
  return true;
}

ColoredGraph shrink(const ColoredGraph& g, Vertex v) {
  if (!g.valid_vertex(v)) throw DomainError("shrink: vertex out of range");
  const int n = g.order();
  std::vector<Vertex> index(n, -1);
  std::vector<ColorId> colors;
  for (Vertex w = 0, next = 0; w < n; ++w) {
    if (w == v) continue;
    index[w] = next++;
    colors.push_back(2 * g.color(w) + (g.adjacent(v, w) ? 1 : 0));
  }
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (a != v && b != v) edges.emplace_back(index[a], index[b]);
  }
  return ColoredGraph::make(n - 1, edges, colors);
}

IdentificationReport identifies_within(int k1, int k2,
                                       const std::vector<ColoredGraph>& candidates,
                                       std::int64_t budget) {
  IdentificationReport report;
  report.k1 = k1;
  report.k2 = k2;
  report.candidates = static_cast<int>(candidates.size());
  if (candidates.empty()) return report;
  std::vector<const ColoredGraph*> graphs;
  for (const auto& g : candidates) graphs.push_back(&g);
  RefineOptions options;
  options.budget = budget;
  const auto result = owl_restricted(graphs, k1, k2, options);
  std::vector<Vertex> empty(k1 + k2, kUnassigned);
  std::vector<int> color(candidates.size());
  for (size_t i = 0; i < candidates.size(); ++i) {
    color[i] = result.colors[i][tuple_index(candidates[i].order(), true, empty)];
  }
  for (size_t i = 0; i < candidates.size(); ++i) {
    for (size_t j = i + 1; j < candidates.size(); ++j) {
      ++report.pairs_checked;
      if (color[i] != color[j]) continue;
      ++report.equivalent_pairs;
      if (!iso_oracle(candidates[i], candidates[j])) {
        report.conflicts.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return report;
}

std::vector<ColoredGraph> graphs_of_tree_depth_at_most(int d, int max_n) {
  std::vector<ColoredGraph> out;
  for (auto& g : enumerate_graphs(max_n, 1)) {
    if (tree_depth(g).value <= d) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace rqwl
