#include "rqwl/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace rqwl {

ColoredGraph ColoredGraph::make(int n, std::span<const Edge> edges,
                                std::span<const ColorId> colors) {
  if (n < 0) throw DomainError("graph order must be non-negative");
  if (static_cast<int>(colors.size()) != n) {
    throw DomainError("color list has length " + std::to_string(colors.size()) +
                      ", expected " + std::to_string(n));
  }
  ColoredGraph g;
  g.n_ = n;
  g.colors_.assign(colors.begin(), colors.end());
  for (ColorId c : g.colors_) {
    if (c < 0) throw DomainError("colors must be non-negative");
  }
  g.neighbors_.assign(n, {});
  g.adjacency_.assign(static_cast<size_t>(n) * n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") has an endpoint out of range");
    }
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (g.adjacency_[static_cast<size_t>(u) * n + v]) continue;
    g.adjacency_[static_cast<size_t>(u) * n + v] = 1;
    g.adjacency_[static_cast<size_t>(v) * n + u] = 1;
    g.neighbors_[u].push_back(v);
    g.neighbors_[v].push_back(u);
    ++g.edge_count_;
  }
  for (auto& nb : g.neighbors_) std::sort(nb.begin(), nb.end());
  return g;
}

ColoredGraph ColoredGraph::make(int n, std::span<const Edge> edges) {
  std::vector<ColorId> colors(std::max(n, 0), 0);
  return make(n, edges, colors);
}

ColorId ColoredGraph::max_color() const {
  return colors_.empty() ? -1 : *std::max_element(colors_.begin(), colors_.end());
}

std::vector<Edge> ColoredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

struct Builder {
  int n = 0;
  std::vector<Edge> edges;
  int add_vertices(int count) {
    const int first = n;
    n += count;
    return first;
  }
  void add_edge(Vertex u, Vertex v) { edges.emplace_back(u, v); }
  ColoredGraph build() const { return ColoredGraph::make(n, edges); }
};

// Grid vertex (row i, column j), 0-based, at offset + i*l + j.
void add_grid(Builder& b, int offset, int h, int l) {
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j + 1 < l; ++j) {
      b.add_edge(offset + i * l + j, offset + i * l + j + 1);
    }
  }
  for (int i = 0; i + 1 < h; ++i) {
    for (int j = 0; j < l; ++j) {
      b.add_edge(offset + i * l + j, offset + (i + 1) * l + j);
    }
  }
}

// The bridge vertex sits at offset + h*l and joins columns floor(l/2) and
// floor(l/2)+1 (1-based) of every row.
void add_bridged_grid(Builder& b, int offset, int h, int l) {
  add_grid(b, offset, h, l);
  const int bridge = offset + h * l;
  const int left = l / 2 - 1;
  const int right = l / 2;
  for (int i = 0; i < h; ++i) {
    b.add_edge(offset + i * l + left, bridge);
    b.add_edge(bridge, offset + i * l + right);
  }
}

}  // namespace

Family family_from_name(const std::string& name) {
  static const std::map<std::string, Family> kNames = {
      {"grid", Family::kGrid},
      {"bridged_grid", Family::kBridgedGrid},
      {"tree_of_grids", Family::kTreeOfGrids},
      {"perfect_binary_tree", Family::kPerfectBinaryTree},
      {"complete", Family::kComplete},
      {"star", Family::kStar},
      {"path", Family::kPath},
      {"cycle", Family::kCycle},
  };
  auto it = kNames.find(name);
  if (it == kNames.end()) throw DomainError("unknown graph family '" + name + "'");
  return it->second;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::kGrid: return "grid";
    case Family::kBridgedGrid: return "bridged_grid";
    case Family::kTreeOfGrids: return "tree_of_grids";
    case Family::kPerfectBinaryTree: return "perfect_binary_tree";
    case Family::kComplete: return "complete";
    case Family::kStar: return "star";
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
  }
  return "?";
}

ColoredGraph grid(int h, int l) {
  require(h >= 1 && l >= 1, "grid requires h >= 1 and l >= 1");
  Builder b;
  b.add_vertices(h * l);
  add_grid(b, 0, h, l);
  return b.build();
}

ColoredGraph bridged_grid(int h, int l) {
  require(h >= 1 && l >= 2, "bridged_grid requires h >= 1 and l >= 2");
  Builder b;
  b.add_vertices(h * l + 1);
  add_bridged_grid(b, 0, h, l);
  return b.build();
}

ColoredGraph tree_of_grids(int d, int h, int l) {
  require(d >= 1 && h >= 1 && l >= 2,
          "tree_of_grids requires d >= 1, h >= 1 and l >= 2");
  const int nodes = (1 << (d + 1)) - 1;
  const int block = h * l + 1;
  Builder b;
  b.add_vertices(nodes * block);
  for (int t = 0; t < nodes; ++t) add_bridged_grid(b, t * block, h, l);
  for (int t = 0; t < nodes; ++t) {
    for (int child : {2 * t + 1, 2 * t + 2}) {
      if (child >= nodes) continue;
      for (int i = 0; i < h; ++i) {
        b.add_edge(t * block + i * l + (l - 1), child * block + i * l);
      }
    }
  }
  return b.build();
}

ColoredGraph perfect_binary_tree(int d) {
  require(d >= 0 && d <= 20, "perfect_binary_tree requires 0 <= d <= 20");
  const int nodes = (1 << (d + 1)) - 1;
  Builder b;
  b.add_vertices(nodes);
  for (int v = 1; v < nodes; ++v) b.add_edge((v - 1) / 2, v);
  return b.build();
}

ColoredGraph complete_graph(int n) {
  require(n >= 1, "complete requires n >= 1");
  Builder b;
  b.add_vertices(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build();
}

ColoredGraph star(int n) {
  require(n >= 1, "star requires n >= 1");
  Builder b;
  b.add_vertices(n + 1);
  for (int v = 1; v <= n; ++v) b.add_edge(0, v);
  return b.build();
}

ColoredGraph path_graph(int n) {
  require(n >= 1, "path requires n >= 1");
  Builder b;
  b.add_vertices(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

ColoredGraph cycle_graph(int n) {
  require(n >= 3, "cycle requires n >= 3");
  Builder b;
  b.add_vertices(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

ColoredGraph gen_family(Family family, std::span<const int> params,
                        bool base_coloring) {
  auto arity = [&](size_t want) {
    require(params.size() == want, family_name(family) + " takes " +
                                       std::to_string(want) + " parameter(s)");
  };
  ColoredGraph g;
  switch (family) {
    case Family::kGrid: arity(2); g = grid(params[0], params[1]); break;
    case Family::kBridgedGrid: arity(2); g = bridged_grid(params[0], params[1]); break;
    case Family::kTreeOfGrids:
      arity(3);
      g = tree_of_grids(params[0], params[1], params[2]);
      break;
    case Family::kPerfectBinaryTree: arity(1); g = perfect_binary_tree(params[0]); break;
    case Family::kComplete: arity(1); g = complete_graph(params[0]); break;
    case Family::kStar: arity(1); g = star(params[0]); break;
    case Family::kPath: arity(1); g = path_graph(params[0]); break;
    case Family::kCycle: arity(1); g = cycle_graph(params[0]); break;
  }
  return base_coloring ? with_base_coloring(g) : g;
}

ColoredGraph with_base_coloring(const ColoredGraph& g) {
  std::vector<ColorId> colors(g.order());
  std::iota(colors.begin(), colors.end(), 0);
  const auto edges = g.edges();
  return ColoredGraph::make(g.order(), edges, colors);
}

ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  std::vector<ColorId> colors = a.colors();
  colors.insert(colors.end(), b.colors().begin(), b.colors().end());
  return ColoredGraph::make(a.order() + b.order(), edges, colors);
}

ColoredGraph permuted(const ColoredGraph& g, std::span<const Vertex> perm) {
  require(static_cast<int>(perm.size()) == g.order(), "permutation has wrong size");
  std::vector<ColorId> colors(g.order());
  for (Vertex v = 0; v < g.order(); ++v) colors[perm[v]] = g.color(v);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return ColoredGraph::make(g.order(), edges, colors);
}

ColoredGraph random_graph(int n, double p, int num_colors, std::mt19937_64& rng) {
  require(n >= 0 && num_colors >= 1, "random_graph: bad parameters");
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, num_colors - 1);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) < p) edges.emplace_back(u, v);
    }
  }
  std::vector<ColorId> colors(n);
  for (auto& c : colors) c = pick(rng);
  return ColoredGraph::make(n, edges, colors);
}

ColoredGraph individualize(const ColoredGraph& g, std::span<const Vertex> vs) {
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : vs) {
    require(g.valid_vertex(v), "individualize: vertex out of range");
    require(!seen[v], "individualize: duplicate vertex");
    seen[v] = true;
  }
  std::vector<ColorId> colors = g.colors();
  ColorId next = g.max_color() + 1;
  for (Vertex v : vs) colors[v] = next++;
  const auto edges = g.edges();
  return ColoredGraph::make(g.order(), edges, colors);
}

// ---------------------------------------------------------------------------
// Invariants

DegreeProfiles degree_profiles(const ColoredGraph& g) {
  DegreeProfiles p;
  for (Vertex v = 0; v < g.order(); ++v) {
    p.degrees.push_back(g.degree(v));
    std::vector<int> nb;
    for (Vertex w : g.neighbors(v)) nb.push_back(g.degree(w));
    std::sort(nb.begin(), nb.end());
    p.neighborhoods.push_back(std::move(nb));
  }
  std::sort(p.degrees.begin(), p.degrees.end());
  std::sort(p.neighborhoods.begin(), p.neighborhoods.end());
  return p;
}

std::vector<std::pair<ColorId, int>> color_histogram(const ColoredGraph& g) {
  std::map<ColorId, int> counts;
  for (ColorId c : g.colors()) ++counts[c];
  return {counts.begin(), counts.end()};
}

int connected_components(const ColoredGraph& g) {
  std::vector<bool> seen(g.order(), false);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// Assignments

PartialAssignment::PartialAssignment(int k1, int k2, std::vector<Vertex> entries)
    : k1_(k1), k2_(k2), entries_(std::move(entries)) {
  require(k1 >= 0 && k2 >= 0, "variable budgets must be non-negative");
  require(static_cast<int>(entries_.size()) == k1 + k2,
          "assignment has " + std::to_string(entries_.size()) +
              " entries, expected " + std::to_string(k1 + k2));
  for (Vertex v : entries_) {
    require(v >= kUnassigned, "assignment entries must be vertices or unassigned");
  }
}

PartialAssignment PartialAssignment::with(int var, Vertex v) const {
  PartialAssignment out = *this;
  out.entries_[var] = v;
  return out;
}

std::uint32_t PartialAssignment::domain_mask() const {
  std::uint32_t mask = 0;
  for (int i = 0; i < arity(); ++i) {
    if (assigned(i)) mask |= 1u << i;
  }
  return mask;
}

std::vector<Vertex> PartialAssignment::image() const {
  std::vector<Vertex> out;
  for (Vertex v : entries_) {
    if (v != kUnassigned) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> PartialAssignment::unassigned_y() const {
  std::vector<int> out;
  for (int j = 0; j < k2_; ++j) {
    if (!assigned(y_index(j))) out.push_back(j);
  }
  return out;
}

bool PartialAssignment::valid_for(const ColoredGraph& g) const {
  return std::all_of(entries_.begin(), entries_.end(), [&](Vertex v) {
    return v == kUnassigned || g.valid_vertex(v);
  });
}

std::string variable_name(int var, int k1) {
  return var < k1 ? "x" + std::to_string(var + 1)
                  : "y" + std::to_string(var - k1 + 1);
}

AssignmentIndexer::AssignmentIndexer(int n, int arity)
    : n_(n), arity_(arity), size_(1), pow_(arity + 1, 1) {
  for (int i = 0; i < arity; ++i) {
    if (size_ > (std::int64_t{1} << 40) / (n + 1)) {
      throw BudgetExceeded("assignment domain too large");
    }
    size_ *= n + 1;
    pow_[i + 1] = size_;
  }
}

std::int64_t AssignmentIndexer::index(std::span<const Vertex> entries) const {
  std::int64_t idx = 0;
  for (int i = 0; i < arity_; ++i) {
    const std::int64_t digit = entries[i] == kUnassigned ? n_ : entries[i];
    idx += digit * pow_[i];
  }
  return idx;
}

void AssignmentIndexer::decode(std::int64_t index, std::span<Vertex> out) const {
  for (int i = 0; i < arity_; ++i) {
    const auto digit = static_cast<int>(index % (n_ + 1));
    out[i] = digit == n_ ? kUnassigned : digit;
    index /= n_ + 1;
  }
}

PartialAssignment AssignmentIndexer::decode(std::int64_t index, int k1, int k2) const {
  std::vector<Vertex> entries(arity_);
  decode(index, entries);
  return PartialAssignment(k1, k2, std::move(entries));
}

// ---------------------------------------------------------------------------
// Atomic types

namespace {

// Per position: color or -1. Per pair p < q: 0 if either unassigned, else
// 1 + [equal] + 2*[adjacent].
int pair_code(const ColoredGraph& g, Vertex u, Vertex v) {
  if (u == kUnassigned || v == kUnassigned) return 0;
  if (u == v) return 2;
  return g.adjacent(u, v) ? 3 : 1;
}

}  // namespace

AtomicType atomic_type(const ColoredGraph& g, const PartialAssignment& a) {
  AtomicType t;
  const int k = a.arity();
  t.code.reserve(k + k * (k - 1) / 2);
  for (int p = 0; p < k; ++p) t.code.push_back(a.assigned(p) ? g.color(a[p]) : -1);
  for (int p = 0; p < k; ++p) {
    for (int q = p + 1; q < k; ++q) t.code.push_back(pair_code(g, a[p], a[q]));
  }
  return t;
}

std::strong_ordering compare_atomic(const ColoredGraph& g,
                                    std::span<const Vertex> a,
                                    const ColoredGraph& h,
                                    std::span<const Vertex> b) {
  const size_t k = a.size();
  for (size_t p = 0; p < k; ++p) {
    const int ca = a[p] == kUnassigned ? -1 : g.color(a[p]);
    const int cb = b[p] == kUnassigned ? -1 : h.color(b[p]);
    if (ca != cb) return ca <=> cb;
  }
  for (size_t p = 0; p < k; ++p) {
    for (size_t q = p + 1; q < k; ++q) {
      const int ca = pair_code(g, a[p], a[q]);
      const int cb = pair_code(h, b[p], b[q]);
      if (ca != cb) return ca <=> cb;
    }
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Isomorphism oracle and canonical forms

namespace {

// Color refinement to a stable partition; returns cell id per vertex. Cell ids
// are ordered by the refined invariant, so they are canonical. When `h` is
// given, both graphs are refined jointly and share cell ids.
std::pair<std::vector<int>, std::vector<int>> refine_cells(const ColoredGraph& g,
                                                          const ColoredGraph* h) {
  const int ng = g.order();
  const int nh = h ? h->order() : 0;
  std::vector<int> cell(ng + nh);
  for (Vertex v = 0; v < ng; ++v) cell[v] = g.color(v);
  for (Vertex v = 0; v < nh; ++v) cell[ng + v] = h->color(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(ng + nh);
    for (int i = 0; i < ng + nh; ++i) {
      const bool in_g = i < ng;
      const ColoredGraph& gr = in_g ? g : *h;
      const int base = in_g ? 0 : ng;
      const Vertex v = i - base;
      sig[i].push_back(cell[i]);
      std::vector<int> nb;
      for (Vertex w : gr.neighbors(v)) nb.push_back(cell[base + w]);
      std::sort(nb.begin(), nb.end());
      sig[i].insert(sig[i].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int i = 0; i < ng + nh; ++i) {
      cell[i] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
    }
    const int now = static_cast<int>(sorted.size());
    if (now == classes) break;
    classes = now;
  }
  return {std::vector<int>(cell.begin(), cell.begin() + ng),
          std::vector<int>(cell.begin() + ng, cell.end())};
}

class IsoSearch {
 public:
  IsoSearch(const ColoredGraph& g, const ColoredGraph& h, std::int64_t budget)
      : g_(g), h_(h), budget_(budget) {}

  std::optional<std::vector<Vertex>> run() {
    const int n = g_.order();
    if (n != h_.order() || g_.edge_count() != h_.edge_count()) return std::nullopt;
    auto [cg, ch] = refine_cells(g_, &h_);
    cell_g_ = std::move(cg);
    cell_h_ = std::move(ch);
    std::vector<int> count_g(2 * n + 2, 0), count_h(2 * n + 2, 0);
    for (int c : cell_g_) {
      if (c >= static_cast<int>(count_g.size())) count_g.resize(c + 1, 0);
      ++count_g[c];
    }
    for (int c : cell_h_) {
      if (c >= static_cast<int>(count_h.size())) count_h.resize(c + 1, 0);
      ++count_h[c];
    }
    count_g.resize(std::max(count_g.size(), count_h.size()), 0);
    count_h.resize(count_g.size(), 0);
    if (count_g != count_h) return std::nullopt;

    // Order: repeatedly take the smallest-index vertex with the most already
    // ordered neighbors, so adjacency constraints bite early.
    std::vector<bool> placed(n, false);
    std::vector<int> score(n, 0);
    for (int step = 0; step < n; ++step) {
      Vertex best = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best < 0 || score[v] > score[best]) best = v;
      }
      placed[best] = true;
      order_.push_back(best);
      for (Vertex w : g_.neighbors(best)) ++score[w];
    }
    map_.assign(n, kUnassigned);
    used_.assign(n, false);
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(size_t depth) {
    if (++nodes_ > budget_) throw BudgetExceeded("iso_oracle node budget exceeded");
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < h_.order(); ++w) {
      if (used_[w] || cell_h_[w] != cell_g_[v]) continue;
      bool ok = true;
      for (size_t i = 0; i < depth && ok; ++i) {
        const Vertex u = order_[i];
        ok = g_.adjacent(u, v) == h_.adjacent(map_[u], w);
      }
      if (!ok) continue;
      map_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
      map_[v] = kUnassigned;
    }
    return false;
  }

  const ColoredGraph& g_;
  const ColoredGraph& h_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<int> cell_g_, cell_h_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> iso_oracle(const ColoredGraph& g,
                                              const ColoredGraph& h,
                                              const IsoOptions& options) {
  if (g.colors().size() == h.colors().size() &&
      color_histogram(g) != color_histogram(h)) {
    return std::nullopt;
  }
  IsoSearch search(g, h, options.node_budget);
  return search.run();
}

bool is_isomorphism(const ColoredGraph& g, const ColoredGraph& h,
                    std::span<const Vertex> phi) {
  const int n = g.order();
  if (n != h.order() || static_cast<int>(phi.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (!h.valid_vertex(phi[v]) || hit[phi[v]]) return false;
    hit[phi[v]] = true;
    if (g.color(v) != h.color(phi[v])) return false;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) != h.adjacent(phi[u], phi[v])) return false;
    }
  }
  return true;
}

namespace {

// Branch and bound over vertex orders that list cells in increasing order.
// Code layout: colors in order, then bit (q, p) for p = 1..n-1, q < p.
class Canonizer {
 public:
  explicit Canonizer(const ColoredGraph& g) : g_(g), n_(g.order()) {
    cell_ = refine_cells(g, nullptr).first;
    std::vector<int> by_cell(n_);
    std::iota(by_cell.begin(), by_cell.end(), 0);
    std::stable_sort(by_cell.begin(), by_cell.end(),
                     [&](int a, int b) { return cell_[a] < cell_[b]; });
    for (int v : by_cell) slot_cell_.push_back(cell_[v]);
    order_.assign(n_, -1);
    used_.assign(n_, false);
    best_.clear();
  }

  std::vector<std::uint8_t> run() {
    current_.clear();
    search(0);
    std::vector<std::uint8_t> code;
    for (int p = 0; p < n_; ++p) {
      code.push_back(static_cast<std::uint8_t>(std::min(g_.color(best_order_[p]), 255)));
    }
    code.insert(code.end(), best_.begin(), best_.end());
    return code;
  }

  const std::vector<Vertex>& best_order() const { return best_order_; }

 private:
  void search(int p) {
    if (p == n_) {
      if (best_order_.empty() || current_ < best_) {
        best_ = current_;
        best_order_ = order_;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || cell_[v] != slot_cell_[p]) continue;
      const size_t mark = current_.size();
      for (int q = 0; q < p; ++q) {
        current_.push_back(g_.adjacent(order_[q], v) ? 1 : 0);
      }
      // Prune when the prefix is already worse than the best full code.
      bool prune = false;
      if (!best_order_.empty()) {
        const auto cmp = std::lexicographical_compare_three_way(
            current_.begin(), current_.end(), best_.begin(),
            best_.begin() + static_cast<std::ptrdiff_t>(current_.size()));
        prune = cmp > 0;
      }
      if (!prune) {
        used_[v] = true;
        order_[p] = v;
        search(p + 1);
        used_[v] = false;
        order_[p] = -1;
      }
      current_.resize(mark);
    }
  }

  const ColoredGraph& g_;
  int n_;
  std::vector<int> cell_;
  std::vector<int> slot_cell_;
  std::vector<Vertex> order_;
  std::vector<bool> used_;
  std::vector<std::uint8_t> current_;
  std::vector<std::uint8_t> best_;
  std::vector<Vertex> best_order_;
};

}  // namespace

std::vector<std::uint8_t> canonical_code(const ColoredGraph& g) {
  if (g.order() == 0) return {};
  Canonizer c(g);
  return c.run();
}

ColoredGraph canonical_form(const ColoredGraph& g) {
  if (g.order() == 0) return g;
  Canonizer c(g);
  c.run();
  const auto& order = c.best_order();
  std::vector<Vertex> perm(g.order());
  for (int p = 0; p < g.order(); ++p) perm[order[p]] = p;
  return permuted(g, perm);
}

std::vector<ColoredGraph> enumerate_graphs(int max_n, int num_colors) {
  require(max_n >= 1 && max_n <= 8, "enumerate_graphs supports 1..8 vertices");
  require(num_colors >= 1, "enumerate_graphs needs at least one color");
  std::vector<ColoredGraph> out;
  std::vector<ColoredGraph> layer;
  for (int c = 0; c < num_colors; ++c) {
    std::vector<ColorId> colors{c};
    layer.push_back(ColoredGraph::make(1, std::span<const Edge>{}, colors));
  }
  for (int n = 1; n <= max_n; ++n) {
    if (n > 1) {
      std::map<std::vector<std::uint8_t>, ColoredGraph> next;
      for (const auto& g : layer) {
        const auto base_edges = g.edges();
        for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
          std::vector<Edge> edges = base_edges;
          for (int v = 0; v < n - 1; ++v) {
            if (mask >> v & 1u) edges.emplace_back(v, n - 1);
          }
          for (int c = 0; c < num_colors; ++c) {
            std::vector<ColorId> colors = g.colors();
            colors.push_back(c);
            auto h = ColoredGraph::make(n, edges, colors);
            auto code = canonical_code(h);
            if (!next.contains(code)) next.emplace(std::move(code), canonical_form(h));
          }
        }
      }
      layer.clear();
      for (auto& [code, g] : next) layer.push_back(std::move(g));
    }
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace rqwl
