#include "rqwl/cfi.hpp"

#include <algorithm>
#include <bit>

namespace rqwl {

BaseGraph validate_base(const ColoredGraph& g) {
  if (g.order() == 0) throw DomainError("base graph must be non-empty");
  auto colors = g.colors();
  std::sort(colors.begin(), colors.end());
  if (std::adjacent_find(colors.begin(), colors.end()) != colors.end()) {
    throw DomainError("base graph colors must be pairwise distinct");
  }
  if (connected_components(g) != 1) throw DomainError("base graph must be connected");
  BaseGraph b;
  b.graph_ = g;
  return b;
}

int edge_position(const ColoredGraph& g, Vertex v, Vertex w) {
  const auto& nb = g.neighbors(v);
  auto it = std::lower_bound(nb.begin(), nb.end(), w);
  if (it == nb.end() || *it != w) return -1;
  return static_cast<int>(it - nb.begin());
}

CfiGraph build_cfi(const BaseGraph& base, const std::vector<Edge>& twists) {
  const ColoredGraph& b = base.graph();
  CfiGraph out;
  out.base = b;
  for (auto [u, v] : twists) {
    if (!b.valid_vertex(u) || !b.valid_vertex(v) || u == v || !b.adjacent(u, v)) {
      throw DomainError("twist (" + std::to_string(u) + "," + std::to_string(v) +
                        ") is not a base edge");
    }
    out.twists.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.twists.begin(), out.twists.end());
  out.twists.erase(std::unique(out.twists.begin(), out.twists.end()), out.twists.end());

  // Gadgets: even-parity vectors in ascending numeric order.
  std::vector<std::vector<unsigned>> words(b.order());
  std::vector<ColorId> colors;
  for (Vertex v = 0; v < b.order(); ++v) {
    const int d = b.degree(v);
    if (d > 24) throw BudgetExceeded("CFI gadget too large");
    out.gadget_start.push_back(static_cast<Vertex>(out.tags.size()));
    for (unsigned a = 0; a < (1u << d); ++a) {
      if (std::popcount(a) % 2 != 0) continue;
      words[v].push_back(a);
      CfiTag tag;
      tag.base = v;
      for (int i = 0; i < d; ++i) tag.bits.push_back(static_cast<int>(a >> i & 1u));
      out.tags.push_back(std::move(tag));
      colors.push_back(b.color(v));
    }
  }
  out.gadget_start.push_back(static_cast<Vertex>(out.tags.size()));

  std::vector<Edge> edges;
  for (auto [u, v] : b.edges()) {
    const int i = edge_position(b, u, v);
    const int j = edge_position(b, v, u);
    const bool twisted = std::binary_search(out.twists.begin(), out.twists.end(), Edge{u, v});
    for (size_t p = 0; p < words[u].size(); ++p) {
      for (size_t q = 0; q < words[v].size(); ++q) {
        const bool same = (words[u][p] >> i & 1u) == (words[v][q] >> j & 1u);
        if (same != twisted) {
          edges.emplace_back(out.gadget_start[u] + static_cast<Vertex>(p),
                             out.gadget_start[v] + static_cast<Vertex>(q));
        }
      }
    }
  }
  out.graph = ColoredGraph::make(static_cast<int>(out.tags.size()), edges, colors);
  return out;
}

CfiGraph cfi_twisted(const BaseGraph& base) {
  const auto edges = base.graph().edges();
  if (edges.empty()) throw DomainError("cannot twist a base graph without edges");
  return build_cfi(base, {edges.front()});
}

}  // namespace rqwl
