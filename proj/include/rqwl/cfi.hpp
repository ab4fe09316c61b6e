#pragma once

#include <vector>

#include "rqwl/graph.hpp"

namespace rqwl {

/// A connected colored graph whose vertices carry pairwise distinct colors.
/// The color order induces the vertex order used by the CFI construction.
class BaseGraph {
 public:
  const ColoredGraph& graph() const { return graph_; }

 private:
  friend BaseGraph validate_base(const ColoredGraph& g);
  ColoredGraph graph_;
};

/// Throws DomainError when `g` is disconnected or has repeated colors.
BaseGraph validate_base(const ColoredGraph& g);

/// CFI vertex (v, a): base vertex v and a parity vector a indexed by the edges
/// at v in ascending neighbor order.
struct CfiTag {
  Vertex base = 0;
  std::vector<int> bits;
};

struct CfiGraph {
  ColoredGraph graph;
  ColoredGraph base;
  std::vector<CfiTag> tags;       // indexed by CFI vertex
  std::vector<Edge> twists;       // twisted base edges (u < v), sorted
  std::vector<Vertex> gadget_start;  // first CFI vertex of F(v); size |base|+1
};

/// X_S(B): gadget vertices are the even-parity bit vectors (one vertex for an
/// isolated base vertex). Vertices are numbered by (base vertex, bit vector
/// read as the binary number sum a_i 2^i). Throws DomainError when S contains
/// a non-edge of B.
CfiGraph build_cfi(const BaseGraph& base, const std::vector<Edge>& twists);

/// X(B) = X_{}(B).
inline CfiGraph cfi_untwisted(const BaseGraph& base) { return build_cfi(base, {}); }
/// X~(B): twists the lexicographically smallest base edge.
CfiGraph cfi_twisted(const BaseGraph& base);

/// Index of neighbor w in the ascending neighbor list of v, or -1.
int edge_position(const ColoredGraph& g, Vertex v, Vertex w);

}  // namespace rqwl
