#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rqwl/graph.hpp"
#include "rqwl/wl.hpp"

namespace rqwl {

/// Tree-depth with an elimination-forest witness: parent[v] is the vertex
/// removed just before v's component was split off (-1 for roots). Replaying
/// the recursive definition along the forest reproduces `value`.
struct TdCertificate {
  int value = 0;
  std::vector<Vertex> parent;
};

/// Exact tree-depth, memoized over vertex subsets. Throws BudgetExceeded when
/// |G| > max_vertices.
TdCertificate tree_depth(const ColoredGraph& g, int max_vertices = 16);

/// Checks that the witness is an elimination forest of g whose depth is
/// cert.value, and that each root-choice is optimal per the recursive
/// definition (value = 1 + td(component - root) for every connected set).
bool verify_certificate(const ColoredGraph& g, const TdCertificate& cert);

/// G wr v: delete v and recolor w to 2*color(w) + [w adjacent to v]; this is
/// the lexicographic order of (old color, adjacency bit).
ColoredGraph shrink(const ColoredGraph& g, Vertex v);

struct IdentificationReport {
  int k1 = 0;
  int k2 = 0;
  int candidates = 0;
  std::int64_t pairs_checked = 0;
  std::int64_t equivalent_pairs = 0;  // pairs the logic fails to distinguish
  std::vector<std::pair<int, int>> conflicts;  // equivalent but non-isomorphic
};

/// Runs (k1,k2)-OWL jointly over all candidates and flags every pair with
/// equal empty-assignment colors that iso_oracle reports non-isomorphic.
IdentificationReport identifies_within(int k1, int k2,
                                       const std::vector<ColoredGraph>& candidates,
                                       std::int64_t budget = 50'000'000);

/// All pairwise non-isomorphic uncolored graphs on 1..max_n vertices with
/// tree-depth at most d, in canonical order.
std::vector<ColoredGraph> graphs_of_tree_depth_at_most(int d, int max_n);

}  // namespace rqwl
