#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rqwl {

using Vertex = int;
using ColorId = int;

/// Marker for an unassigned variable (written ⊥ in the literature).
inline constexpr Vertex kUnassigned = -1;

/// Invalid input to an operation (bad parameters, malformed graphs, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource limit (state space, search nodes, table size) was hit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple graph on vertices 0..n-1 with a total vertex coloring.
/// Color order is the integer order on ColorId. Immutable once built.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  /// Validates and builds. Duplicate edges (in either orientation) are merged.
  /// Throws DomainError on self-loops, out-of-range endpoints, wrong color count
  /// or negative colors.
  static ColoredGraph make(int n, std::span<const Edge> edges,
                           std::span<const ColorId> colors);
  /// Monochromatic (color 0) convenience overload.
  static ColoredGraph make(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  int edge_count() const { return edge_count_; }
  bool adjacent(Vertex u, Vertex v) const {
    return adjacency_[static_cast<size_t>(u) * n_ + v] != 0;
  }
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_[v]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors_[v].size()); }
  ColorId color(Vertex v) const { return colors_[v]; }
  const std::vector<ColorId>& colors() const { return colors_; }
  ColorId max_color() const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool valid_vertex(Vertex v) const { return v >= 0 && v < n_; }

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.n_ == b.n_ && a.colors_ == b.colors_ && a.adjacency_ == b.adjacency_;
  }

 private:
  int n_ = 0;
  int edge_count_ = 0;
  std::vector<ColorId> colors_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::uint8_t> adjacency_;
};

inline ColoredGraph make_graph(int n, std::span<const Edge> edges,
                               std::span<const ColorId> colors) {
  return ColoredGraph::make(n, edges, colors);
}

// ---------------------------------------------------------------------------
// Generators

enum class Family {
  kGrid,               // (h, l)
  kBridgedGrid,        // (h, l)
  kTreeOfGrids,        // (d, h, l)
  kPerfectBinaryTree,  // (d)
  kComplete,           // (n)
  kStar,               // (n): one center of degree n
  kPath,               // (n)
  kCycle,              // (n), n >= 3
};

/// Parses "grid", "bridged_grid", ... Throws DomainError on unknown names.
Family family_from_name(const std::string& name);
std::string family_name(Family family);

/// Builds a member of `family`. Monochromatic unless `base_coloring`, in which
/// case vertex i gets color i.
ColoredGraph gen_family(Family family, std::span<const int> params,
                        bool base_coloring = false);

ColoredGraph grid(int h, int l);
ColoredGraph bridged_grid(int h, int l);
ColoredGraph tree_of_grids(int d, int h, int l);
/// Levels 0..d, i.e. 2^(d+1)-1 nodes in heap order (children of i: 2i+1, 2i+2).
ColoredGraph perfect_binary_tree(int d);
ColoredGraph complete_graph(int n);
ColoredGraph star(int n);
ColoredGraph path_graph(int n);
ColoredGraph cycle_graph(int n);

/// Same graph, vertex i recolored to i.
ColoredGraph with_base_coloring(const ColoredGraph& g);
/// Vertices of `b` are shifted by |a|.
ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b);
/// Vertex v of `g` becomes perm[v].
ColoredGraph permuted(const ColoredGraph& g, std::span<const Vertex> perm);
/// Erdos-Renyi G(n, p) with colors drawn uniformly from [0, num_colors).
ColoredGraph random_graph(int n, double p, int num_colors, std::mt19937_64& rng);

/// Gives v_1..v_m fresh colors max+1, ..., max+m in list order.
ColoredGraph individualize(const ColoredGraph& g, std::span<const Vertex> vs);

// ---------------------------------------------------------------------------
// Invariants

struct DegreeProfiles {
  std::vector<int> degrees;                     // sorted
  std::vector<std::vector<int>> neighborhoods;  // inner sorted, outer sorted
  friend bool operator==(const DegreeProfiles&, const DegreeProfiles&) = default;
};

DegreeProfiles degree_profiles(const ColoredGraph& g);

/// Sorted (color, count) pairs.
std::vector<std::pair<ColorId, int>> color_histogram(const ColoredGraph& g);

/// Number of connected components (isolated vertices count).
int connected_components(const ColoredGraph& g);

// ---------------------------------------------------------------------------
// Assignments over [x_1..x_k1, y_1..y_k2]

/// Partial map from the variables x_1..x_k1, y_1..y_k2 to vertices.
/// Variables are indexed 0..k1-1 (x) followed by k1..k1+k2-1 (y).
class PartialAssignment {
 public:
  PartialAssignment() = default;
  PartialAssignment(int k1, int k2)
      : k1_(k1), k2_(k2), entries_(static_cast<size_t>(k1 + k2), kUnassigned) {}
  PartialAssignment(int k1, int k2, std::vector<Vertex> entries);

  int k1() const { return k1_; }
  int k2() const { return k2_; }
  int arity() const { return k1_ + k2_; }
  int x_index(int i) const { return i; }       // 0-based x_{i+1}
  int y_index(int j) const { return k1_ + j; }  // 0-based y_{j+1}
  bool is_x(int var) const { return var < k1_; }

  Vertex operator[](int var) const { return entries_[var]; }
  bool assigned(int var) const { return entries_[var] != kUnassigned; }
  const std::vector<Vertex>& entries() const { return entries_; }

  /// alpha[var / v]; v may be kUnassigned.
  PartialAssignment with(int var, Vertex v) const;
  void set(int var, Vertex v) { entries_[var] = v; }

  /// Bit i set iff variable i is assigned.
  std::uint32_t domain_mask() const;
  std::vector<Vertex> image() const;
  /// 0-based j with y_{j+1} unassigned.
  std::vector<int> unassigned_y() const;

  /// True iff every assigned entry is a vertex of g.
  bool valid_for(const ColoredGraph& g) const;

  friend bool operator==(const PartialAssignment&,
                         const PartialAssignment&) = default;

 private:
  int k1_ = 0;
  int k2_ = 0;
  std::vector<Vertex> entries_;
};

/// Human-readable variable name ("x1", "y2").
std::string variable_name(int var, int k1);

/// Mixed-radix indexing of (n+1)^k assignment tuples, unassigned = digit n.
class AssignmentIndexer {
 public:
  AssignmentIndexer(int n, int arity);

  int n() const { return n_; }
  int arity() const { return arity_; }
  std::int64_t size() const { return size_; }

  std::int64_t index(std::span<const Vertex> entries) const;
  std::int64_t index(const PartialAssignment& a) const { return index(a.entries()); }
  Vertex entry(std::int64_t index, int pos) const {
    const auto digit = static_cast<int>((index / pow_[pos]) % (n_ + 1));
    return digit == n_ ? kUnassigned : digit;
  }
  /// Index of the tuple with position `pos` replaced by v (v may be kUnassigned).
  std::int64_t with(std::int64_t index, int pos, Vertex v) const {
    const std::int64_t old_digit = (index / pow_[pos]) % (n_ + 1);
    const std::int64_t new_digit = v == kUnassigned ? n_ : v;
    return index + (new_digit - old_digit) * pow_[pos];
  }
  void decode(std::int64_t index, std::span<Vertex> out) const;
  PartialAssignment decode(std::int64_t index, int k1, int k2) const;

 private:
  int n_;
  int arity_;
  std::int64_t size_;
  std::vector<std::int64_t> pow_;
};

/// Canonical record of the unassigned pattern, the equalities, adjacencies and
/// colors realized by an assignment. Equal across graphs iff the pebbled
/// substructures are isomorphic respecting variable names.
struct AtomicType {
  std::vector<int> code;
  friend auto operator<=>(const AtomicType&, const AtomicType&) = default;
};

AtomicType atomic_type(const ColoredGraph& g, const PartialAssignment& a);

/// Allocation-free comparison of atomic types of two equal-arity tuples.
std::strong_ordering compare_atomic(const ColoredGraph& g,
                                    std::span<const Vertex> a,
                                    const ColoredGraph& h,
                                    std::span<const Vertex> b);

// ---------------------------------------------------------------------------
// Small-instance oracles

struct IsoOptions {
  std::int64_t node_budget = 50'000'000;
};

/// Backtracking isomorphism search, candidates pruned by color-refinement
/// classes; vertices are tried in ascending order. Returns phi with
/// phi[v] in V(h), or nullopt. Throws BudgetExceeded past the node budget.
std::optional<std::vector<Vertex>> iso_oracle(const ColoredGraph& g,
                                              const ColoredGraph& h,
                                              const IsoOptions& options = {});

/// Checks that phi is a color-, edge- and non-edge-preserving bijection.
bool is_isomorphism(const ColoredGraph& g, const ColoredGraph& h,
                    std::span<const Vertex> phi);

/// Lexicographically smallest (colors, upper-triangle adjacency) code over
/// all vertex orders compatible with a refined invariant partition. Two graphs
/// have equal codes iff they are isomorphic. Intended for n <= 8.
std::vector<std::uint8_t> canonical_code(const ColoredGraph& g);
ColoredGraph canonical_form(const ColoredGraph& g);

/// All pairwise non-isomorphic graphs with 1..max_n vertices and colors in
/// [0, num_colors), sorted by (order, canonical code).
std::vector<ColoredGraph> enumerate_graphs(int max_n, int num_colors = 1);

}  // namespace rqwl
