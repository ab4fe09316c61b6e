#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rqwl/graph.hpp"

namespace rqwl {

/// Round budget meaning "until stable".
inline constexpr int kUnbounded = -1;

struct RefineOptions {
  int rounds = kUnbounded;
  /// Maximum total number of colored tuples across all graphs.
  std::int64_t budget = 20'000'000;
  /// (graph, assignment index) pairs whose color is recorded every round.
  std::vector<std::pair<int, std::int64_t>> watch;
};

/// Joint refinement over a list of graphs with one shared normalization:
/// colors are dense integers whose order is the order of the nested colors.
struct RefinementResult {
  int arity = 0;
  bool with_bottom = false;  // domain includes the unassigned symbol
  std::vector<int> orders;   // graph orders
  /// colors[g][index] after the final round. Index is mixed radix over
  /// n+1 symbols (n = unassigned) when with_bottom, else over n symbols.
  std::vector<std::vector<int>> colors;
  /// Refinement rounds performed.
  int rounds = 0;
  /// True when the last round induced the same partition as the one before,
  /// i.e. the coloring is stable. `rounds - 1` is then the stabilization round.
  bool stable = false;
  /// class_counts[r][g]: distinct colors on graph g after round r;
  /// joint_class_counts[r]: distinct colors on the union.
  std::vector<std::vector<int>> class_counts;
  std::vector<int> joint_class_counts;
  /// watched[r][i]: color of options.watch[i] after round r.
  std::vector<std::vector<int>> watched;

  /// Minimal r such that rounds r and r+1 induce the same partition (only
  /// meaningful when stable).
  int stabilization_round() const { return stable ? rounds - 1 : rounds; }
};

/// Classical k-WL on k-tuples (k = 1 uses neighbor multisets).
RefinementResult wl_classic(const std::vector<const ColoredGraph*>& graphs, int k,
                            const RefineOptions& options = {});
/// Classical k-OWL on total k-tuples, one multiset per position.
RefinementResult owl_classic(const std::vector<const ColoredGraph*>& graphs, int k,
                             const RefineOptions& options = {});
/// (k1,k2)-OWL on all (n+1)^(k1+k2) partial assignments; assigned y-positions
/// are never varied.
RefinementResult owl_restricted(const std::vector<const ColoredGraph*>& graphs, int k1,
                                int k2, const RefineOptions& options = {});

RefinementResult wl_classic(const ColoredGraph& g, int k, const RefineOptions& options = {});
RefinementResult owl_classic(const ColoredGraph& g, int k, const RefineOptions& options = {});
RefinementResult owl_restricted(const ColoredGraph& g, const ColoredGraph* h, int k1, int k2,
                                const RefineOptions& options = {});

/// Index of a tuple in a RefinementResult domain of graph order n.
std::int64_t tuple_index(int n, bool with_bottom, std::span<const Vertex> tuple);

/// True iff the joint (k1,k2)-OWL run gives (G, alpha) and (H, beta) the same
/// color after `rounds` rounds (kUnbounded: stable). Throws DomainError when
/// dom(alpha) != dom(beta) or parameters are inconsistent.
bool equivalent_naive(const ColoredGraph& g, const PartialAssignment& alpha,
                      const ColoredGraph& h, const PartialAssignment& beta, int k1, int k2,
                      int rounds = kUnbounded, std::int64_t budget = 20'000'000);

/// Histogram criterion: some color has different class sizes on graphs a, b
/// (restricted to total tuples when the domain has the unassigned symbol).
bool histogram_distinguishes(const RefinementResult& r, int a, int b);

/// Configuration criterion for (k1,k2)-OWL: empty assignments differ.
bool empty_assignment_distinguishes(const RefinementResult& r, int a, int b);

/// (k2+1) n^k1 - 1.
std::int64_t iteration_bound(int n, int k1, int k2);

}  // namespace rqwl
