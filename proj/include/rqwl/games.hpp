#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "rqwl/graph.hpp"
#include "rqwl/wl.hpp"

namespace rqwl {

/// Partition of E(g) into classes: two edges share a class iff some path
/// joins them whose interior vertices avoid im(gamma). Returns, per edge of
/// g.edges(), a class id in [0, #classes), numbered by first occurrence.
std::vector<int> edge_components(const ColoredGraph& g, const PartialAssignment& gamma);

/// alpha(z) -> beta(z) is a well-defined, injective, color-, edge- and
/// non-edge-preserving map, and dom(alpha) = dom(beta).
bool partial_iso(const ColoredGraph& g, const PartialAssignment& alpha, const ColoredGraph& h,
                 const PartialAssignment& beta);

/// Perfect matching in a bipartite relation given as an n x n row-major
/// matrix. Returns match[v] = w or nullopt. Rows and columns are tried in
/// ascending order.
std::optional<std::vector<int>> perfect_matching(int n, const std::vector<std::uint8_t>& rel);

enum class BpWinner { kSpoiler, kDuplicator };
std::string to_string(BpWinner w);

/// Exact solver for the bijective (k1,k2)-pebble game on (G, H). All
/// configurations are solved at once; D_r is the set of configurations from
/// which Duplicator wins the r-round game. D_0 = partial isomorphisms and
/// D_r(c) = D_0(c) and (no liftable pebble, or |G| = |H| and for every liftable
/// pebble z the relation {(v,w) : D_{r-1}(alpha[z/v], beta[z/w])} has a
/// perfect matching).
class BpSolver {
 public:
  BpSolver(const ColoredGraph& g, const ColoredGraph& h, int k1, int k2,
           std::int64_t budget = 50'000'000);

  int k1() const { return k1_; }
  int k2() const { return k2_; }
  std::int64_t state(const PartialAssignment& alpha, const PartialAssignment& beta) const;
  std::int64_t state(std::int64_t a, std::int64_t b) const { return a * size_h_ + b; }
  const AssignmentIndexer& indexer_g() const { return ix_g_; }
  const AssignmentIndexer& indexer_h() const { return ix_h_; }

  /// Duplicator-win table for the r-round game (kUnbounded: unbounded game).
  const std::vector<std::uint8_t>& table(int rounds);
  bool duplicator_wins(const PartialAssignment& alpha, const PartialAssignment& beta,
                       int rounds);
  /// Smallest r with D_r = D_{r+1} (forces the fixpoint computation).
  int fixpoint_round();

  struct Move {
    int pebble = -1;            // variable picked up first
    std::vector<Vertex> bijection;  // Duplicator's answer (empty if Spoiler wins)
    std::string reason;
  };
  /// An optimal first round from (alpha, beta) in the r-round game.
  Move first_move(const PartialAssignment& alpha, const PartialAssignment& beta, int rounds);

 private:
  void extend();
  bool liftable_exists(std::int64_t a) const;

  const ColoredGraph& g_;
  const ColoredGraph& h_;
  int k1_;
  int k2_;
  AssignmentIndexer ix_g_;
  AssignmentIndexer ix_h_;
  std::int64_t size_g_;
  std::int64_t size_h_;
  std::vector<std::uint32_t> mask_g_;
  std::vector<std::uint32_t> mask_h_;
  std::deque<std::vector<std::uint8_t>> tables_;  // deque keeps references stable
  bool fixpoint_ = false;
};

BpWinner bp_solve(const ColoredGraph& g, const ColoredGraph& h, int k1, int k2, int rounds,
                  const PartialAssignment& alpha, const PartialAssignment& beta);
/// From the empty configuration.
BpWinner bp_solve(const ColoredGraph& g, const ColoredGraph& h, int k1, int k2,
                  int rounds = kUnbounded);

enum class CrWinner { kCops, kRobber };
std::string to_string(CrWinner w);

/// Exact solver for CR_(k1,k2) on a graph. Position (gamma, e) with the cops
/// to move. CW_0 = false and CW_r(gamma, e) holds iff some liftable cop z and
/// destination w exist such that every edge e' in the component of e w.r.t.
/// gamma[z/unassigned] is covered by im(gamma[z/w]) or satisfies
/// CW_{r-1}(gamma[z/w], e').
class CrSolver {
 public:
  CrSolver(const ColoredGraph& g, int k1, int k2, std::int64_t budget = 50'000'000);

  const std::vector<Edge>& edges() const { return edges_; }
  /// Cops-win table over (gamma index, edge index) for the r-round game.
  const std::vector<std::uint8_t>& table(int rounds);
  bool cops_win(const PartialAssignment& gamma, int edge, int rounds);
  /// Cops win from the empty placement against every initial robber edge.
  bool cops_win(int rounds);

  struct Move {
    int cop = -1;
    Vertex destination = kUnassigned;
  };
  /// A winning first move for the cops from the empty placement, if any.
  std::optional<Move> first_move(int rounds);

 private:
  void extend();

  const ColoredGraph& g_;
  int k1_;
  int k2_;
  AssignmentIndexer ix_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> components_;  // per gamma index: class per edge
  std::deque<std::vector<std::uint8_t>> tables_;  // deque keeps references stable
  bool fixpoint_ = false;
};

CrWinner cr_solve(const ColoredGraph& base, int k1, int k2, int rounds = kUnbounded);

}  // namespace rqwl
