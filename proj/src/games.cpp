#include "rqwl/games.hpp"

#include <algorithm>
#include <numeric>

namespace rqwl {

std::vector<int> edge_components(const ColoredGraph& g, const PartialAssignment& gamma) {
  const auto edges = g.edges();
  std::vector<int> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int e) {
    while (parent[e] != e) {
      parent[e] = parent[parent[e]];
      e = parent[e];
    }
    return e;
  };
  std::vector<bool> occupied(g.order(), false);
  for (Vertex v : gamma.entries()) {
    if (v != kUnassigned) occupied.at(v) = true;
  }
  // Edges incident to an unoccupied vertex are joined through it.
  std::vector<int> first_edge_at(g.order(), -1);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    for (Vertex v : {edges[e].first, edges[e].second}) {
      if (occupied[v]) continue;
      if (first_edge_at[v] < 0) {
        first_edge_at[v] = e;
      } else {
        parent[find(e)] = find(first_edge_at[v]);
      }
    }
  }
  std::vector<int> label(edges.size(), -1);
  std::vector<int> out(edges.size());
  int next = 0;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const int root = find(e);
    if (label[root] < 0) label[root] = next++;
    out[e] = label[root];
  }
  return out;
}

bool partial_iso(const ColoredGraph& g, const PartialAssignment& alpha, const ColoredGraph& h,
                 const PartialAssignment& beta) {
  if (alpha.arity() != beta.arity()) return false;
  if (alpha.domain_mask() != beta.domain_mask()) return false;
  if (!alpha.valid_for(g) || !beta.valid_for(h)) return false;
  return compare_atomic(g, alpha.entries(), h, beta.entries()) == 0;
}

std::optional<std::vector<int>> perfect_matching(int n, const std::vector<std::uint8_t>& rel) {
  std::vector<int> match_col(n, -1);  // column -> row
  std::vector<std::uint8_t> seen(n);
  // Kuhn's augmenting paths; n is tiny, so recursion depth is harmless.
  auto augment = [&](auto&& self, int v) -> bool {
    for (int w = 0; w < n; ++w) {
      if (!rel[static_cast<size_t>(v) * n + w] || seen[w]) continue;
      seen[w] = 1;
      if (match_col[w] < 0 || self(self, match_col[w])) {
        match_col[w] = v;
        return true;
      }
    }
    return false;
  };
  for (int v = 0; v < n; ++v) {
    std::fill(seen.begin(), seen.end(), 0);
    if (!augment(augment, v)) return std::nullopt;
  }
  std::vector<int> match_row(n, -1);
  for (int w = 0; w < n; ++w) match_row[match_col[w]] = w;
  return match_row;
}

std::string to_string(BpWinner w) { return w == BpWinner::kSpoiler ? "Spoiler" : "Duplicator"; }
std::string to_string(CrWinner w) { return w == CrWinner::kCops ? "Cops" : "Robber"; }

// ---------------------------------------------------------------------------
// Bijective pebble game

BpSolver::BpSolver(const ColoredGraph& g, const ColoredGraph& h, int k1, int k2,
                   std::int64_t budget)
    : g_(g), h_(h), k1_(k1), k2_(k2), ix_g_(g.order(), k1 + k2), ix_h_(h.order(), k1 + k2) {
  if (k1 < 0 || k2 < 0 || k1 + k2 < 1) throw DomainError("the pebble game needs k1+k2 >= 1");
  size_g_ = ix_g_.size();
  size_h_ = ix_h_.size();
  if (size_g_ * size_h_ > budget) {
    throw BudgetExceeded("pebble game state space " + std::to_string(size_g_ * size_h_) +
                         " exceeds budget " + std::to_string(budget));
  }
  auto masks = [&](const AssignmentIndexer& ix, std::vector<std::uint32_t>& out) {
    out.resize(ix.size());
    for (std::int64_t i = 0; i < ix.size(); ++i) {
      std::uint32_t m = 0;
      for (int p = 0; p < k1 + k2; ++p) {
        if (ix.entry(i, p) != kUnassigned) m |= 1u << p;
      }
      out[i] = m;
    }
  };
  masks(ix_g_, mask_g_);
  masks(ix_h_, mask_h_);

  // D_0: partial isomorphisms.
  std::vector<std::uint8_t> d0(size_g_ * size_h_, 0);
  std::vector<Vertex> ta(k1 + k2), tb(k1 + k2);
  for (std::int64_t a = 0; a < size_g_; ++a) {
    ix_g_.decode(a, ta);
    for (std::int64_t b = 0; b < size_h_; ++b) {
      if (mask_g_[a] != mask_h_[b]) continue;
      ix_h_.decode(b, tb);
      d0[state(a, b)] = compare_atomic(g_, ta, h_, tb) == 0;
    }
  }
  tables_.push_back(std::move(d0));
}

std::int64_t BpSolver::state(const PartialAssignment& alpha, const PartialAssignment& beta) const {
  if (alpha.k1() != k1_ || alpha.k2() != k2_ || beta.k1() != k1_ || beta.k2() != k2_) {
    throw DomainError("configuration does not match (k1,k2)");
  }
  if (alpha.domain_mask() != beta.domain_mask()) throw DomainError("configuration domains differ");
  if (!alpha.valid_for(g_) || !beta.valid_for(h_)) throw DomainError("configuration out of range");
  return state(ix_g_.index(alpha), ix_h_.index(beta));
}

bool BpSolver::liftable_exists(std::int64_t a) const {
  if (k1_ > 0) return true;
  return mask_g_[a] != (1u << (k1_ + k2_)) - 1;
}

void BpSolver::extend() {
  const auto& prev = tables_.back();
  std::vector<std::uint8_t> next(prev.size(), 0);
  const int n = g_.order();
  const bool same_order = g_.order() == h_.order();
  std::vector<std::uint8_t> rel(static_cast<size_t>(n) * n);
  for (std::int64_t a = 0; a < size_g_; ++a) {
    for (std::int64_t b = 0; b < size_h_; ++b) {
      const std::int64_t s = state(a, b);
      if (!prev[s]) continue;  // D_r is contained in D_{r-1}
      if (!liftable_exists(a)) {
        next[s] = 1;
        continue;
      }
      if (!same_order) continue;
      bool ok = true;
      for (int z = 0; z < k1_ + k2_ && ok; ++z) {
        if (z >= k1_ && (mask_g_[a] >> z & 1u)) continue;
        bool rows_ok = true;
        for (Vertex v = 0; v < n && rows_ok; ++v) {
          const std::int64_t av = ix_g_.with(a, z, v);
          bool any = false;
          for (Vertex w = 0; w < n; ++w) {
            const std::uint8_t bit = prev[state(av, ix_h_.with(b, z, w))];
            rel[static_cast<size_t>(v) * n + w] = bit;
            any = any || bit;
          }
          rows_ok = any;
        }
        ok = rows_ok && perfect_matching(n, rel).has_value();
      }
      next[s] = ok;
    }
  }
  if (next == prev) fixpoint_ = true;
  tables_.push_back(std::move(next));
}

const std::vector<std::uint8_t>& BpSolver::table(int rounds) {
  if (rounds == kUnbounded) {
    while (!fixpoint_) extend();
    return tables_.back();
  }
  if (rounds < 0) throw DomainError("round budget must be non-negative");
  while (static_cast<int>(tables_.size()) <= rounds && !fixpoint_) extend();
  return tables_[std::min<size_t>(rounds, tables_.size() - 1)];
}

bool BpSolver::duplicator_wins(const PartialAssignment& alpha, const PartialAssignment& beta,
                               int rounds) {
  const std::int64_t s = state(alpha, beta);
  return table(rounds)[s] != 0;
}

int BpSolver::fixpoint_round() {
  table(kUnbounded);
  return static_cast<int>(tables_.size()) - 2;
}

BpSolver::Move BpSolver::first_move(const PartialAssignment& alpha,
                                    const PartialAssignment& beta, int rounds) {
  Move move;
  const std::int64_t s = state(alpha, beta);
  if (!table(0)[s]) {
    move.reason = "initial configuration is not a partial isomorphism";
    return move;
  }
  if (rounds == 0) {
    move.reason = "no rounds to play";
    return move;
  }
  const std::int64_t a = ix_g_.index(alpha);
  const std::int64_t b = ix_h_.index(beta);
  if (!liftable_exists(a)) {
    move.reason = "no pebble can be picked up";
    return move;
  }
  if (g_.order() != h_.order()) {
    move.pebble = 0;
    move.reason = "graphs differ in order, no bijection exists";
    return move;
  }
  const auto& prev = rounds == kUnbounded ? table(kUnbounded) : table(rounds - 1);
  const int n = g_.order();
  std::vector<std::uint8_t> rel(static_cast<size_t>(n) * n);
  std::optional<std::vector<int>> first_bijection;
  int first_z = -1;
  for (int z = 0; z < k1_ + k2_; ++z) {
    if (z >= k1_ && (mask_g_[a] >> z & 1u)) continue;
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w = 0; w < n; ++w) {
        rel[static_cast<size_t>(v) * n + w] =
            prev[state(ix_g_.with(a, z, v), ix_h_.with(b, z, w))];
      }
    }
    auto m = perfect_matching(n, rel);
    if (!m) {
      move.pebble = z;
      move.reason = "Duplicator has no safe bijection for this pebble";
      return move;
    }
    if (first_z < 0) {
      first_z = z;
      first_bijection = std::move(m);
    }
  }
  move.pebble = first_z;
  move.bijection.assign(first_bijection->begin(), first_bijection->end());
  move.reason = "safe bijection for the first liftable pebble";
  return move;
}

BpWinner bp_solve(const ColoredGraph& g, const ColoredGraph& h, int k1, int k2, int rounds,
                  const PartialAssignment& alpha, const PartialAssignment& beta) {
  BpSolver solver(g, h, k1, k2);
  return solver.duplicator_wins(alpha, beta, rounds) ? BpWinner::kDuplicator
                                                     : BpWinner::kSpoiler;
}

BpWinner bp_solve(const ColoredGraph& g, const ColoredGraph& h, int k1, int k2, int rounds) {
  return bp_solve(g, h, k1, k2, rounds, PartialAssignment(k1, k2), PartialAssignment(k1, k2));
}

// ---------------------------------------------------------------------------
// Cops and robber

CrSolver::CrSolver(const ColoredGraph& g, int k1, int k2, std::int64_t budget)
    : g_(g), k1_(k1), k2_(k2), ix_(g.order(), k1 + k2), edges_(g.edges()) {
  if (k1 < 0 || k2 < 0 || k1 + k2 < 1) throw DomainError("the cops need k1+k2 >= 1");
  if (edges_.empty()) throw DomainError("cops and robber needs at least one edge");
  if (ix_.size() * static_cast<std::int64_t>(edges_.size()) > budget) {
    throw BudgetExceeded("cops-and-robber state space exceeds budget");
  }
  components_.resize(ix_.size());
  for (std::int64_t i = 0; i < ix_.size(); ++i) {
    components_[i] = edge_components(g_, ix_.decode(i, k1, k2));
  }
  tables_.emplace_back(ix_.size() * edges_.size(), 0);
}

void CrSolver::extend() {
  const auto& prev = tables_.back();
  const std::int64_t m = static_cast<std::int64_t>(edges_.size());
  std::vector<std::uint8_t> next(prev.size(), 0);
  std::vector<Vertex> tuple(k1_ + k2_);
  for (std::int64_t gi = 0; gi < ix_.size(); ++gi) {
    ix_.decode(gi, tuple);
    for (std::int64_t e = 0; e < m; ++e) {
      if (prev[gi * m + e]) {
        next[gi * m + e] = 1;  // CW_{r-1} implies CW_r
        continue;
      }
      bool win = false;
      for (int z = 0; z < k1_ + k2_ && !win; ++z) {
        if (z >= k1_ && tuple[z] != kUnassigned) continue;
        const std::int64_t lifted = ix_.with(gi, z, kUnassigned);
        const auto& comp = components_[lifted];
        for (Vertex w = 0; w < g_.order() && !win; ++w) {
          const std::int64_t landed = ix_.with(gi, z, w);
          std::vector<bool> covered(g_.order(), false);
          for (int p = 0; p < k1_ + k2_; ++p) {
            const Vertex u = ix_.entry(landed, p);
            if (u != kUnassigned) covered[u] = true;
          }
          bool all = true;
          for (std::int64_t f = 0; f < m && all; ++f) {
            if (comp[f] != comp[e]) continue;
            const bool caught = covered[edges_[f].first] && covered[edges_[f].second];
            all = caught || prev[landed * m + f];
          }
          win = all;
        }
      }
      next[gi * m + e] = win;
    }
  }
  if (next == prev) fixpoint_ = true;
  tables_.push_back(std::move(next));
}

const std::vector<std::uint8_t>& CrSolver::table(int rounds) {
  if (rounds == kUnbounded) {
    while (!fixpoint_) extend();
    return tables_.back();
  }
  if (rounds < 0) throw DomainError("round budget must be non-negative");
  while (static_cast<int>(tables_.size()) <= rounds && !fixpoint_) extend();
  return tables_[std::min<size_t>(rounds, tables_.size() - 1)];
}

bool CrSolver::cops_win(const PartialAssignment& gamma, int edge, int rounds) {
  if (gamma.k1() != k1_ || gamma.k2() != k2_ || !gamma.valid_for(g_)) {
    throw DomainError("cop placement does not match the game");
  }
  if (edge < 0 || edge >= static_cast<int>(edges_.size())) throw DomainError("bad robber edge");
  return table(rounds)[ix_.index(gamma) * static_cast<std::int64_t>(edges_.size()) + edge] != 0;
}

bool CrSolver::cops_win(int rounds) {
  const auto& t = table(rounds);
  const std::int64_t empty = ix_.index(PartialAssignment(k1_, k2_));
  const std::int64_t m = static_cast<std::int64_t>(edges_.size());
  for (std::int64_t e = 0; e < m; ++e) {
    if (!t[empty * m + e]) return false;
  }
  return true;
}

std::optional<CrSolver::Move> CrSolver::first_move(int rounds) {
  if (rounds == 0 || !cops_win(rounds)) return std::nullopt;
  const auto& prev = rounds == kUnbounded ? table(kUnbounded) : table(rounds - 1);
  const std::int64_t m = static_cast<std::int64_t>(edges_.size());
  const std::int64_t empty = ix_.index(PartialAssignment(k1_, k2_));
  for (int z = 0; z < k1_ + k2_; ++z) {
    for (Vertex w = 0; w < g_.order(); ++w) {
      const std::int64_t landed = ix_.with(empty, z, w);
      bool all = true;
      for (std::int64_t f = 0; f < m && all; ++f) all = prev[landed * m + f] != 0;
      if (all) return Move{z, w};
    }
  }
  return std::nullopt;
}

CrWinner cr_solve(const ColoredGraph& base, int k1, int k2, int rounds) {
  CrSolver solver(base, k1, k2);
  return solver.cops_win(rounds) ? CrWinner::kCops : CrWinner::kRobber;
}

}  // namespace rqwl
