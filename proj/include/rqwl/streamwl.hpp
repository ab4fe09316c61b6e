#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <span>
#include <cstdint>
#include <functional>
#include <vector>

#include "rqwl/graph.hpp"

namespace rqwl {

/// Lexicographic order of the sorted lists of two multisets A and B, decided
/// by a lexicographic scan: walk the distinct values of A in
/// increasing order, keeping only the current value and a few counters.
/// `cmp(side_p, p, side_q, q)` returns the sign of (element p of side_p)
/// minus (element q of side_q), side 0 = A, side 1 = B. Returns A <=> B.
template <class Cmp>
std::strong_ordering multiset_lex_compare(int len_a, int len_b, Cmp&& cmp) {
  int prev = -1;  // index in A of the previous distinct value
  int consumed = 0;
  while (true) {
    int cand = -1;
    for (int w = 0; w < len_a; ++w) {
      if (prev >= 0 && cmp(0, w, 0, prev) <= 0) continue;
      if (cand < 0 || cmp(0, w, 0, cand) < 0) cand = w;
    }
    if (cand < 0) break;
    int c = 0;
    for (int w = 0; w < len_a; ++w) c += cmp(0, w, 0, cand) == 0;
    int less = 0;
    int equal = 0;
    for (int w = 0; w < len_b; ++w) {
      const int s = cmp(1, w, 0, cand);
      less += s < 0;
      equal += s == 0;
    }
    if (less > consumed) return std::strong_ordering::greater;
    if (equal < c) {
      return len_b == consumed + equal ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
    }
    if (equal > c) {
      return consumed + c == len_a ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
    }
    consumed += c;
    prev = cand;
  }
  return len_b > consumed ? std::strong_ordering::less : std::strong_ordering::equal;
}

/// Abstract counters for the space-efficient equivalence test. Cells are
/// function-table cells; a cell holds O(1) numbers of O(log n) bits.
struct MemoryMeter {
  std::int64_t live_cells = 0;
  std::int64_t peak_cells = 0;
  int depth = 0;
  int peak_depth = 0;
  std::int64_t oracle_calls = 0;   // level-(r-1) tables requested by level r
  std::int64_t tables_built = 0;   // all function tables computed
  std::int64_t operations = 0;     // element comparisons (time proxy)

  void acquire(std::int64_t cells) {
    live_cells += cells;
    peak_cells = std::max(peak_cells, live_cells);
  }
  void release(std::int64_t cells) { live_cells -= cells; }
};

/// Fixed y-parts of a (0,k2)-configuration over two graphs drawn from a
/// graph list: side s uses graphs[graph[s]] and y-assignment eta[s]. Both
/// eta have the same domain.
struct EtaPair {
  int graph[2] = {0, 0};
  std::vector<Vertex> eta[2];
};

/// A function table over the domain of an EtaPair: the (n_s+1)^k1 x-parts of
/// side 0 followed by those of side 1. Acquires its cells from a meter.
class FunctionTable {
 public:
  FunctionTable(MemoryMeter& meter, std::int64_t size) : meter_(&meter), cells_(size, 0) {
    meter_->acquire(size);
  }
  FunctionTable(const FunctionTable&) = delete;
  FunctionTable& operator=(const FunctionTable&) = delete;
  FunctionTable(FunctionTable&& other) noexcept
      : meter_(other.meter_), cells_(std::move(other.cells_)) {
    other.meter_ = nullptr;
  }
  FunctionTable& operator=(FunctionTable&& other) noexcept {
    if (this != &other) {
      if (meter_) meter_->release(static_cast<std::int64_t>(cells_.size()));
      meter_ = other.meter_;
      cells_ = std::move(other.cells_);
      other.meter_ = nullptr;
    }
    return *this;
  }
  ~FunctionTable() {
    if (meter_) meter_->release(static_cast<std::int64_t>(cells_.size()));
  }

  std::int64_t size() const { return static_cast<std::int64_t>(cells_.size()); }
  int& operator[](std::int64_t i) { return cells_[i]; }
  int operator[](std::int64_t i) const { return cells_[i]; }
  const std::vector<int>& cells() const { return cells_; }

 private:
  MemoryMeter* meter_;
  std::vector<int> cells_;
};

enum class StreamMode {
  kFaithful,  // no caching across eta-pairs: space O((k2+1) n^k1) cells
  kFast,      // memoizes tables per (level, eta-pair); same verdicts
};

struct StreamOptions {
  StreamMode mode = StreamMode::kFaithful;
  /// Abort with BudgetExceeded after this many element comparisons (0 = no limit).
  std::int64_t max_operations = 0;
};

/// The space-efficient engine for a fixed pair of graphs (G, H).
class StreamEngine {
 public:
  StreamEngine(const ColoredGraph& g, const ColoredGraph& h, int k1, int k2,
               StreamOptions options = {});

  int k1() const { return k1_; }
  int k2() const { return k2_; }
  MemoryMeter& meter() { return meter_; }
  const ColoredGraph& graph(int i) const { return *graphs_[i]; }

  std::int64_t side_size(const EtaPair& p, int side) const;
  std::int64_t table_size(const EtaPair& p) const {
    return side_size(p, 0) + side_size(p, 1);
  }
  /// Cell of (side, x-part) in a table over p; x-part has k1 entries.
  std::int64_t cell(const EtaPair& p, int side, std::span<const Vertex> x) const;

  /// Normalized atomic types of the full assignments over p.
  FunctionTable atomic_table(const EtaPair& p);
  /// One owl-ref_(k1,0) step: out[a] = #{b : key(b) <= key(a)}.
  void ref_reusable_step(const EtaPair& p, const FunctionTable& in, FunctionTable& out);
  /// Iterates ref_reusable_step until the partition is stable, holding two
  /// tables. Returns the number of steps that changed the partition.
  int ref_reusable_fixpoint(const EtaPair& p, FunctionTable& table);

  /// Supplies a function table of the current coloring chi on a pair.
  using TableOracle = std::function<FunctionTable(const EtaPair&)>;
  /// owl-ref_(0,k2)(chi) on p, written to `work`. The oracle is asked for chi
  /// on p itself (once per row, reusing the returned table as the row state)
  /// and on pairs extending p by one y-value. At most one table besides
  /// `work` is live at this level.
  void ref_nonreusable(const EtaPair& p, const TableOracle& oracle, FunctionTable& work);

  /// chi_r on p: chi_0 = owl-ref_(k1,0)^inf(atp), chi_r =
  /// owl-ref_(k1,0)^inf(owl-ref_(0,k2)(chi_{r-1})).
  FunctionTable level_table(int level, const EtaPair& p);

  /// Decides (G, alpha) == (H, beta) under (k1,k2)-OWL at stability.
  bool equivalent(const PartialAssignment& alpha, const PartialAssignment& beta);

 private:
  void tick(std::int64_t ops);
  void full_assignment(const EtaPair& p, int side, std::int64_t x_index,
                       std::vector<Vertex>& out) const;

  const ColoredGraph* graphs_[2];
  int k1_;
  int k2_;
  StreamOptions options_;
  MemoryMeter meter_;
  std::map<std::vector<int>, std::vector<int>> cache_;  // fast mode: (level, pair) -> cells
};

struct StreamResult {
  bool equivalent = false;
  MemoryMeter meter;
};

/// Space-efficient decision of (G, alpha) == (H, beta) under C^(k1,k2).
/// Throws DomainError if dom(alpha) != dom(beta) or k1 = k2 = 0.
StreamResult stream_equivalent(const ColoredGraph& g, const PartialAssignment& alpha,
                               const ColoredGraph& h, const PartialAssignment& beta, int k1,
                               int k2, StreamOptions options = {});

}  // namespace rqwl
