#include "rqwl/streamwl.hpp"

#include <array>
#include <string>

namespace rqwl {

namespace {

int sign(int a, int b) { return (a > b) - (a < b); }

struct DepthGuard {
  explicit DepthGuard(MemoryMeter& m) : meter(m) {
    ++meter.depth;
    meter.peak_depth = std::max(meter.peak_depth, meter.depth);
  }
  ~DepthGuard() { --meter.depth; }
  MemoryMeter& meter;
};

std::int64_t power(std::int64_t base, int exp) {
  std::int64_t p = 1;
  for (int i = 0; i < exp; ++i) {
    if (p > (std::int64_t{1} << 40) / base) throw BudgetExceeded("function table too large");
    p *= base;
  }
  return p;
}

}  // namespace

StreamEngine::StreamEngine(const ColoredGraph& g, const ColoredGraph& h, int k1, int k2,
                           StreamOptions options)
    : graphs_{&g, &h}, k1_(k1), k2_(k2), options_(options) {
  if (k1 < 0 || k2 < 0 || k1 + k2 < 1) throw DomainError("(k1,k2) needs k1+k2 >= 1");
  power(std::max(g.order(), h.order()) + 1, k1);  // rejects oversized tables early
}

void StreamEngine::tick(std::int64_t ops) {
  meter_.operations += ops;
  if (options_.max_operations > 0 && meter_.operations > options_.max_operations) {
    throw BudgetExceeded("streaming engine exceeded " +
                         std::to_string(options_.max_operations) + " operations");
  }
}

std::int64_t StreamEngine::side_size(const EtaPair& p, int side) const {
  return power(graphs_[p.graph[side]]->order() + 1, k1_);
}

std::int64_t StreamEngine::cell(const EtaPair& p, int side, std::span<const Vertex> x) const {
  const int n = graphs_[p.graph[side]]->order();
  std::int64_t idx = 0;
  std::int64_t pw = 1;
  for (Vertex v : x) {
    idx += (v == kUnassigned ? n : v) * pw;
    pw *= n + 1;
  }
  return side == 0 ? idx : side_size(p, 0) + idx;
}

void StreamEngine::full_assignment(const EtaPair& p, int side, std::int64_t x_index,
                                   std::vector<Vertex>& out) const {
  const int n = graphs_[p.graph[side]]->order();
  out.resize(static_cast<size_t>(k1_ + k2_));
  for (int i = 0; i < k1_; ++i) {
    const auto d = static_cast<int>(x_index % (n + 1));
    out[i] = d == n ? kUnassigned : d;
    x_index /= n + 1;
  }
  for (int j = 0; j < k2_; ++j) out[k1_ + j] = p.eta[side][j];
}

FunctionTable StreamEngine::atomic_table(const EtaPair& p) {
  const std::int64_t s0 = side_size(p, 0);
  const std::int64_t t = s0 + side_size(p, 1);
  FunctionTable table(meter_, t);
  ++meter_.tables_built;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  for (std::int64_t i = 0; i < t; ++i) {
    const int si = i < s0 ? 0 : 1;
    full_assignment(p, si, si == 0 ? i : i - s0, a);
    int rank = 0;
    for (std::int64_t j = 0; j < t; ++j) {
      const int sj = j < s0 ? 0 : 1;
      full_assignment(p, sj, sj == 0 ? j : j - s0, b);
      rank += compare_atomic(*graphs_[p.graph[sj]], b, *graphs_[p.graph[si]], a) <= 0;
    }
    tick(t);
    table[i] = rank;
  }
  return table;
}

void StreamEngine::ref_reusable_step(const EtaPair& p, const FunctionTable& in,
                                     FunctionTable& out) {
  const std::int64_t s0 = side_size(p, 0);
  const std::int64_t t = in.size();
  const int n[2] = {graphs_[p.graph[0]]->order(), graphs_[p.graph[1]]->order()};
  std::int64_t pw[2] = {1, 1};
  // Cell of x-index `x` on `side` with x_i replaced by w.
  auto replaced = [&](int side, std::int64_t x, std::int64_t stride, Vertex w) {
    const std::int64_t digit = (x / stride) % (n[side] + 1);
    const std::int64_t local = x + (w - digit) * stride;
    return side == 0 ? local : s0 + local;
  };
  for (std::int64_t a = 0; a < t; ++a) {
    const int sa = a < s0 ? 0 : 1;
    const std::int64_t xa = sa == 0 ? a : a - s0;
    int rank = 0;
    for (std::int64_t b = 0; b < t; ++b) {
      const int sb = b < s0 ? 0 : 1;
      const std::int64_t xb = sb == 0 ? b : b - s0;
      int c = sign(in[b], in[a]);
      pw[0] = pw[1] = 1;
      for (int i = 0; i < k1_ && c == 0 && b != a; ++i) {
        // Compare M_i(b) (side A of the scan) against M_i(a) (side B).
        const auto ord = multiset_lex_compare(
            n[sb], n[sa], [&](int side_p, int wp, int side_q, int wq) {
              const std::int64_t cp = side_p == 0 ? replaced(sb, xb, pw[sb], wp)
                                                  : replaced(sa, xa, pw[sa], wp);
              const std::int64_t cq = side_q == 0 ? replaced(sb, xb, pw[sb], wq)
                                                  : replaced(sa, xa, pw[sa], wq);
              return sign(in[cp], in[cq]);
            });
        tick(static_cast<std::int64_t>(n[sa] + 1) * (n[sa] + n[sb]));
        c = ord < 0 ? -1 : (ord > 0 ? 1 : 0);
        pw[0] *= n[0] + 1;
        pw[1] *= n[1] + 1;
      }
      rank += c <= 0;
    }
    out[a] = rank;
  }
  ++meter_.tables_built;
}

namespace {

std::int64_t count_classes(const FunctionTable& table) {
  // Constant extra space: a cell opens a class iff no earlier cell shares its value.
  std::int64_t classes = 0;
  for (std::int64_t i = 0; i < table.size(); ++i) {
    bool fresh = true;
    for (std::int64_t j = 0; j < i && fresh; ++j) fresh = table[j] != table[i];
    classes += fresh;
  }
  return classes;
}

}  // namespace

int StreamEngine::ref_reusable_fixpoint(const EtaPair& p, FunctionTable& table) {
  if (k1_ == 0) return 0;  // the step is the identity
  std::int64_t classes = count_classes(table);
  tick(table.size() * table.size() / 2);
  int changed = 0;
  while (true) {
    FunctionTable next(meter_, table.size());
    ref_reusable_step(p, table, next);
    // The step refines its input, so equal class counts mean equal partitions.
    const std::int64_t next_classes = count_classes(next);
    tick(table.size() * table.size() / 2);
    table = std::move(next);
    if (next_classes == classes) return changed;
    classes = next_classes;
    ++changed;
  }
}

void StreamEngine::ref_nonreusable(const EtaPair& p, const TableOracle& oracle,
                                   FunctionTable& work) {
  const std::int64_t s0 = side_size(p, 0);
  const std::int64_t t = work.size();
  std::vector<int> free_y;
  for (int j = 0; j < k2_; ++j) {
    if (p.eta[0][j] == kUnassigned) free_y.push_back(j);
  }
  const int n[2] = {graphs_[p.graph[0]]->order(), graphs_[p.graph[1]]->order()};
  // Row-state cell encoding: kLess / kGreater once decided, otherwise
  // less * radix + equal for the counters of the current multiset scan.
  constexpr int kLess = -1;
  constexpr int kGreater = -2;
  const int radix = std::max(n[0], n[1]) + 1;

  auto side_of = [&](std::int64_t c) { return c < s0 ? 0 : 1; };
  auto x_of = [&](std::int64_t c) { return c < s0 ? c : c - s0; };

  for (std::int64_t a = 0; a < t; ++a) {
    const int sa = side_of(a);
    const std::int64_t xa = x_of(a);
    ++meter_.oracle_calls;
    FunctionTable state = oracle(p);
    const int own_color = state[a];
    int others_equal = 0;
    for (std::int64_t b = 0; b < t; ++b) {
      const int s = sign(state[b], own_color);
      state[b] = s < 0 ? kLess : (s > 0 ? kGreater : 0);
      others_equal += b != a && s == 0;
    }
    tick(t);
    for (size_t jj = 0; jj < free_y.size() && others_equal > 0; ++jj) {
      const int j = free_y[jj];
      // Oracle comparison of chi(a[y_j/w1]) against chi(a[y_j/w2]).
      auto compare_own = [&](Vertex w1, Vertex w2) {
        if (w1 == w2) return 0;
        EtaPair q;
        q.graph[0] = q.graph[1] = p.graph[sa];
        q.eta[0] = q.eta[1] = p.eta[sa];
        q.eta[0][j] = w1;
        q.eta[1][j] = w2;
        ++meter_.oracle_calls;
        const FunctionTable tq = oracle(q);
        return sign(tq[xa], tq[side_size(q, 0) + xa]);
      };
      int consumed = 0;
      Vertex prev = kUnassigned;
      while (others_equal > 0) {
        // Next distinct value of M_j(a), represented by a[y_j/cand].
        Vertex cand = kUnassigned;
        for (Vertex w = 0; w < n[sa]; ++w) {
          if (prev != kUnassigned && compare_own(w, prev) <= 0) continue;
          if (cand == kUnassigned || compare_own(w, cand) < 0) cand = w;
        }
        if (cand == kUnassigned) {
          // M_j(a) is exhausted: a longer list is greater.
          for (std::int64_t b = 0; b < t; ++b) {
            if (b == a || state[b] < 0) continue;
            if (n[side_of(b)] > consumed) {
              state[b] = kGreater;
              --others_equal;
            }
          }
          break;
        }
        int c = 0;
        for (Vertex w = 0; w < n[sa]; ++w) c += compare_own(w, cand) == 0;
        for (std::int64_t b = 0; b < t; ++b) {
          if (state[b] >= 0) state[b] = 0;
        }
        for (int sb = 0; sb < 2; ++sb) {
          const std::int64_t lo = sb == 0 ? 0 : s0;
          const std::int64_t hi = sb == 0 ? s0 : t;
          bool needed = false;
          for (std::int64_t b = lo; b < hi && !needed; ++b) needed = b != a && state[b] >= 0;
          if (!needed) continue;
          for (Vertex w = 0; w < n[sb]; ++w) {
            EtaPair q;
            q.graph[0] = p.graph[sa];
            q.graph[1] = p.graph[sb];
            q.eta[0] = p.eta[sa];
            q.eta[1] = p.eta[sb];
            q.eta[0][j] = cand;
            q.eta[1][j] = w;
            ++meter_.oracle_calls;
            const FunctionTable tq = oracle(q);
            const std::int64_t q0 = side_size(q, 0);
            const int own = tq[xa];
            for (std::int64_t b = lo; b < hi; ++b) {
              if (b == a || state[b] < 0) continue;
              const int s = sign(tq[q0 + x_of(b)], own);
              state[b] += s < 0 ? radix : (s == 0 ? 1 : 0);
            }
            tick(t);
          }
        }
        for (std::int64_t b = 0; b < t; ++b) {
          if (b == a || state[b] < 0) continue;
          const int less = state[b] / radix;
          const int equal = state[b] % radix;
          int status = 0;
          if (less > consumed) {
            status = kLess;
          } else if (equal < c) {
            status = n[side_of(b)] == consumed + equal ? kLess : kGreater;
          } else if (equal > c) {
            status = consumed + c == n[sa] ? kGreater : kLess;
          }
          if (status != 0) {
            state[b] = status;
            --others_equal;
          }
        }
        consumed += c;
        prev = cand;
      }
    }
    int rank = 0;
    for (std::int64_t b = 0; b < t; ++b) rank += state[b] != kGreater;
    work[a] = rank;
  }
  ++meter_.tables_built;
}

FunctionTable StreamEngine::level_table(int level, const EtaPair& p) {
  DepthGuard guard(meter_);
  std::vector<int> key;
  if (options_.mode == StreamMode::kFast) {
    key.push_back(level);
    key.push_back(p.graph[0]);
    key.push_back(p.graph[1]);
    key.insert(key.end(), p.eta[0].begin(), p.eta[0].end());
    key.insert(key.end(), p.eta[1].begin(), p.eta[1].end());
    if (auto it = cache_.find(key); it != cache_.end()) {
      FunctionTable copy(meter_, static_cast<std::int64_t>(it->second.size()));
      for (std::int64_t i = 0; i < copy.size(); ++i) copy[i] = it->second[i];
      return copy;
    }
  }
  FunctionTable result = [&] {
    if (level == 0) {
      FunctionTable table = atomic_table(p);
      ref_reusable_fixpoint(p, table);
      return table;
    }
    FunctionTable work(meter_, table_size(p));
    ref_nonreusable(p, [&](const EtaPair& q) { return level_table(level - 1, q); }, work);
    ref_reusable_fixpoint(p, work);
    return work;
  }();
  if (options_.mode == StreamMode::kFast) {
    meter_.acquire(result.size());  // the cache keeps a copy for the engine's lifetime
    cache_.emplace(std::move(key), result.cells());
  }
  return result;
}

bool StreamEngine::equivalent(const PartialAssignment& alpha, const PartialAssignment& beta) {
  if (alpha.k1() != k1_ || alpha.k2() != k2_ || beta.k1() != k1_ || beta.k2() != k2_) {
    throw DomainError("configuration does not match (k1,k2)");
  }
  if (alpha.domain_mask() != beta.domain_mask()) throw DomainError("configuration domains differ");
  if (!alpha.valid_for(*graphs_[0]) || !beta.valid_for(*graphs_[1])) {
    throw DomainError("configuration entries out of range");
  }
  EtaPair p;
  p.graph[0] = 0;
  p.graph[1] = 1;
  const auto& ea = alpha.entries();
  const auto& eb = beta.entries();
  p.eta[0].assign(ea.begin() + k1_, ea.end());
  p.eta[1].assign(eb.begin() + k1_, eb.end());
  const int m = static_cast<int>(alpha.unassigned_y().size());
  const FunctionTable table = level_table(m, p);
  return table[cell(p, 0, std::span(ea.data(), k1_))] ==
         table[cell(p, 1, std::span(eb.data(), k1_))];
}

StreamResult stream_equivalent(const ColoredGraph& g, const PartialAssignment& alpha,
                               const ColoredGraph& h, const PartialAssignment& beta, int k1,
                               int k2, StreamOptions options) {
  StreamEngine engine(g, h, k1, k2, options);
  StreamResult result;
  result.equivalent = engine.equivalent(alpha, beta);
  result.meter = engine.meter();
  return result;
}

}  // namespace rqwl
