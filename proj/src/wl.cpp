#include "rqwl/wl.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rqwl {

namespace {

enum class Scheme { kWl, kOwl, kRestricted };

// Mixed-radix tuple domain for one graph.
struct Domain {
  int n = 0;
  int base = 0;  // n+1 with the unassigned symbol, else n
  int arity = 0;
  std::int64_t size = 1;
  std::vector<std::int64_t> pow;

  Domain(int n_, bool bottom, int arity_) : n(n_), base(bottom ? n_ + 1 : n_), arity(arity_) {
    pow.assign(arity + 1, 1);
    for (int i = 0; i < arity; ++i) {
      if (base > 0 && size > (std::int64_t{1} << 40) / base) {
        throw BudgetExceeded("tuple domain too large");
      }
      size *= base;
      pow[i + 1] = size;
    }
  }
  Vertex entry(std::int64_t idx, int pos) const {
    const auto d = static_cast<int>((idx / pow[pos]) % base);
    return d == n ? kUnassigned : d;
  }
  std::int64_t with(std::int64_t idx, int pos, Vertex v) const {
    const std::int64_t old_digit = (idx / pow[pos]) % base;
    const std::int64_t new_digit = v == kUnassigned ? n : v;
    return idx + (new_digit - old_digit) * pow[pos];
  }
};

class Engine {
 public:
  Engine(const std::vector<const ColoredGraph*>& graphs, Scheme scheme, int k1, int k2,
         const RefineOptions& options)
      : graphs_(graphs), scheme_(scheme), k1_(k1), k2_(k2), options_(options) {
    const bool bottom = scheme == Scheme::kRestricted;
    std::int64_t total = 0;
    for (const ColoredGraph* g : graphs_) {
      domains_.emplace_back(g->order(), bottom, k1 + k2);
      total += domains_.back().size;
      if (total > options.budget) {
        throw BudgetExceeded("refinement domain of " + std::to_string(total) +
                             "+ tuples exceeds budget " + std::to_string(options.budget));
      }
    }
    result_.arity = k1 + k2;
    result_.with_bottom = bottom;
    for (const ColoredGraph* g : graphs_) result_.orders.push_back(g->order());
  }

  RefinementResult run() {
    initial_colors();
    record();
    int prev_classes = result_.joint_class_counts.back();
    while (options_.rounds == kUnbounded || result_.rounds < options_.rounds) {
      refine_once();
      ++result_.rounds;
      record();
      const int classes = result_.joint_class_counts.back();
      if (classes == prev_classes) {
        result_.stable = true;
        break;
      }
      prev_classes = classes;
    }
    result_.colors = std::move(colors_);
    return std::move(result_);
  }

 private:
  void initial_colors() {
    std::vector<std::pair<std::vector<int>, std::pair<int, std::int64_t>>> keyed;
    std::vector<Vertex> tuple(k1_ + k2_);
    for (size_t g = 0; g < graphs_.size(); ++g) {
      const Domain& d = domains_[g];
      for (std::int64_t i = 0; i < d.size; ++i) {
        for (int p = 0; p < d.arity; ++p) tuple[p] = d.entry(i, p);
        PartialAssignment a(k1_ + k2_, 0, tuple);
        keyed.push_back({atomic_type(*graphs_[g], a).code, {static_cast<int>(g), i}});
      }
    }
    std::sort(keyed.begin(), keyed.end());
    colors_.assign(graphs_.size(), {});
    for (size_t g = 0; g < graphs_.size(); ++g) colors_[g].assign(domains_[g].size, 0);
    int next = -1;
    for (size_t i = 0; i < keyed.size(); ++i) {
      if (i == 0 || keyed[i].first != keyed[i - 1].first) ++next;
      colors_[keyed[i].second.first][keyed[i].second.second] = next;
    }
  }

  void signature(int g, std::int64_t idx, std::vector<int>& out,
                 std::vector<int>& scratch) const {
    const ColoredGraph& gr = *graphs_[g];
    const Domain& d = domains_[g];
    const auto& c = colors_[g];
    const int n = gr.order();
    out.push_back(c[idx]);
    if (scheme_ == Scheme::kWl) {
      const int k = k1_;
      if (k == 1) {
        const Vertex v = d.entry(idx, 0);
        scratch.clear();
        for (Vertex u : gr.neighbors(v)) scratch.push_back(c[u]);
        std::sort(scratch.begin(), scratch.end());
        out.push_back(static_cast<int>(scratch.size()));
        out.insert(out.end(), scratch.begin(), scratch.end());
        return;
      }
      // Multiset over u of the k-tuple (c(a[x_i/u]))_i, flattened after
      // sorting the tuples lexicographically.
      std::vector<std::vector<int>> tuples(n, std::vector<int>(k));
      for (Vertex u = 0; u < n; ++u) {
        for (int i = 0; i < k; ++i) tuples[u][i] = c[d.with(idx, i, u)];
      }
      std::sort(tuples.begin(), tuples.end());
      out.push_back(n);
      for (const auto& t : tuples) out.insert(out.end(), t.begin(), t.end());
      return;
    }
    for (int p = 0; p < d.arity; ++p) {
      const bool varied = scheme_ == Scheme::kOwl || p < k1_ || d.entry(idx, p) == kUnassigned;
      if (!varied) {
        out.push_back(-1);
        continue;
      }
      scratch.clear();
      for (Vertex w = 0; w < n; ++w) scratch.push_back(c[d.with(idx, p, w)]);
      std::sort(scratch.begin(), scratch.end());
      out.push_back(n);
      out.insert(out.end(), scratch.begin(), scratch.end());
    }
  }

  void refine_once() {
    std::vector<int> buf;
    std::vector<std::int64_t> offsets{0};
    std::vector<std::pair<int, std::int64_t>> ids;
    std::vector<int> scratch;
    for (size_t g = 0; g < graphs_.size(); ++g) {
      for (std::int64_t i = 0; i < domains_[g].size; ++i) {
        signature(static_cast<int>(g), i, buf, scratch);
        offsets.push_back(static_cast<std::int64_t>(buf.size()));
        ids.emplace_back(static_cast<int>(g), i);
      }
    }
    std::vector<std::int64_t> order(ids.size());
    std::iota(order.begin(), order.end(), 0);
    auto key_less = [&](std::int64_t a, std::int64_t b) {
      return std::lexicographical_compare(buf.begin() + offsets[a], buf.begin() + offsets[a + 1],
                                          buf.begin() + offsets[b], buf.begin() + offsets[b + 1]);
    };
    std::sort(order.begin(), order.end(), key_less);
    int next = -1;
    for (size_t i = 0; i < order.size(); ++i) {
      if (i == 0 || key_less(order[i - 1], order[i])) ++next;
      const auto [g, idx] = ids[order[i]];
      colors_[g][idx] = next;
    }
  }

  void record() {
    std::vector<int> per_graph;
    std::vector<int> all;
    for (const auto& c : colors_) {
      std::vector<int> s = c;
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      per_graph.push_back(static_cast<int>(s.size()));
      all.insert(all.end(), s.begin(), s.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    result_.class_counts.push_back(std::move(per_graph));
    result_.joint_class_counts.push_back(static_cast<int>(all.size()));
    std::vector<int> w;
    for (auto [g, idx] : options_.watch) w.push_back(colors_.at(g).at(idx));
    result_.watched.push_back(std::move(w));
  }

  const std::vector<const ColoredGraph*>& graphs_;
  Scheme scheme_;
  int k1_;
  int k2_;
  const RefineOptions& options_;
  std::vector<Domain> domains_;
  std::vector<std::vector<int>> colors_;
  RefinementResult result_;
};

void check_graphs(const std::vector<const ColoredGraph*>& graphs) {
  if (graphs.empty()) throw DomainError("refinement needs at least one graph");
  for (auto* g : graphs) {
    if (g == nullptr) throw DomainError("null graph");
  }
}

}  // namespace

RefinementResult wl_classic(const std::vector<const ColoredGraph*>& graphs, int k,
                            const RefineOptions& options) {
  check_graphs(graphs);
  if (k < 1) throw DomainError("k-WL needs k >= 1");
  return Engine(graphs, Scheme::kWl, k, 0, options).run();
}

RefinementResult owl_classic(const std::vector<const ColoredGraph*>& graphs, int k,
                             const RefineOptions& options) {
  check_graphs(graphs);
  if (k < 1) throw DomainError("k-OWL needs k >= 1");
  return Engine(graphs, Scheme::kOwl, k, 0, options).run();
}

RefinementResult owl_restricted(const std::vector<const ColoredGraph*>& graphs, int k1,
                                int k2, const RefineOptions& options) {
  check_graphs(graphs);
  if (k1 < 0 || k2 < 0 || k1 + k2 < 1) throw DomainError("(k1,k2)-OWL needs k1+k2 >= 1");
  return Engine(graphs, Scheme::kRestricted, k1, k2, options).run();
}

RefinementResult wl_classic(const ColoredGraph& g, int k, const RefineOptions& options) {
  return wl_classic(std::vector<const ColoredGraph*>{&g}, k, options);
}

RefinementResult owl_classic(const ColoredGraph& g, int k, const RefineOptions& options) {
  return owl_classic(std::vector<const ColoredGraph*>{&g}, k, options);
}

RefinementResult owl_restricted(const ColoredGraph& g, const ColoredGraph* h, int k1, int k2,
                                const RefineOptions& options) {
  std::vector<const ColoredGraph*> graphs{&g};
  if (h) graphs.push_back(h);
  return owl_restricted(graphs, k1, k2, options);
}

std::int64_t tuple_index(int n, bool with_bottom, std::span<const Vertex> tuple) {
  const std::int64_t base = with_bottom ? n + 1 : n;
  std::int64_t idx = 0;
  std::int64_t pow = 1;
  for (Vertex v : tuple) {
    const std::int64_t digit = v == kUnassigned ? n : v;
    idx += digit * pow;
    pow *= base;
  }
  return idx;
}

bool equivalent_naive(const ColoredGraph& g, const PartialAssignment& alpha,
                      const ColoredGraph& h, const PartialAssignment& beta, int k1, int k2,
                      int rounds, std::int64_t budget) {
  if (alpha.k1() != k1 || alpha.k2() != k2 || beta.k1() != k1 || beta.k2() != k2) {
    throw DomainError("configuration does not match (k1,k2)");
  }
  if (alpha.domain_mask() != beta.domain_mask()) {
    throw DomainError("configuration domains differ");
  }
  if (!alpha.valid_for(g) || !beta.valid_for(h)) {
    throw DomainError("configuration entries out of range");
  }
  RefineOptions options;
  options.rounds = rounds;
  options.budget = budget;
  auto r = owl_restricted(g, &h, k1, k2, options);
  return r.colors[0][tuple_index(g.order(), true, alpha.entries())] ==
         r.colors[1][tuple_index(h.order(), true, beta.entries())];
}

bool histogram_distinguishes(const RefinementResult& r, int a, int b) {
  auto histogram = [&](int g) {
    std::map<int, std::int64_t> counts;
    const int n = r.orders[g];
    const std::int64_t base = r.with_bottom ? n + 1 : n;
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(r.colors[g].size()); ++i) {
      if (r.with_bottom) {
        bool total = true;
        std::int64_t x = i;
        for (int p = 0; p < r.arity && total; ++p) {
          total = x % base != n;
          x /= base;
        }
        if (!total) continue;
      }
      ++counts[r.colors[g][i]];
    }
    return counts;
  };
  return histogram(a) != histogram(b);
}

bool empty_assignment_distinguishes(const RefinementResult& r, int a, int b) {
  if (!r.with_bottom) throw DomainError("domain has no unassigned symbol");
  std::vector<Vertex> empty(r.arity, kUnassigned);
  return r.colors[a][tuple_index(r.orders[a], true, empty)] !=
         r.colors[b][tuple_index(r.orders[b], true, empty)];
}

std::int64_t iteration_bound(int n, int k1, int k2) {
  std::int64_t p = 1;
  for (int i = 0; i < k1; ++i) p *= n;
  return (k2 + 1) * p - 1;
}

}  // namespace rqwl
