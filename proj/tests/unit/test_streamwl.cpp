#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rqwl/streamwl.hpp"
#include "rqwl/wl.hpp"

using namespace rqwl;

namespace {

std::strong_ordering compare_lists(std::vector<int> a, std::vector<int> b) {
  return multiset_lex_compare(
      static_cast<int>(a.size()), static_cast<int>(b.size()),
      [&](int sp, int p, int sq, int q) {
        const int x = sp == 0 ? a[p] : b[p];
        const int y = sq == 0 ? a[q] : b[q];
        return (x > y) - (x < y);
      });
}

std::strong_ordering reference(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

// Partition induced by a vector of colors, as a canonical relabeling.
std::vector<int> partition_of(const std::vector<int>& colors) {
  std::map<int, int> first;
  std::vector<int> out;
  for (int c : colors) out.push_back(first.emplace(c, static_cast<int>(first.size())).first->second);
  return out;
}

}  // namespace

TEST_CASE("multiset lex compare examples") {
  CHECK(compare_lists({1, 2, 2}, {1, 2, 3}) == std::strong_ordering::less);
  CHECK(compare_lists({3, 1, 2}, {2, 3, 1}) == std::strong_ordering::equal);
  CHECK(compare_lists({1, 2}, {1, 2, 0}) == std::strong_ordering::greater);
  CHECK(compare_lists({}, {}) == std::strong_ordering::equal);
  CHECK(compare_lists({}, {4}) == std::strong_ordering::less);
  CHECK(compare_lists({2, 2}, {2}) == std::strong_ordering::greater);
}

TEST_CASE("multiset lex compare agrees with sort-then-compare") {
  std::mt19937_64 rng(0);
  for (int t = 0; t < 5000; ++t) {
    std::vector<int> a(rng() % 9);
    std::vector<int> b(rng() % 9);
    const int range = 1 + static_cast<int>(rng() % 4);
    for (int& x : a) x = static_cast<int>(rng() % range);
    for (int& x : b) x = static_cast<int>(rng() % range);
    if (t % 4 == 0) {
      b = a;
      std::shuffle(b.begin(), b.end(), rng);
    }
    CHECK(compare_lists(a, b) == reference(a, b));
  }
}

TEST_CASE("function tables are metered") {
  MemoryMeter m;
  {
    FunctionTable a(m, 10);
    FunctionTable b(m, 5);
    CHECK(m.live_cells == 15);
    FunctionTable c = std::move(a);
    CHECK(m.live_cells == 15);
  }
  CHECK(m.live_cells == 0);
  CHECK(m.peak_cells == 15);
}

TEST_CASE("ref_reusable_fixpoint matches owl_restricted at k2 = 0") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto g = random_graph(n, 0.5, 2, rng);
    const auto h = random_graph(n, 0.5, 2, rng);
    for (int k1 : {1, 2}) {
      StreamEngine e(g, h, k1, 0);
      EtaPair p;
      p.graph[1] = 1;
      FunctionTable table = e.atomic_table(p);
      const std::int64_t before = std::set<int>(table.cells().begin(), table.cells().end()).size();
      e.ref_reusable_fixpoint(p, table);
      const std::int64_t after = std::set<int>(table.cells().begin(), table.cells().end()).size();
      CHECK(after >= before);
      const auto naive = owl_restricted({&g, &h}, k1, 0);
      std::vector<int> joined = naive.colors[0];
      joined.insert(joined.end(), naive.colors[1].begin(), naive.colors[1].end());
      CHECK(partition_of(table.cells()) == partition_of(joined));
      // Already stable: one more pass changes nothing.
      std::vector<int> cells = table.cells();
      CHECK(e.ref_reusable_fixpoint(p, table) == 0);
      CHECK(partition_of(table.cells()) == partition_of(cells));
    }
  }
}

TEST_CASE("ref_nonreusable: constant oracle and one naive step") {
  std::mt19937_64 rng(2);
  const auto g = random_graph(4, 0.5, 2, rng);
  const auto h = random_graph(4, 0.5, 2, rng);
  const int k1 = 1;
  const int k2 = 1;
  StreamEngine e(g, h, k1, k2);
  EtaPair p;
  p.graph[1] = 1;
  p.eta[0] = {kUnassigned};
  p.eta[1] = {kUnassigned};
  const std::int64_t t = e.table_size(p);

  // A constant coloring stays constant.
  auto constant = [&](const EtaPair& q) {
    FunctionTable tq(e.meter(), e.table_size(q));
    for (std::int64_t i = 0; i < tq.size(); ++i) tq[i] = 1;
    return tq;
  };
  FunctionTable work(e.meter(), t);
  e.ref_nonreusable(p, constant, work);
  CHECK(std::set<int>(work.cells().begin(), work.cells().end()).size() == 1);

  // With the round-1 naive coloring as oracle, the output partition equals
  // the refinement by (chi, multiset over y1 of chi) computed directly.
  RefineOptions one;
  one.rounds = 1;
  const auto naive = owl_restricted({&g, &h}, k1, k2, one);
  const ColoredGraph* graphs[2] = {&g, &h};
  auto global = [&](int side, Vertex x, Vertex y) {
    const std::vector<Vertex> tuple{x, y};
    return naive.colors[side][tuple_index(graphs[side]->order(), true, tuple)];
  };
  auto oracle = [&](const EtaPair& q) {
    FunctionTable tq(e.meter(), e.table_size(q));
    const std::int64_t s0 = e.side_size(q, 0);
    for (std::int64_t i = 0; i < tq.size(); ++i) {
      const int side = i < s0 ? 0 : 1;
      const std::int64_t x = side == 0 ? i : i - s0;
      const int n = graphs[q.graph[side]]->order();
      tq[i] = global(q.graph[side], x == n ? kUnassigned : static_cast<Vertex>(x), q.eta[side][0]);
    }
    return tq;
  };
  e.ref_nonreusable(p, oracle, work);
  std::vector<std::vector<int>> keys;
  for (int side = 0; side < 2; ++side) {
    const int n = graphs[side]->order();
    for (int x = 0; x <= n; ++x) {
      const Vertex xv = x == n ? kUnassigned : x;
      std::vector<int> key{global(side, xv, kUnassigned)};
      std::vector<int> ms;
      for (Vertex w = 0; w < n; ++w) ms.push_back(global(side, xv, w));
      std::sort(ms.begin(), ms.end());
      key.insert(key.end(), ms.begin(), ms.end());
      keys.push_back(key);
    }
  }
  std::map<std::vector<int>, int> ids;
  std::vector<int> expected;
  for (const auto& k : keys) expected.push_back(ids.emplace(k, static_cast<int>(ids.size())).first->second);
  CHECK(partition_of(work.cells()) == partition_of(expected));
}

TEST_CASE("stream_equivalent basics") {
  std::mt19937_64 rng(3);
  const auto g = random_graph(4, 0.5, 2, rng);
  for (auto [k1, k2] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {0, 2}, {2, 0}, {1, 2}}) {
    CHECK(stream_equivalent(g, PartialAssignment(k1, k2), g, PartialAssignment(k1, k2), k1, k2)
              .equivalent);
  }
  const auto s3 = star(3);
  const auto p4 = path_graph(4);
  CHECK_FALSE(stream_equivalent(s3, PartialAssignment(0, 2), p4, PartialAssignment(0, 2), 0, 2)
                  .equivalent);
  const auto c6 = cycle_graph(6);
  const auto c3c3 = disjoint_union(cycle_graph(3), cycle_graph(3));
  CHECK(stream_equivalent(c6, PartialAssignment(1, 1), c3c3, PartialAssignment(1, 1), 1, 1)
            .equivalent);
  CHECK_THROWS_AS(stream_equivalent(g, PartialAssignment(1, 1, {0, kUnassigned}), g,
                                    PartialAssignment(1, 1), 1, 1),
                  DomainError);
  CHECK_THROWS_AS(stream_equivalent(g, PartialAssignment(0, 0), g, PartialAssignment(0, 0), 0, 0),
                  DomainError);
}

TEST_CASE("stream and naive verdicts agree; fast mode agrees") {
  std::mt19937_64 rng(4);
  const std::pair<int, int> ks[] = {{1, 1}, {0, 2}, {2, 0}, {0, 3}, {1, 2}};
  for (int t = 0; t < 25; ++t) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto [k1, k2] = ks[t % 5];
    const auto g = random_graph(n, 0.5, 2, rng);
    const auto h = t % 2 ? g : random_graph(n, 0.5, 2, rng);
    PartialAssignment a(k1, k2);
    PartialAssignment b(k1, k2);
    if (t % 3 == 0) {
      a.set(k1 + k2 - 1, 0);
      b.set(k1 + k2 - 1, static_cast<Vertex>(rng() % n));
    }
    const bool naive = equivalent_naive(g, a, h, b, k1, k2);
    CHECK(stream_equivalent(g, a, h, b, k1, k2).equivalent == naive);
    StreamOptions fast;
    fast.mode = StreamMode::kFast;
    CHECK(stream_equivalent(g, a, h, b, k1, k2, fast).equivalent == naive);
  }
}

TEST_CASE("meter: depth, space bound and determinism") {
  const auto g = cycle_graph(5);
  const auto r = stream_equivalent(g, PartialAssignment(1, 2), g, PartialAssignment(1, 2), 1, 2);
  CHECK(r.equivalent);
  CHECK(r.meter.peak_depth == 3);
  CHECK(r.meter.peak_cells <= 4 * 3 * 6);
  CHECK(r.meter.live_cells == 0);
  CHECK(r.meter.oracle_calls > 0);
  const auto again =
      stream_equivalent(g, PartialAssignment(1, 2), g, PartialAssignment(1, 2), 1, 2);
  CHECK(again.meter.oracle_calls == r.meter.oracle_calls);
  CHECK(again.meter.peak_cells == r.meter.peak_cells);

  // Repeated level tables for the same pair are identical.
  StreamEngine e(g, g, 1, 1);
  EtaPair p;
  p.eta[0] = {2};
  p.eta[1] = {3};
  const auto t1 = e.level_table(0, p);
  const auto t2 = e.level_table(0, p);
  CHECK(t1.cells() == t2.cells());

  StreamOptions limited;
  limited.max_operations = 100;
  CHECK_THROWS_AS(stream_equivalent(g, PartialAssignment(1, 2), g, PartialAssignment(1, 2), 1,
                                    2, limited),
                  BudgetExceeded);
}
