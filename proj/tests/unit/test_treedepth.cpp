#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rqwl/treedepth.hpp"

using namespace rqwl;

TEST_CASE("tree-depth examples") {
  CHECK(tree_depth(ColoredGraph::make(1, std::vector<Edge>{})).value == 1);
  for (int n = 1; n <= 6; ++n) CHECK(tree_depth(star(n)).value == 2);
  CHECK(tree_depth(path_graph(7)).value == 3);
  CHECK(tree_depth(path_graph(8)).value == 4);
  CHECK(tree_depth(complete_graph(5)).value == 5);
  CHECK(tree_depth(cycle_graph(4)).value == 3);
  CHECK(tree_depth(disjoint_union(star(2), path_graph(7))).value == 3);
  CHECK_THROWS_AS(tree_depth(path_graph(20), 16), BudgetExceeded);
}

TEST_CASE("certificates verify") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 25; ++t) {
    const auto g = random_graph(1 + static_cast<int>(rng() % 8), 0.35, 1, rng);
    const auto c = tree_depth(g);
    CHECK(verify_certificate(g, c));
    auto bad = c;
    bad.value += 1;
    CHECK_FALSE(verify_certificate(g, bad));
  }
}

TEST_CASE("shrink") {
  const auto g = disjoint_union(path_graph(3), ColoredGraph::make(1, std::vector<Edge>{}));
  const auto s = shrink(g, 3);
  CHECK(s.order() == 3);
  CHECK(s.edge_count() == 2);
  for (Vertex v = 0; v < 3; ++v) CHECK(s.color(v) == 0);  // 2 * 0 + 0

  const auto k = shrink(complete_graph(3), 1);
  CHECK(k.order() == 2);
  CHECK(k.edge_count() == 1);
  CHECK(k.color(0) == 1);
  CHECK(k.color(1) == 1);
}

TEST_CASE("identification") {
  const std::vector<ColoredGraph> one{path_graph(4)};
  CHECK(identifies_within(0, 3, one).conflicts.empty());

  const auto td2 = graphs_of_tree_depth_at_most(2, 5);
  for (const auto& g : td2) CHECK(tree_depth(g).value <= 2);
  // Star forests on n vertices correspond to partitions of n (one star per part).
  CHECK(td2.size() == 1 + 2 + 3 + 5 + 7);
  const auto rep = identifies_within(0, 3, td2);
  CHECK(rep.conflicts.empty());
  CHECK(rep.pairs_checked == static_cast<std::int64_t>(td2.size() * (td2.size() - 1) / 2));

  // C6 and C3+C3 have tree-depth 4 and 3; (1,1) cannot separate them.
  const std::vector<ColoredGraph> cycles{cycle_graph(6),
                                         disjoint_union(cycle_graph(3), cycle_graph(3))};
  CHECK(identifies_within(1, 1, cycles).conflicts.size() == 1);
}
