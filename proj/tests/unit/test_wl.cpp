#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rqwl/cfi.hpp"
#include "rqwl/wl.hpp"

using namespace rqwl;

namespace {

const ColoredGraph& c6() {
  static const ColoredGraph g = cycle_graph(6);
  return g;
}
const ColoredGraph& c3c3() {
  static const ColoredGraph g = disjoint_union(cycle_graph(3), cycle_graph(3));
  return g;
}

}  // namespace

TEST_CASE("1-WL fails on C6 vs C3+C3") {
  const auto r = wl_classic({&c6(), &c3c3()}, 1);
  CHECK(r.stable);
  CHECK_FALSE(histogram_distinguishes(r, 0, 1));
  // 2-WL separates them (connectivity is C^3-definable).
  CHECK(histogram_distinguishes(wl_classic({&c6(), &c3c3()}, 2), 0, 1));
}

TEST_CASE("round 0 is the atomic-type partition") {
  RefineOptions o;
  o.rounds = 0;
  const auto g = path_graph(4);
  const auto r = wl_classic(g, 2, o);
  CHECK(r.rounds == 0);
  std::set<std::vector<int>> types;
  for (Vertex a = 0; a < 4; ++a) {
    for (Vertex b = 0; b < 4; ++b) {
      types.insert(atomic_type(g, PartialAssignment(2, 0, {a, b})).code);
    }
  }
  CHECK(r.joint_class_counts[0] == static_cast<int>(types.size()));
}

TEST_CASE("vertex-transitive graph has one 1-WL class") {
  const auto r = wl_classic(cycle_graph(5), 1);
  CHECK(r.joint_class_counts.back() == 1);
}

TEST_CASE("owl_classic on an edgeless graph partitions by color") {
  const std::vector<ColorId> colors{0, 1, 1, 2};
  const auto g = ColoredGraph::make(4, std::vector<Edge>{}, colors);
  CHECK(owl_classic(g, 1).joint_class_counts.back() == 3);
}

TEST_CASE("owl_restricted on the CFI pair over the binary tree") {
  const auto base = validate_base(with_base_coloring(perfect_binary_tree(2)));
  const auto x = cfi_untwisted(base);
  const auto xt = cfi_twisted(base);
  const auto r02 = owl_restricted(x.graph, &xt.graph, 0, 2);
  CHECK_FALSE(empty_assignment_distinguishes(r02, 0, 1));
  const auto r11 = owl_restricted(x.graph, &xt.graph, 1, 1);
  CHECK(empty_assignment_distinguishes(r11, 0, 1));
}

TEST_CASE("joint run on (G, G) is symmetric") {
  std::mt19937_64 rng(2);
  const auto g = random_graph(5, 0.5, 2, rng);
  const auto r = owl_restricted(g, &g, 1, 1);
  CHECK(r.colors[0] == r.colors[1]);
}

TEST_CASE("iteration bound on random graphs at (1,1)") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto g = random_graph(n, 0.5, 2, rng);
    const auto r = owl_restricted(g, nullptr, 1, 1);
    CHECK(r.stable);
    CHECK(r.stabilization_round() <= 2 * n - 1);
    CHECK(iteration_bound(n, 1, 1) == 2 * n - 1);
  }
}

TEST_CASE("equivalent_naive examples") {
  const auto p4 = path_graph(4);
  const auto s3 = star(3);
  CHECK(equivalent_naive(p4, PartialAssignment(0, 2), p4, PartialAssignment(0, 2), 0, 2));
  CHECK_FALSE(equivalent_naive(s3, PartialAssignment(0, 2), p4, PartialAssignment(0, 2), 0, 2));
  CHECK(equivalent_naive(c6(), PartialAssignment(1, 1), c3c3(), PartialAssignment(1, 1), 1, 1));
  CHECK_THROWS_AS(equivalent_naive(p4, PartialAssignment(1, 1, {0, kUnassigned}), p4,
                                   PartialAssignment(1, 1), 1, 1),
                  DomainError);
}

TEST_CASE("watched assignments and budgets") {
  RefineOptions o;
  o.watch = {{0, 0}};
  const auto r = owl_restricted(path_graph(3), nullptr, 1, 1, o);
  CHECK(r.watched.size() == r.joint_class_counts.size());
  RefineOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(owl_restricted(path_graph(5), nullptr, 2, 1, tiny), BudgetExceeded);
  CHECK_THROWS_AS(owl_restricted(path_graph(5), nullptr, 0, 0), DomainError);
}
