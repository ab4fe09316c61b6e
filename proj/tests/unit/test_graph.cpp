#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "rqwl/graph.hpp"

using namespace rqwl;

namespace {

ColoredGraph triangle() {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}};
  return ColoredGraph::make(3, e);
}

}  // namespace

TEST_CASE("make: smallest graph, triangle, self-loop") {
  const std::vector<ColorId> c1{0};
  const auto g1 = ColoredGraph::make(1, std::vector<Edge>{}, c1);
  CHECK(g1.order() == 1);
  CHECK(g1.edge_count() == 0);

  const auto t = triangle();
  CHECK(t.order() == 3);
  CHECK(t.edge_count() == 3);
  CHECK(t.adjacent(2, 0));

  const std::vector<Edge> loop{{0, 0}};
  const std::vector<ColorId> c4{0, 0, 0, 0};
  CHECK_THROWS_AS(ColoredGraph::make(4, loop, c4), DomainError);
}

TEST_CASE("make: duplicate edges merge, invalid input rejected") {
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK(ColoredGraph::make(2, dup).edge_count() == 1);
  const std::vector<Edge> out{{0, 5}};
  CHECK_THROWS_AS(ColoredGraph::make(2, out), DomainError);
  const std::vector<ColorId> neg{0, -1};
  CHECK_THROWS_AS(ColoredGraph::make(2, std::vector<Edge>{}, neg), DomainError);
  const std::vector<ColorId> short_colors{0};
  CHECK_THROWS_AS(ColoredGraph::make(2, std::vector<Edge>{}, short_colors), DomainError);
}

TEST_CASE("generators") {
  const auto g = grid(3, 12);
  CHECK(g.order() == 36);
  CHECK(g.edge_count() == 57);
  CHECK(complete_graph(4).edge_count() == 6);
  const auto b = perfect_binary_tree(2);
  CHECK(b.order() == 7);
  CHECK(b.edge_count() == 6);
  CHECK(star(3).order() == 4);
  CHECK(path_graph(9).edge_count() == 8);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK_THROWS_AS(cycle_graph(2), DomainError);
  // Bridged grid: one extra vertex per row pair bridging the middle columns.
  CHECK(bridged_grid(2, 4).order() > grid(2, 4).order());
  const std::vector<int> params{3, 12};
  CHECK(gen_family(Family::kGrid, params) == g);
  CHECK(family_from_name("bridged_grid") == Family::kBridgedGrid);
  CHECK_THROWS_AS(family_from_name("nope"), DomainError);
  const auto colored = gen_family(Family::kComplete, std::vector<int>{3}, true);
  CHECK(colored.color(2) == 2);
}

TEST_CASE("individualize") {
  const auto t = triangle();
  const std::vector<Vertex> v0{0};
  const auto ti = individualize(t, v0);
  CHECK(ti.color(0) != ti.color(1));
  CHECK(ti.color(1) == ti.color(2));
  CHECK(ti.color(1) == t.color(1));
  CHECK(individualize(t, std::vector<Vertex>{}) == t);
}

TEST_CASE("degree profiles") {
  const auto c6 = cycle_graph(6);
  const auto c3c3 = disjoint_union(cycle_graph(3), cycle_graph(3));
  const auto p = degree_profiles(c6);
  CHECK(p.degrees == std::vector<int>(6, 2));
  CHECK(p.neighborhoods == std::vector<std::vector<int>>(6, {2, 2}));
  CHECK(degree_profiles(c3c3) == p);
  CHECK(degree_profiles(star(3)).degrees == std::vector<int>{1, 1, 1, 3});
  CHECK(connected_components(c3c3) == 2);
  CHECK(connected_components(c6) == 1);
}

TEST_CASE("atomic types") {
  const auto t = triangle();
  const auto p3 = path_graph(3);
  const PartialAssignment empty(2, 0);
  CHECK(atomic_type(t, empty) == atomic_type(p3, empty));
  const PartialAssignment on_edge(2, 0, {0, 1});
  const PartialAssignment non_edge(2, 0, {0, 2});
  CHECK(atomic_type(p3, on_edge) != atomic_type(p3, non_edge));
  CHECK(compare_atomic(p3, on_edge.entries(), p3, non_edge.entries()) != 0);

  std::mt19937_64 rng(3);
  const auto g = random_graph(6, 0.5, 2, rng);
  std::vector<Vertex> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const auto h = permuted(g, perm);
  const auto phi = iso_oracle(g, h);
  REQUIRE(phi.has_value());
  for (Vertex a = 0; a < 6; ++a) {
    for (Vertex b = 0; b < 6; ++b) {
      const PartialAssignment x(1, 2, {a, kUnassigned, b});
      const PartialAssignment y(1, 2, {(*phi)[a], kUnassigned, (*phi)[b]});
      CHECK(atomic_type(g, x) == atomic_type(h, y));
      CHECK(compare_atomic(g, x.entries(), h, y.entries()) == 0);
    }
  }
}

TEST_CASE("assignment indexer round trip") {
  const AssignmentIndexer ix(4, 3);
  CHECK(ix.size() == 125);
  for (std::int64_t i = 0; i < ix.size(); ++i) {
    const auto a = ix.decode(i, 1, 2);
    CHECK(ix.index(a) == i);
  }
  const PartialAssignment a(1, 2, {kUnassigned, 2, 3});
  CHECK(ix.entry(ix.index(a), 0) == kUnassigned);
  CHECK(ix.with(ix.index(a), 0, 1) == ix.index(a.with(0, 1)));
  CHECK(a.unassigned_y().empty());
  CHECK(a.domain_mask() == 0b110);
}

TEST_CASE("iso_oracle") {
  const auto t = triangle();
  const auto id = iso_oracle(t, t);
  REQUIRE(id.has_value());
  CHECK(is_isomorphism(t, t, *id));
  CHECK_FALSE(iso_oracle(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
  // Colors must be respected.
  const std::vector<Edge> p3{{0, 1}, {1, 2}};
  const std::vector<ColorId> end_red{1, 0, 0};
  const std::vector<ColorId> mid_red{0, 1, 0};
  CHECK_FALSE(iso_oracle(ColoredGraph::make(3, p3, end_red), ColoredGraph::make(3, p3, mid_red)));
  IsoOptions tight;
  tight.node_budget = 1;
  CHECK_THROWS_AS(iso_oracle(cycle_graph(8), cycle_graph(8), tight), BudgetExceeded);
}

TEST_CASE("canonical code and enumeration") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_graph(6, 0.4, 2, rng);
    std::vector<Vertex> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_code(g) == canonical_code(permuted(g, perm)));
    CHECK(canonical_form(g) == canonical_form(permuted(g, perm)));
  }
  // OEIS A000088: 1, 2, 4, 11, 34, 156 graphs on n = 1..6 vertices.
  const auto all = enumerate_graphs(6, 1);
  std::vector<int> per_order(7, 0);
  for (const auto& g : all) ++per_order[g.order()];
  CHECK(per_order == std::vector<int>{0, 1, 2, 4, 11, 34, 156});
  // Two colors on up to 3 vertices: 2 + 6 + 20 = 28 (A000666 gives 2-colored counts).
  CHECK(enumerate_graphs(1, 2).size() == 2);
  CHECK(enumerate_graphs(2, 2).size() == 2 + 6);
}
