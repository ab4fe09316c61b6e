#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rqwl/cfi.hpp"
#include "rqwl/games.hpp"

using namespace rqwl;

TEST_CASE("edge components") {
  const auto p = path_graph(4);  // a-b-c-d = 0-1-2-3
  CHECK(edge_components(p, PartialAssignment(1, 0)) == std::vector<int>{0, 0, 0});
  const PartialAssignment at_b(1, 0, {1});
  // {a-b} alone; {b-c, c-d} joined through the interior vertex c.
  CHECK(edge_components(p, at_b) == std::vector<int>{0, 1, 1});
}

TEST_CASE("partial isomorphisms") {
  const auto p = path_graph(3);
  CHECK(partial_iso(p, PartialAssignment(2, 0), p, PartialAssignment(2, 0)));
  CHECK_FALSE(partial_iso(p, PartialAssignment(2, 0, {0, 0}), p, PartialAssignment(2, 0, {0, 1})));
  CHECK_FALSE(partial_iso(p, PartialAssignment(2, 0, {0, 1}), p, PartialAssignment(2, 0, {0, 2})));
  CHECK(partial_iso(p, PartialAssignment(2, 0, {0, 1}), p, PartialAssignment(2, 0, {2, 1})));
}

TEST_CASE("perfect matching") {
  const std::vector<std::uint8_t> rel{1, 1, 0,  //
                                      1, 0, 0,  //
                                      0, 1, 1};
  const auto m = perfect_matching(3, rel);
  REQUIRE(m.has_value());
  CHECK(*m == std::vector<int>{1, 0, 2});
  const std::vector<std::uint8_t> none{1, 0, 1, 0};
  CHECK_FALSE(perfect_matching(2, none).has_value());
}

TEST_CASE("bijective pebble game examples") {
  std::mt19937_64 rng(8);
  const auto g = random_graph(4, 0.5, 2, rng);
  CHECK(bp_solve(g, g, 1, 1) == BpWinner::kDuplicator);
  CHECK(bp_solve(star(3), path_graph(4), 0, 2) == BpWinner::kSpoiler);
  const auto c6 = cycle_graph(6);
  const auto c3c3 = disjoint_union(cycle_graph(3), cycle_graph(3));
  CHECK(bp_solve(c6, c3c3, 1, 1) == BpWinner::kDuplicator);
  CHECK(bp_solve(c6, c3c3, 2, 1) == BpWinner::kSpoiler);
  // Unequal orders lose as soon as a pebble can be lifted.
  CHECK(bp_solve(path_graph(3), path_graph(4), 1, 0, 1) == BpWinner::kSpoiler);
  CHECK(bp_solve(path_graph(3), path_graph(4), 1, 0, 0) == BpWinner::kDuplicator);
}

TEST_CASE("BP solver tables are monotone and the move is consistent") {
  const auto c6 = cycle_graph(6);
  const auto c3c3 = disjoint_union(cycle_graph(3), cycle_graph(3));
  BpSolver s(c6, c3c3, 2, 1);
  const PartialAssignment e(2, 1);
  CHECK(s.duplicator_wins(e, e, 0));
  int first_loss = -1;
  for (int r = 0; r <= 6; ++r) {
    if (!s.duplicator_wins(e, e, r)) {
      first_loss = r;
      break;
    }
  }
  REQUIRE(first_loss > 0);
  for (int r = first_loss; r <= first_loss + 2; ++r) CHECK_FALSE(s.duplicator_wins(e, e, r));
  const auto m = s.first_move(e, e, first_loss);
  CHECK(m.pebble >= 0);
  CHECK(m.bijection.empty());
  const auto dm = s.first_move(e, e, first_loss - 1);
  CHECK(dm.bijection.size() == 6);
  CHECK(s.fixpoint_round() >= first_loss);
}

TEST_CASE("cops and robber examples") {
  const auto k3 = complete_graph(3);
  CHECK(cr_solve(k3, 0, 3) == CrWinner::kCops);
  CHECK(cr_solve(k3, 0, 2) == CrWinner::kRobber);
  CHECK(cr_solve(k3, 1, 1) == CrWinner::kRobber);
  CHECK(cr_solve(k3, 2, 0) == CrWinner::kRobber);
  const auto b2 = perfect_binary_tree(2);
  CHECK(cr_solve(b2, 1, 1) == CrWinner::kCops);
  CHECK(cr_solve(b2, 0, 2) == CrWinner::kRobber);
  const auto p9 = grid(1, 9);
  CHECK(cr_solve(p9, 2, 0) == CrWinner::kCops);
  CHECK(cr_solve(p9, 1, 1) == CrWinner::kRobber);
}

TEST_CASE("cops first move wins") {
  CrSolver s(complete_graph(3), 0, 3);
  CHECK(s.cops_win(kUnbounded));
  const auto m = s.first_move(kUnbounded);
  REQUIRE(m.has_value());
  CHECK(m->cop >= 0);
  CrSolver robber(complete_graph(3), 1, 1);
  CHECK_FALSE(robber.first_move(kUnbounded).has_value());
}
