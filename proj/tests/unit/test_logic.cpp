#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rqwl/logic.hpp"

using namespace rqwl;

namespace {

const char* kDistanceTwo =
    "forall x1 (U_red(x1) -> exists x2 (E(x1,x2) & exists x1 (E(x2,x1) & U_blue(x1))))";

// Vertex colors: 0 = red, 1 = green, 2 = blue.
Legend rgb() { return parse_legend("0=red,1=green,2=blue"); }

}  // namespace

TEST_CASE("parse atoms") {
  const auto f = parse_formula("E(x1,x2)", 2, 0);
  CHECK(f->op == Op::kEdge);
  CHECK(f->var == 0);
  CHECK(f->var2 == 1);
  const auto eq = parse_formula("x1 = y1", 1, 1);
  CHECK(eq->op == Op::kEq);
  CHECK(eq->var2 == 1);
  CHECK(parse_formula("U_3(y2)", 0, 2)->color == 3);
}

TEST_CASE("parse the distance-2 formula") {
  const Legend legend = rgb();
  const auto f = parse_formula(kDistanceTwo, 2, 0, &legend);
  CHECK(f->op == Op::kForall);
  CHECK(f->lhs->op == Op::kImplies);
  const auto again = parse_formula(format_formula(*f, 2), 2, 0, &legend);
  CHECK(structurally_equal(*f, *again));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_formula("E(x1,", 1, 0), ParseError);
  CHECK_THROWS_AS(parse_formula("E(x3,x1)", 2, 0), ParseError);
  CHECK_THROWS_AS(parse_formula("U_red(x1)", 1, 0), ParseError);
  CHECK_THROWS_AS(parse_formula("exists>=-1 x1 x1=x1", 1, 0), ParseError);
  try {
    parse_formula("E(x1,x1) &", 1, 0);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 10);
  }
}

TEST_CASE("trivial counting quantifiers") {
  const auto f = parse_formula("exists>=4 x1 E(x1,x1)", 1, 0);
  CHECK(f->op == Op::kCountExists);
  CHECK(f->threshold == 4);
  CHECK_FALSE(evaluate(complete_graph(5), PartialAssignment(1, 0), *f));
  const auto zero = make_count(0, 0, make_not(make_eq(0, 0)));
  CHECK(evaluate(path_graph(3), PartialAssignment(1, 0), *zero));
}

TEST_CASE("analyze: requantification example") {
  const auto f = parse_formula(
      "(exists y1 !E(x2,y1)) & exists>=4 x1 (E(x2,x1) & exists y1 (!E(x1,y1)) & "
      "forall x2 (!E(x2,x1) -> exists>=3 x1 E(x1,x2)))",
      2, 1);
  const auto r = analyze(*f, 2, 1);
  CHECK(r.requantified == 0b011u);  // x1 and x2, not y1
  CHECK(r.free == 0b010u);
  CHECK(r.quantifier_rank == 3);
  CHECK(r.in_logic);
  CHECK(r.in_fragment(3));
  CHECK_FALSE(r.in_fragment(2));
}

TEST_CASE("analyze: quantifier-free and nested y") {
  const auto qf = analyze(*parse_formula("E(x1,y1) | !x1=y1", 1, 1), 1, 1);
  CHECK(qf.requantified == 0u);
  CHECK(qf.quantifier_rank == 0);
  const auto nested = make_exists(0, make_exists(0, make_edge(0, 0)));  // y1 with k1 = 0
  const auto r = analyze(*nested, 0, 1);
  CHECK(r.requantified == 1u);
  CHECK_FALSE(r.in_logic);
}

TEST_CASE("evaluate the distance-2 formula") {
  const Legend legend = rgb();
  const auto f = parse_formula(kDistanceTwo, 2, 0, &legend);
  const std::vector<Edge> e{{0, 1}, {1, 2}};
  const std::vector<ColorId> rgb_path{0, 1, 2};
  CHECK(evaluate(ColoredGraph::make(3, e, rgb_path), PartialAssignment(2, 0), *f));
  const std::vector<ColorId> no_red{1, 1, 2};
  CHECK(evaluate(ColoredGraph::make(3, e, no_red), PartialAssignment(2, 0), *f));
  const std::vector<ColorId> red_far{0, 2, 1};
  CHECK_FALSE(evaluate(ColoredGraph::make(3, e, red_far), PartialAssignment(2, 0), *f));
}

TEST_CASE("evaluate requires free variables to be assigned") {
  const auto f = parse_formula("E(x1,y1)", 1, 1);
  CHECK_THROWS_AS(evaluate(path_graph(2), PartialAssignment(1, 1, {0, kUnassigned}), *f),
                  DomainError);
  CHECK(evaluate(path_graph(2), PartialAssignment(1, 1, {0, 1}), *f));
}

TEST_CASE("evaluate_table matches evaluate") {
  std::mt19937_64 rng(11);
  const auto g = random_graph(4, 0.5, 2, rng);
  RandomFormulaOptions o;
  o.k1 = 1;
  o.k2 = 1;
  o.max_rank = 2;
  o.free_x = 1;
  o.free_y = 1;
  const AssignmentIndexer ix(4, 2);
  for (int t = 0; t < 30; ++t) {
    const auto f = random_formula(rng, o);
    const auto table = evaluate_table(g, 1, 1, *f);
    for (Vertex a = 0; a < 4; ++a) {
      for (Vertex b = 0; b < 4; ++b) {
        const PartialAssignment p(1, 1, {a, b});
        CHECK(static_cast<bool>(table[ix.index(p)]) == evaluate(g, p, *f));
      }
    }
  }
}

TEST_CASE("random formulas lie in the requested fragment") {
  std::mt19937_64 rng(7);
  RandomFormulaOptions o;
  o.k1 = 2;
  o.k2 = 2;
  o.max_rank = 3;
  o.free_x = 0b01;
  o.free_y = 0b10;
  for (int t = 0; t < 200; ++t) {
    const auto f = random_formula(rng, o);
    const auto r = analyze(*f, 2, 2);
    CHECK(r.in_fragment(3));
    CHECK((r.free & ~(0b01u | (0b10u << 2))) == 0u);
    CHECK(structurally_equal(*f, *parse_formula(format_formula(*f, 2), 2, 2)));
  }
}

TEST_CASE("legend parsing") {
  const auto l = parse_legend("0=red,1=blue");
  CHECK(l.by_name.at("blue") == 1);
  CHECK(l.by_id.at(0) == "red");
  CHECK_THROWS_AS(parse_legend("red"), DomainError);
}
