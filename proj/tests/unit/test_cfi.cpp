#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "rqwl/cfi.hpp"
#include "rqwl/json_io.hpp"

using namespace rqwl;

TEST_CASE("validate_base") {
  CHECK_NOTHROW(validate_base(with_base_coloring(complete_graph(3))));
  CHECK_THROWS_AS(validate_base(complete_graph(3)), DomainError);
  const std::vector<Edge> e{{0, 1}, {2, 3}};
  const auto two_k2 = with_base_coloring(ColoredGraph::make(4, e));
  CHECK_THROWS_AS(validate_base(two_k2), DomainError);
}

TEST_CASE("small CFI graphs") {
  const auto k2 = validate_base(with_base_coloring(complete_graph(2)));
  const auto x2 = cfi_untwisted(k2);
  CHECK(x2.graph.order() == 2);
  CHECK(x2.graph.edge_count() == 1);

  const auto k3 = validate_base(with_base_coloring(complete_graph(3)));
  const auto x = cfi_untwisted(k3);
  CHECK(x.graph.order() == 6);
  CHECK(x.graph.edge_count() == 6);
  CHECK(connected_components(x.graph) == 2);
  const auto xt = cfi_twisted(k3);
  CHECK(xt.graph.order() == 6);
  CHECK(xt.graph.edge_count() == 6);
  CHECK(connected_components(xt.graph) == 1);
  CHECK(degree_profiles(xt.graph).degrees == std::vector<int>(6, 2));
  CHECK(xt.twists == std::vector<Edge>{{0, 1}});
}

TEST_CASE("CFI tags and provenance") {
  const auto k4 = validate_base(with_base_coloring(complete_graph(4)));
  const auto x = cfi_untwisted(k4);
  CHECK(x.graph.order() == 16);  // 4 gadgets of 2^(3-1) vertices
  for (size_t v = 0; v < x.tags.size(); ++v) {
    int parity = 0;
    for (int b : x.tags[v].bits) parity ^= b;
    CHECK(parity == 0);
    CHECK(x.graph.color(static_cast<Vertex>(v)) == x.tags[v].base);
  }
  CHECK(x.gadget_start.back() == 16);
  const auto prov = provenance_to_json(x);
  CHECK(prov.size() == 16);
  CHECK_THROWS_AS(build_cfi(validate_base(with_base_coloring(path_graph(3))), {{0, 2}}),
                  DomainError);
}

TEST_CASE("CFI parity on K4") {
  const auto k4 = validate_base(with_base_coloring(complete_graph(4)));
  const auto x0 = cfi_untwisted(k4);
  const auto x2 = build_cfi(k4, {{0, 1}, {2, 3}});
  const auto x1 = build_cfi(k4, {{1, 2}});
  CHECK(iso_oracle(x0.graph, x2.graph).has_value());
  CHECK_FALSE(iso_oracle(x0.graph, x1.graph).has_value());
}

TEST_CASE("JSON round trip") {
  const auto g = grid(3, 12);
  const auto j = graph_to_json(g);
  CHECK(graph_from_json(j) == g);
  CHECK(graph_from_json(nlohmann::json::parse(j.dump())) == g);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n": 2, "edges": [[0, 0]]})")),
                  DomainError);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"edges": []})")), DomainError);
}
