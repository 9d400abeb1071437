#include <catch2/catch_amalgamated.hpp>

#include "hychrom/generators.hpp"
#include "hychrom/hypergraph.hpp"

using namespace hychrom;

TEST_CASE("construction canonicalizes vertex and edge order") {
  Hypergraph h(4, {{2, 1}, {3, 0, 2}});
  REQUIRE(h.edge(0) == std::vector<int>{0, 2, 3});
  REQUIRE(h.edge(1) == std::vector<int>{1, 2});
  REQUIRE(h.max_degree() == 2);
  REQUIRE(h.degree(2) == 2);
  REQUIRE_FALSE(h.uniformity().has_value());
  REQUIRE(max_edge_size(h) == 3);
  REQUIRE(Hypergraph(5, {{0, 1}, {3, 4}}).uniformity() == 2);
}

TEST_CASE("construction rejects malformed input") {
  REQUIRE_THROWS_AS(Hypergraph(3, {{0}}), ParseError);
  REQUIRE_THROWS_AS(Hypergraph(3, {{0, 0}}), ParseError);
  REQUIRE_THROWS_AS(Hypergraph(3, {{0, 3}}), ParseError);
  REQUIRE_THROWS_AS(Hypergraph(3, {{-1, 1}}), ParseError);
  REQUIRE_THROWS_AS(Hypergraph(3, {{0, 1}, {1, 0}}), ParseError);
  REQUIRE_THROWS_AS(Hypergraph(-1, {}), ParseError);
}

TEST_CASE("json io round trips through the canonical form") {
  Hypergraph h(5, {{4, 0}, {1, 2, 3}});
  std::string s = serialize_hypergraph(h);
  REQUIRE(s == R"({"edges":[[0,4],[1,2,3]],"num_vertices":5})");
  REQUIRE(parse_hypergraph(s) == h);
  REQUIRE_THROWS_AS(parse_hypergraph(std::string("[1,2]")), ParseError);
  REQUIRE_THROWS_AS(parse_hypergraph(std::string("{\"edges\":[]}")),
                    ParseError);
  REQUIRE_THROWS_AS(parse_hypergraph(std::string("not json")), ParseError);
}

TEST_CASE("component count includes isolated vertices") {
  Hypergraph h(6, {{0, 1}, {1, 2}, {3, 4, 5}});
  REQUIRE(component_count(h, 0b000) == 6);
  REQUIRE(component_count(h, 0b001) == 5);
  REQUIRE(component_count(h, 0b111) == 2);
  REQUIRE_FALSE(is_connected_spanning(h, 0b111));
  REQUIRE(is_connected_spanning(Hypergraph(3, {{0, 1}, {1, 2}}), 0b11));
  REQUIRE(is_connected_spanning(Hypergraph(0, {}), 0));
}

TEST_CASE("induced subhypergraph keeps fully contained edges") {
  Hypergraph h(5, {{0, 1, 2}, {2, 3}, {3, 4}});
  auto sub = induced(h, 0b00111);
  REQUIRE(sub.subgraph.num_vertices() == 3);
  REQUIRE(sub.subgraph.num_edges() == 1);
  REQUIRE(sub.subgraph.edge(0) == std::vector<int>{0, 1, 2});
  REQUIRE(sub.vertex_map == std::vector<int>{0, 1, 2});
  auto sub2 = induced(h, 0b11000);
  REQUIRE(sub2.subgraph.num_edges() == 1);
  REQUIRE(sub2.subgraph.edge(0) == std::vector<int>{0, 1});
  REQUIRE(sub2.vertex_map == std::vector<int>{3, 4});
}

TEST_CASE("edge subset subhypergraph keeps the vertex set") {
  Hypergraph h(5, {{0, 1, 2}, {2, 3}, {3, 4}});
  auto s = edge_subset_hypergraph(h, 0b101);
  REQUIRE(s.num_vertices() == 5);
  REQUIRE(s.num_edges() == 2);
  REQUIRE(s.edge(0) == std::vector<int>{0, 1, 2});
  REQUIRE(s.edge(1) == std::vector<int>{3, 4});
}

TEST_CASE("intersection graph reflects pairwise overlaps") {
  Hypergraph h(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
  auto g = intersection_graph(h);
  REQUIRE(g.node_count == 3);
  REQUIRE(g.adjacency.size() == 3);
  REQUIRE(g.max_degree() == 2);
  Hypergraph disjoint(4, {{0, 1}, {2, 3}});
  REQUIRE(intersection_graph(disjoint).adjacency.empty());
}

TEST_CASE("generator families have the declared shapes") {
  REQUIRE(single_edge(3).num_edges() == 1);
  REQUIRE(complete_uniform(5, 3).num_edges() == 10);
  REQUIRE(complete_uniform(5, 3).max_degree() == 6);
  REQUIRE(tight_cycle(6, 3).num_edges() == 6);
  REQUIRE(tight_cycle(6, 3).max_degree() == 3);
  auto lp = loose_path(3, 3);
  REQUIRE(lp.num_vertices() == 7);
  REQUIRE(lp.num_edges() == 3);
  REQUIRE(lp.max_degree() == 2);
  REQUIRE(random_uniform(6, 3, 1.0, 9) == complete_uniform(6, 3));
  REQUIRE(random_uniform(6, 3, 0.0, 9).num_edges() == 0);
  REQUIRE(random_uniform(6, 3, 0.5, 42) == random_uniform(6, 3, 0.5, 42));
  REQUIRE_THROWS_AS(tight_cycle(3, 3), ParseError);
  REQUIRE_THROWS_AS(single_edge(1), ParseError);
  REQUIRE_THROWS_AS(generate("unknown", FamilyParams{}), ParseError);
}
