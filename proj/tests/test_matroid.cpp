#include <catch2/catch_amalgamated.hpp>

#include "hychrom/generators.hpp"
#include "hychrom/matroid.hpp"
#include "hychrom/verify.hpp"
#include "oracles.hpp"

using namespace hychrom;

TEST_CASE("hypercircuits of graphs are the simple cycles") {
  for (const auto& rec : exhaustive_graph_family(5)) {
    const Hypergraph& g = rec.h;
    std::uint64_t full = full_edge_mask(g);
    for (std::uint64_t mask = 1; mask <= full && full; ++mask) {
      // a cycle: k edges spanning k vertices, connected, all degrees 2
      int k = std::popcount(mask);
      std::uint64_t span = spanned_vertices(g, mask);
      bool cycle = std::popcount(span) == k;
      if (cycle) {
        std::vector<int> deg(g.num_vertices(), 0);
        for (std::uint64_t rest = mask; rest; rest &= rest - 1)
          for (int v : g.edge(std::countr_zero(rest))) ++deg[v];
        for (int v = 0; v < g.num_vertices(); ++v)
          if ((span >> v & 1) && deg[v] != 2) cycle = false;
      }
      if (cycle)
        cycle = component_count(g, mask) ==
                g.num_vertices() - std::popcount(span) + 1;
      REQUIRE(is_hypercircuit(g, mask) == cycle);
    }
  }
}

TEST_CASE("hypercircuit catalog for small hypergraphs") {
  // a triple closed by two of its pairs spans 3 vertices with 3 edges
  Hypergraph h(3, {{0, 1}, {0, 1, 2}, {1, 2}});
  REQUIRE(is_hypercircuit(h, 0b111));
  REQUIRE_FALSE(is_hypercircuit(h, 0b011));
  REQUIRE_FALSE(is_hypercircuit(h, 0b000));
  // a pair nested inside a triple stays independent
  Hypergraph nested(3, {{0, 1}, {0, 1, 2}});
  REQUIRE(is_hyperforest(nested, 0b11));
  REQUIRE(hypercircuit_masks(nested).empty());
  // the four triples on 4 vertices form the unique circuit there
  Hypergraph k43 = complete_uniform(4, 3);
  REQUIRE(hypercircuit_masks(k43) == std::vector<std::uint64_t>{0b1111});
}

TEST_CASE("rank agrees with the labeling oracle and the forest maximum") {
  auto suites = exhaustive_uniform_family(4, 3);
  auto rnd = random_mixed_family(30, 11);
  suites.insert(suites.end(), rnd.begin(), rnd.end());
  for (const auto& rec : suites) {
    const Hypergraph& h = rec.h;
    if (h.num_vertices() > 5 || h.num_edges() > 6) continue;
    auto table = rank_table(h);
    auto forest = hyperforest_table(h);
    std::uint64_t full = full_edge_mask(h);
    for (std::uint64_t z = 0;; ++z) {
      REQUIRE(table[z] == oracle::rank_by_labels(h, z));
      REQUIRE(table[z] == rank_via_independence(h, z));
      REQUIRE(static_cast<bool>(forest[z]) ==
              (table[z] == std::popcount(z)));
      REQUIRE(is_hyperforest(h, z) == static_cast<bool>(forest[z]));
      if (z == full) break;
    }
    auto rq = rank(h, full);
    REQUIRE(rq.value == table[full]);
    // the witness partition attains the minimum
    int witness_value = h.num_vertices() -
                        static_cast<int>(rq.witness_partition.size()) +
                        std::popcount(crossing_edge_mask(h, rq.witness_partition) & full);
    REQUIRE(witness_value == rq.value);
  }
}

TEST_CASE("graph hyperforests are ordinary forests") {
  for (const auto& rec : exhaustive_graph_family(5)) {
    auto forest = hyperforest_table(rec.h);
    for (std::uint64_t mask = 0; mask < forest.size(); ++mask)
      REQUIRE(static_cast<bool>(forest[mask]) ==
              oracle::graph_forest(rec.h, mask));
  }
}

TEST_CASE("hyperforests never exceed n-1 edges") {
  for (const auto& rec : random_mixed_family(40, 17)) {
    if (rec.h.num_vertices() == 0) continue;
    auto forest = hyperforest_table(rec.h);
    for (std::uint64_t mask = 0; mask < forest.size(); ++mask)
      if (forest[mask])
        REQUIRE(std::popcount(mask) <= rec.h.num_vertices() - 1);
    REQUIRE(rank(rec.h, full_edge_mask(rec.h)).value <=
            rec.h.num_vertices() - 1);
  }
}

TEST_CASE("partition connectivity matches full rank") {
  REQUIRE(is_partition_connected(Hypergraph(3, {{0, 1}, {1, 2}})));
  REQUIRE_FALSE(is_partition_connected(Hypergraph(3, {{0, 1, 2}})));
  REQUIRE(is_partition_connected(complete_uniform(4, 3)));
  REQUIRE_FALSE(is_partition_connected(Hypergraph(5, {{0, 1, 2}, {2, 3, 4}})));
  for (const auto& rec : random_mixed_family(40, 23)) {
    if (rec.h.num_vertices() == 0) continue;
    bool pc = is_partition_connected(rec.h);
    REQUIRE(pc == (rank(rec.h, full_edge_mask(rec.h)).value ==
                   rec.h.num_vertices() - 1));
  }
}

TEST_CASE("hypercircuits induce partition-connected pieces") {
  for (const auto& rec : random_mixed_family(60, 29)) {
    if (rec.h.num_vertices() > 6) continue;
    for (std::uint64_t mask : hypercircuit_masks(rec.h)) {
      Hypergraph piece =
          induced(edge_subset_hypergraph(rec.h, mask),
                  spanned_vertices(rec.h, mask))
              .subgraph;
      REQUIRE(is_partition_connected(piece));
    }
  }
}

TEST_CASE("maximal bad partition is unique and matches the decomposition") {
  Hypergraph two(5, {{0, 1, 2}, {2, 3, 4}});
  auto bad = maximal_bad_partition(two);
  REQUIRE(bad.has_value());
  REQUIRE(bad->part_masks == singleton_partition(5));
  REQUIRE(bad->crossing_count == 2);
  REQUIRE(bad->score == Rational(2));
  REQUIRE(partition_connected_decomposition(two) == bad->part_masks);

  // tying {0,1,2} together with its pairs leaves one nontrivial piece
  Hypergraph mixed(5, {{0, 1, 2}, {0, 1}, {1, 2}, {2, 3, 4}});
  auto bad2 = maximal_bad_partition(mixed);
  REQUIRE(bad2.has_value());
  REQUIRE(bad2->part_masks ==
          std::vector<std::uint64_t>{0b00111, 0b01000, 0b10000});
  REQUIRE(partition_connected_decomposition(mixed) == bad2->part_masks);

  REQUIRE_FALSE(maximal_bad_partition(complete_uniform(4, 3)).has_value());
  REQUIRE(partition_connected_decomposition(complete_uniform(4, 3)) ==
          std::vector<std::uint64_t>{0b1111});

  for (const auto& rec : random_mixed_family(60, 37)) {
    if (rec.h.num_vertices() == 0) continue;
    auto mb = maximal_bad_partition(rec.h);
    auto pieces = partition_connected_decomposition(rec.h);
    if (mb) {
      REQUIRE(mb->part_masks == pieces);
      REQUIRE(mb->num_parts() >= 2);
      // every part induces a partition-connected subhypergraph
      for (std::uint64_t part : mb->part_masks)
        REQUIRE(is_partition_connected(induced(rec.h, part).subgraph));
    } else {
      REQUIRE(pieces.size() == 1);
    }
  }
}

TEST_CASE("euler inequality holds for primal and dual rank") {
  for (const auto& rec : random_mixed_family(40, 41)) {
    const Hypergraph& h = rec.h;
    auto table = rank_table(h);
    std::uint64_t full = full_edge_mask(h);
    auto primal = euler_inequality_check(
        h.num_edges(), [&](std::uint64_t s) { return table[s]; });
    REQUIRE(primal.ok);
    auto dual = euler_inequality_check(
        h.num_edges(), [&](std::uint64_t s) {
          return std::popcount(s) + table[full & ~s] - table[full];
        });
    REQUIRE(dual.ok);
    REQUIRE(dual_rank(h, full) == h.num_edges() - table[full]);
  }
}

TEST_CASE("span table matches per-subset spans") {
  Hypergraph h(6, {{0, 1, 2}, {2, 3}, {4, 5}});
  auto spans = spanned_vertices_table(h);
  for (std::uint64_t mask = 0; mask < spans.size(); ++mask)
    REQUIRE(spans[mask] == spanned_vertices(h, mask));
}
