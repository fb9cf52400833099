#include <doctest.h>

#include <set>
#include <sstream>

#include "aecc/graph.hpp"
#include "helpers.hpp"

using namespace aecc;
using namespace testkit;

TEST_CASE("from_edge_list basics") {
  Graph c3 = make(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(c3.num_edges() == 3);
  for (Vertex v = 0; v < 3; ++v) CHECK(c3.degree(v) == 2);

  Graph dup = make(4, {{0, 1}, {0, 1}});
  CHECK(dup.num_edges() == 1);
  CHECK(dup.has_edge(1, 0));
  CHECK(dup.degree(3) == 0);

  try {
    make(2, {{0, 0}});
    FAIL("loop accepted");
  } catch (const GraphError& e) {
    CHECK(e.kind() == GraphError::Kind::LoopEdge);
  }
  CHECK_THROWS_AS(make(2, {{0, 5}}), GraphError);
}

TEST_CASE("max degree") {
  CHECK(complete(4).max_degree() == 3);
  CHECK(star(5).max_degree() == 5);
  CHECK(Graph(4).max_degree() == 0);
}

TEST_CASE("delete_two_vertices") {
  CHECK(delete_two_vertices(cycle(4)).graph.num_vertices() == 0);

  auto k4 = delete_two_vertices(complete(4));
  CHECK(k4.graph == complete(4));

  // K4 with 0-1 subdivided by vertex 4
  Graph sub = make(5, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto h = delete_two_vertices(sub);
  CHECK(h.graph.num_vertices() == 4);
  CHECK(h.graph.num_edges() == 5);
  CHECK_FALSE(h.graph.has_edge(h.from_original[0], h.from_original[1]));
  CHECK(h.from_original[4] == -1);
  for (Vertex x = 0; x < 4; ++x) CHECK(h.to_original[static_cast<size_t>(h.from_original[static_cast<size_t>(x)])] == x);
}

TEST_CASE("block decomposition examples") {
  auto bd = block_decomposition(bowtie());
  CHECK(bd.blocks.size() == 2);
  CHECK(bd.cut_vertices == std::vector<Vertex>{2});

  bd = block_decomposition(cycle(5));
  CHECK(bd.blocks.size() == 1);
  CHECK(bd.cut_vertices.empty());

  bd = block_decomposition(path(4));
  CHECK(bd.blocks.size() == 3);
  CHECK(bd.cut_vertices.size() == 2);
}

TEST_CASE("property: handshake, blocks partition edges, blocks meet at cut vertices") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 300; ++round) {
    const int n = 2 + static_cast<int>(rng() % 11);
    Graph g = random_graph(n, 0.15 + 0.05 * static_cast<double>(rng() % 8), rng);
    int sum = 0;
    for (Vertex v = 0; v < n; ++v) sum += g.degree(v);
    REQUIRE(sum == 2 * g.num_edges());
    if (connected_components(g, false).size() > 1) {
      CHECK_THROWS_AS(block_decomposition(g), GraphError);
      continue;
    }

    auto bd = block_decomposition(g);
    std::multiset<Edge> seen;
    for (const auto& es : bd.block_edges) seen.insert(es.begin(), es.end());
    const auto all = g.edges();
    REQUIRE(seen == std::multiset<Edge>(all.begin(), all.end()));

    for (size_t a = 0; a < bd.blocks.size(); ++a) {
      for (size_t b = a + 1; b < bd.blocks.size(); ++b) {
        std::vector<Vertex> common;
        std::set_intersection(bd.blocks[a].begin(), bd.blocks[a].end(), bd.blocks[b].begin(), bd.blocks[b].end(),
                              std::back_inserter(common));
        REQUIRE(common.size() <= 1);
        if (common.size() == 1) {
          REQUIRE(std::binary_search(bd.cut_vertices.begin(), bd.cut_vertices.end(), common[0]));
        }
      }
    }
    // A block with at least 3 vertices is 2-connected on its own.
    for (const auto& es : bd.block_edges) {
      Graph b = Graph::from_edges(n, es);
      auto sub = induced_subgraph(b, std::vector<Vertex>(bd.blocks[&es - &bd.block_edges[0]]));
      if (sub.graph.num_vertices() >= 3) REQUIRE(is_biconnected(sub.graph));
    }
  }
}

TEST_CASE("property: delete_two_vertices keeps degrees away from 2-vertices") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    const int n = 3 + static_cast<int>(rng() % 10);
    Graph g = random_graph(n, 0.3, rng);
    auto h = delete_two_vertices(g);
    for (Vertex x = 0; x < h.graph.num_vertices(); ++x) {
      const Vertex v = h.to_original[static_cast<size_t>(x)];
      REQUIRE(g.degree(v) != 2);
      bool near_two = false;
      for (Vertex y : g.neighbors(v)) near_two = near_two || g.degree(y) == 2;
      if (!near_two) REQUIRE(h.graph.degree(x) == g.degree(v));
    }
  }
}

TEST_CASE("edge list round trip") {
  std::mt19937_64 rng(3);
  Graph g = random_graph(9, 0.4, rng);
  std::stringstream ss;
  write_edge_list(ss, g);
  CHECK(read_edge_list(ss) == g);
  std::stringstream bad("3\n0 x\n");
  CHECK_THROWS_AS(read_edge_list(bad), GraphError);
}
