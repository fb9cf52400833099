#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <random>
#include <utility>
#include <vector>

#include "aecc/coloring.hpp"
#include "aecc/graph.hpp"
#include "aecc/oracle.hpp"

namespace testkit {

using aecc::Color;
using aecc::Edge;
using aecc::EdgeColoring;
using aecc::Graph;
using aecc::Vertex;

inline Graph make(int n, std::vector<std::pair<int, int>> es) { return Graph::from_edge_list(n, es); }

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return make(n, es);
}

inline Graph path(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return make(n, es);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return make(n, es);
}

inline Graph star(int leaves) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return make(leaves + 1, es);
}

// Cube: vertices are 3-bit strings, edges flip one bit.
inline Graph cube() {
  std::vector<std::pair<int, int>> es;
  for (int x = 0; x < 8; ++x)
    for (int b = 1; b < 8; b <<= 1)
      if (x < (x ^ b)) es.emplace_back(x, x ^ b);
  return make(8, es);
}

inline Graph dodecahedron() {
  // outer 5-cycle 0..4, middle 10-cycle 5..14, inner 5-cycle 15..19
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, 5 + 2 * i);
    es.emplace_back(15 + i, 15 + (i + 1) % 5);
    es.emplace_back(15 + i, 6 + 2 * i);
  }
  for (int i = 0; i < 10; ++i) es.emplace_back(5 + i, 5 + (i + 1) % 10);
  return make(20, es);
}

inline Graph bowtie() { return make(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}); }

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) es.emplace_back(i, j);
  return make(n, es);
}

// Greedy proper coloring in a random edge order with random color choice among
// the free ones; edges with no free color stay uncolored.
inline EdgeColoring random_proper(const Graph& g, int k, std::mt19937_64& rng) {
  EdgeColoring c(g, k);
  auto es = g.edges();
  std::shuffle(es.begin(), es.end(), rng);
  for (const Edge& e : es) {
    std::vector<Color> ok;
    for (Color col = 1; col <= k; ++col) {
      bool clash = false;
      for (Vertex x : {e.u, e.v})
        for (Vertex y : g.neighbors(x))
          if (c.color(x, y) == col) clash = true;
      if (!clash) ok.push_back(col);
    }
    if (!ok.empty()) c.set(e, ok[std::uniform_int_distribution<size_t>(0, ok.size() - 1)(rng)]);
  }
  return c;
}

// The shared desk-scale corpus: n in [8,16], 2-connected, planar, no
// intersecting triangles, Delta >= 5.
inline std::vector<Graph> corpus(int count, std::uint64_t seed = 20240601) {
  aecc::GeneratorSpec spec;
  spec.seed = seed;
  return aecc::generate(spec, count);
}

// Endpoints (with the color of the last edge) of alternating (a,b) paths
// that start at u with an a-colored edge.
inline std::set<std::pair<Vertex, Color>> alternating_ends(const Graph& g, const EdgeColoring& c, Vertex u, Color a, Color b) {
  std::set<std::pair<Vertex, Color>> reach;
  std::vector<bool> on(static_cast<size_t>(g.num_vertices()), false);
  std::function<void(Vertex, Color)> go = [&](Vertex x, Color want) {
    for (Vertex y : g.neighbors(x)) {
      if (on[static_cast<size_t>(y)] || c.color(x, y) != want) continue;
      reach.insert({y, want});
      on[static_cast<size_t>(y)] = true;
      go(y, want == a ? b : a);
      on[static_cast<size_t>(y)] = false;
    }
  };
  on[static_cast<size_t>(u)] = true;
  go(u, a);
  return reach;
}

}  // namespace testkit
