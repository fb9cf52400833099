#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aecc/coloring.hpp"
#include "aecc/config.hpp"
#include "aecc/graph.hpp"

namespace aecc {

/// Local data around the uncolored edge uv.
struct CaseContext {
  Edge uv;
  Vertex u = 0;
  Vertex v = 0;
  int k = 0;
  ColorSet cu;
  ColorSet cv;
  ColorSet common;
  ColorSet free;                  // C \ (C(u) u C(v))
  std::map<int, ColorSet> s;      // S_k for k = 2..5 (colors at u toward k-neighbors other than v)
  std::map<Color, ColorSet> b;    // B_i for i in C(u) n C(v)
};

/// c must leave uv uncolored.
CaseContext make_context(const Graph& g, Edge uv, const EdgeColoring& c, const Configuration& cfg);

/// A named recoloring family: the edges one branch of the case analysis
/// may touch (uv included).  Colors are found by verified enumeration.
struct Branch {
  std::string name;
  std::vector<Edge> edges;
};

/// Ordered branches for a non-delegated configuration.
std::vector<Branch> case_branches(const Graph& g, Edge uv, const Configuration& cfg);

/// Colors j in C \ (C(u) u C(v)) outside every B_i.
ColorSet gate_colors(const CaseContext& ctx);

/// For A2.3 with d(w) = Delta: the colors j in S_2 outside B_1 n B_2 n B_3
/// (at most one is expected).  nullopt when the shape does not apply.
std::optional<ColorSet> lemma13_exceptions(const Graph& g, Edge uv, const EdgeColoring& c, const Configuration& cfg);

}  // namespace aecc
