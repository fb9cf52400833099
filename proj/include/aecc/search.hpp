#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "aecc/coloring.hpp"
#include "aecc/graph.hpp"

namespace aecc {

/// Dense working coloring with O(1) color lookup per vertex and an
/// incremental bichromatic-cycle test restricted to the colors touched by a
/// single assignment.  Keeps a reference to the graph.
class IncrementalColoring {
 public:
  IncrementalColoring(const Graph& g, int k);

  int palette() const { return k_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int idx) const { return edges_[static_cast<size_t>(idx)]; }
  int index_of(Edge e) const;
  Color color(int idx) const { return color_[static_cast<size_t>(idx)]; }

  /// Free at both ends and, when acyclic is set, closes no bichromatic cycle.
  bool can_assign(int idx, Color c, bool acyclic) const;
  void assign(int idx, Color c);
  void unassign(int idx);

  /// Loads every colored edge of c; returns false if that breaks properness.
  bool load(const EdgeColoring& c);
  EdgeColoring to_coloring() const;

 private:
  Vertex& slot(Vertex v, Color c) { return at_[static_cast<size_t>(v) * static_cast<size_t>(k_ + 1) + static_cast<size_t>(c)]; }
  Vertex slot(Vertex v, Color c) const { return at_[static_cast<size_t>(v) * static_cast<size_t>(k_ + 1) + static_cast<size_t>(c)]; }

  const Graph* g_;
  int k_;
  std::vector<Edge> edges_;
  std::map<Edge, int> index_;
  std::vector<Color> color_;
  std::vector<Vertex> at_;  // at_[v][c] = neighbor over the c-colored edge, or -1
};

struct SearchOptions {
  bool acyclic = true;
  /// Colors are introduced in increasing order (only for searches with no
  /// pre-colored edges).
  bool break_symmetry = false;
  /// Negative means unlimited.
  long long node_limit = -1;
};

struct SearchOutcome {
  std::optional<EdgeColoring> coloring;
  long long nodes = 0;
  /// The search space was fully explored or a solution was found.
  bool complete = true;
};

/// Edges in BFS order from a maximum-degree vertex, component by component.
std::vector<Edge> bfs_edge_order(const Graph& g);

/// Backtracking over all edges with palette 1..k.
SearchOutcome backtrack_coloring(const Graph& g, int k, const SearchOptions& opts);

/// Colors `free_edges` (in the given order) on top of the fixed colored edges
/// of `base`; each free edge tries its current color in `base` first.
SearchOutcome extend_partial(const Graph& g, const EdgeColoring& base, std::span<const Edge> free_edges, int k,
                             const SearchOptions& opts);

}  // namespace aecc
