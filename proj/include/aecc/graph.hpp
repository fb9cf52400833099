#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aecc {

using Vertex = int;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  bool has(Vertex x) const { return x == u || x == v; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

class GraphError : public std::runtime_error {
 public:
  enum class Kind { LoopEdge, VertexOutOfRange, Disconnected, Parse };

  GraphError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Values are immutable once built; the edit operations return new graphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<size_t>(n)) {}

  /// Duplicates collapse; loops and out-of-range endpoints throw GraphError.
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return m_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<size_t>(v)]; }
  bool has_edge(Vertex a, Vertex b) const;
  int max_degree() const;

  /// All edges in ascending (u, v) order.
  std::vector<Edge> edges() const;

  Graph without_edge(Edge e) const;
  Graph with_edge(Edge e) const;
  Graph without_vertex_edges(Vertex x) const;

  /// Number of neighbors of v whose degree is exactly k.
  int count_neighbors_of_degree(Vertex v, int k) const;

  std::uint64_t hash() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  int m_ = 0;
};

/// A graph over a subset of another graph's vertices, with compacted ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;    // new id -> original id
  std::vector<Vertex> from_original;  // original id -> new id, or -1
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Removes every vertex of degree exactly 2 in a single pass.
InducedSubgraph delete_two_vertices(const Graph& g);

/// Components over the vertices with at least one edge; isolated vertices
/// are reported as singleton components only when include_isolated is set.
std::vector<std::vector<Vertex>> connected_components(const Graph& g, bool include_isolated = true);

bool is_connected(const Graph& g);

struct BlockDecomposition {
  std::vector<std::vector<Vertex>> blocks;     // sorted vertex sets
  std::vector<std::vector<Edge>> block_edges;  // parallel to blocks
  std::vector<Vertex> cut_vertices;            // sorted
  std::vector<std::pair<int, Vertex>> tree;    // (block index, cut vertex) incidences
};

/// Biconnected components of a connected graph; isolated vertices are ignored
/// when the rest of the graph is connected.  Throws Disconnected otherwise.
BlockDecomposition block_decomposition(const Graph& g);

/// True when the non-isolated part of g is connected, has no cut vertex and
/// at least three vertices, or is a single edge.
bool is_biconnected(const Graph& g);

/// Text format: "n m" then m lines "u v"; '#' starts a comment.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace aecc
