#include "aecc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace aecc {

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw GraphError(GraphError::Kind::VertexOutOfRange,
                       "edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range for n=" +
                           std::to_string(n));
    }
    if (a == b) throw GraphError(GraphError::Kind::LoopEdge, "loop edge at vertex " + std::to_string(a));
    es.push_back(Edge::make(a, b));
  }
  return from_edges(n, es);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n || e.v < 0 || e.u >= n) {
      throw GraphError(GraphError::Kind::VertexOutOfRange, "edge " + to_string(e) + " out of range");
    }
    if (e.u == e.v) throw GraphError(GraphError::Kind::LoopEdge, "loop edge at vertex " + std::to_string(e.u));
    g.adj_[static_cast<size_t>(e.u)].push_back(e.v);
    g.adj_[static_cast<size_t>(e.v)].push_back(e.u);
  }
  size_t total = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    total += nb.size();
  }
  g.m_ = static_cast<int>(total / 2);
  return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= num_vertices() || b >= num_vertices()) return false;
  const auto& nb = adj_[static_cast<size_t>(a)];
  return std::binary_search(nb.begin(), nb.end(), b);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(m_));
  for (Vertex a = 0; a < num_vertices(); ++a) {
    for (Vertex b : adj_[static_cast<size_t>(a)]) {
      if (a < b) out.push_back({a, b});
    }
  }
  return out;
}

Graph Graph::without_edge(Edge e) const {
  Graph g = *this;
  if (!has_edge(e.u, e.v)) return g;
  auto drop = [&](Vertex a, Vertex b) {
    auto& nb = g.adj_[static_cast<size_t>(a)];
    nb.erase(std::lower_bound(nb.begin(), nb.end(), b));
  };
  drop(e.u, e.v);
  drop(e.v, e.u);
  --g.m_;
  return g;
}

Graph Graph::with_edge(Edge e) const {
  if (e.u == e.v) throw GraphError(GraphError::Kind::LoopEdge, "loop edge at vertex " + std::to_string(e.u));
  if (e.u < 0 || e.v >= num_vertices()) throw GraphError(GraphError::Kind::VertexOutOfRange, to_string(e));
  Graph g = *this;
  if (has_edge(e.u, e.v)) return g;
  auto add = [&](Vertex a, Vertex b) {
    auto& nb = g.adj_[static_cast<size_t>(a)];
    nb.insert(std::lower_bound(nb.begin(), nb.end(), b), b);
  };
  add(e.u, e.v);
  add(e.v, e.u);
  ++g.m_;
  return g;
}

Graph Graph::without_vertex_edges(Vertex x) const {
  Graph g = *this;
  for (Vertex y : adj_[static_cast<size_t>(x)]) {
    auto& nb = g.adj_[static_cast<size_t>(y)];
    nb.erase(std::lower_bound(nb.begin(), nb.end(), x));
  }
  g.m_ -= degree(x);
  g.adj_[static_cast<size_t>(x)].clear();
  return g;
}

int Graph::count_neighbors_of_degree(Vertex v, int k) const {
  int c = 0;
  for (Vertex y : neighbors(v)) c += degree(y) == k ? 1 : 0;
  return c;
}

std::uint64_t Graph::hash() const {
  // FNV-1a over n and the edge list.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(num_vertices()));
  for (const Edge& e : edges()) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
  }
  return h;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  InducedSubgraph out;
  out.from_original.assign(static_cast<size_t>(g.num_vertices()), -1);
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) {
    out.from_original[static_cast<size_t>(v)] = static_cast<Vertex>(out.to_original.size());
    out.to_original.push_back(v);
  }
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    Vertex a = out.from_original[static_cast<size_t>(e.u)];
    Vertex b = out.from_original[static_cast<size_t>(e.v)];
    if (a >= 0 && b >= 0) es.push_back(Edge::make(a, b));
  }
  out.graph = Graph::from_edges(static_cast<int>(out.to_original.size()), es);
  return out;
}

InducedSubgraph delete_two_vertices(const Graph& g) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 2) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g, bool include_isolated) {
  const int n = g.num_vertices();
  std::vector<int> seen(static_cast<size_t>(n), 0);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    if (g.degree(s) == 0 && !include_isolated) continue;
    std::vector<Vertex> comp{s};
    seen[static_cast<size_t>(s)] = 1;
    for (size_t i = 0; i < comp.size(); ++i) {
      for (Vertex y : g.neighbors(comp[i])) {
        if (!seen[static_cast<size_t>(y)]) {
          seen[static_cast<size_t>(y)] = 1;
          comp.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g, true).size() <= 1; }

BlockDecomposition block_decomposition(const Graph& g) {
  if (connected_components(g, false).size() > 1) {
    throw GraphError(GraphError::Kind::Disconnected, "block decomposition needs a connected graph");
  }
  const int n = g.num_vertices();
  BlockDecomposition out;
  std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<int> is_cut(static_cast<size_t>(n), 0);
  std::vector<Edge> edge_stack;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    size_t next;
    int children;
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[static_cast<size_t>(root)] >= 0 || g.degree(root) == 0) continue;
    std::vector<Frame> stack{{root, -1, 0, 0}};
    disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex y = nb[f.next++];
        if (y == f.parent) continue;
        if (disc[static_cast<size_t>(y)] < 0) {
          edge_stack.push_back(Edge::make(f.v, y));
          ++f.children;
          disc[static_cast<size_t>(y)] = low[static_cast<size_t>(y)] = timer++;
          stack.push_back({y, f.v, 0, 0});
        } else if (disc[static_cast<size_t>(y)] < disc[static_cast<size_t>(f.v)]) {
          edge_stack.push_back(Edge::make(f.v, y));
          low[static_cast<size_t>(f.v)] = std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(y)]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      Vertex p = stack.back().v;
      low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(done.v)]);
      if (low[static_cast<size_t>(done.v)] >= disc[static_cast<size_t>(p)]) {
        if (stack.size() > 1 || stack.back().children > 1) is_cut[static_cast<size_t>(p)] = 1;
        std::vector<Edge> block;
        const Edge tree_edge = Edge::make(p, done.v);
        while (!edge_stack.empty()) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == tree_edge) break;
        }
        std::sort(block.begin(), block.end());
        std::vector<Vertex> verts;
        for (const Edge& e : block) {
          verts.push_back(e.u);
          verts.push_back(e.v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        out.blocks.push_back(std::move(verts));
        out.block_edges.push_back(std::move(block));
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[static_cast<size_t>(v)]) out.cut_vertices.push_back(v);
  }
  for (size_t b = 0; b < out.blocks.size(); ++b) {
    for (Vertex v : out.blocks[b]) {
      if (is_cut[static_cast<size_t>(v)]) out.tree.emplace_back(static_cast<int>(b), v);
    }
  }
  return out;
}

bool is_biconnected(const Graph& g) {
  if (g.num_edges() == 0) return false;
  if (connected_components(g, false).size() != 1) return false;
  return block_decomposition(g).blocks.size() == 1;
}

Graph read_edge_list(std::istream& in) {
  std::vector<long long> nums;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        size_t used = 0;
        long long x = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        nums.push_back(x);
      } catch (const std::exception&) {
        throw GraphError(GraphError::Kind::Parse, "line " + std::to_string(line_no) + ": bad token '" + tok + "'");
      }
    }
  }
  if (nums.size() < 2) throw GraphError(GraphError::Kind::Parse, "missing header 'n m'");
  const long long n = nums[0], m = nums[1];
  if (n < 0 || m < 0) throw GraphError(GraphError::Kind::Parse, "negative header value");
  if (nums.size() != static_cast<size_t>(2 + 2 * m)) {
    throw GraphError(GraphError::Kind::Parse, "expected " + std::to_string(m) + " edges, found " +
                                                  std::to_string((nums.size() - 2) / 2) + " values pairs");
  }
  std::vector<std::pair<int, int>> edges;
  for (long long i = 0; i < m; ++i) {
    edges.emplace_back(static_cast<int>(nums[static_cast<size_t>(2 + 2 * i)]),
                       static_cast<int>(nums[static_cast<size_t>(3 + 2 * i)]));
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError(GraphError::Kind::Parse, "cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace aecc
