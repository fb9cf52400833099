#include "aecc/planar.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

namespace aecc {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(static_cast<size_t>(g.num_vertices()));
  int idx = 0;
  for (const Edge& e : g.edges()) {
    auto [be, ok] = boost::add_edge(static_cast<size_t>(e.u), static_cast<size_t>(e.v), bg);
    (void)ok;
    boost::put(boost::edge_index, bg, be, idx++);
  }
  return bg;
}

}  // namespace

int RotationSystem::position(Vertex v, Vertex neighbor) const {
  const auto& a = around(v);
  auto it = std::find(a.begin(), a.end(), neighbor);
  return it == a.end() ? -1 : static_cast<int>(it - a.begin());
}

Vertex RotationSystem::successor(Vertex v, Vertex neighbor) const {
  const auto& a = around(v);
  const int p = position(v, neighbor);
  return a[static_cast<size_t>((p + 1) % static_cast<int>(a.size()))];
}

Vertex RotationSystem::predecessor(Vertex v, Vertex neighbor) const {
  const auto& a = around(v);
  const int k = static_cast<int>(a.size());
  const int p = position(v, neighbor);
  return a[static_cast<size_t>((p + k - 1) % k)];
}

bool RotationSystem::consistent_with(const Graph& g) const {
  if (num_vertices() != g.num_vertices()) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<Vertex> s = around(v);
    std::sort(s.begin(), s.end());
    if (s != g.neighbors(v)) return false;
  }
  return true;
}

bool RotationSystem::equivalent(const RotationSystem& other) const {
  if (num_vertices() != other.num_vertices()) return false;
  for (Vertex v = 0; v < num_vertices(); ++v) {
    const auto& a = around(v);
    const auto& b = other.around(v);
    if (a.size() != b.size()) return false;
    if (a.empty()) continue;
    auto it = std::find(b.begin(), b.end(), a.front());
    if (it == b.end()) return false;
    std::vector<Vertex> rotated(it, b.end());
    rotated.insert(rotated.end(), b.begin(), it);
    if (rotated != a) return false;
  }
  return true;
}

std::vector<Vertex> Face::walk() const {
  std::vector<Vertex> out;
  out.reserve(boundary.size());
  for (const Dart& d : boundary) out.push_back(d.tail);
  return out;
}

std::vector<Vertex> Face::vertices() const {
  std::vector<Vertex> out = walk();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_planar(const Graph& g) {
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

RotationSystem planar_embedding(const Graph& g) {
  if (connected_components(g, false).size() > 1) {
    throw GraphError(GraphError::Kind::Disconnected, "planar embedding needs a connected graph");
  }
  BoostGraph bg = to_boost(g);
  std::vector<std::vector<BoostEdge>> embedding(boost::num_vertices(bg));
  std::vector<BoostEdge> kuratowski;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  if (!planar) {
    std::vector<Edge> witness;
    for (const BoostEdge& e : kuratowski) {
      witness.push_back(Edge::make(static_cast<Vertex>(boost::source(e, bg)), static_cast<Vertex>(boost::target(e, bg))));
    }
    std::sort(witness.begin(), witness.end());
    throw NonPlanarError(std::move(witness));
  }
  std::vector<std::vector<Vertex>> order(static_cast<size_t>(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (const BoostEdge& e : embedding[static_cast<size_t>(v)]) {
      const auto s = static_cast<Vertex>(boost::source(e, bg));
      const auto t = static_cast<Vertex>(boost::target(e, bg));
      order[static_cast<size_t>(v)].push_back(s == v ? t : s);
    }
  }
  return RotationSystem(std::move(order));
}

std::vector<Face> faces(const Graph& g, const RotationSystem& rot) {
  std::vector<Face> out;
  if (g.num_edges() == 0) {
    out.push_back(Face{});
    return out;
  }
  std::map<std::pair<Vertex, Vertex>, bool> used;
  for (Vertex a = 0; a < g.num_vertices(); ++a) {
    for (Vertex b : rot.around(a)) {
      if (used[{a, b}]) continue;
      Face f;
      Dart d{a, b};
      while (!used[{d.tail, d.head}]) {
        used[{d.tail, d.head}] = true;
        f.boundary.push_back(d);
        d = Dart{d.head, rot.successor(d.head, d.tail)};
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

FaceIncidence face_incidence(const Graph& g, const RotationSystem& rot, const std::vector<Face>& fs) {
  std::map<std::pair<Vertex, Vertex>, std::pair<int, int>> where;
  for (size_t fi = 0; fi < fs.size(); ++fi) {
    for (size_t p = 0; p < fs[fi].boundary.size(); ++p) {
      const Dart& d = fs[fi].boundary[p];
      where[{d.tail, d.head}] = {static_cast<int>(fi), static_cast<int>(p)};
    }
  }
  FaceIncidence inc;
  inc.slots.resize(static_cast<size_t>(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto& a = rot.around(v);
    const size_t k = a.size();
    for (size_t i = 0; i < k; ++i) {
      // The angle between a[i] and a[i+1] is traversed as (a[i] -> v, v -> a[i+1]).
      const Vertex next = a[(i + 1) % k];
      auto [face, pos] = where.at({v, next});
      inc.slots[static_cast<size_t>(v)].push_back({face, pos});
    }
  }
  return inc;
}

std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (Vertex a = 0; a < g.num_vertices(); ++a) {
    const auto& na = g.neighbors(a);
    for (Vertex b : na) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c <= b) continue;
        if (std::binary_search(na.begin(), na.end(), c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

bool has_intersecting_triangles(const Graph& g) {
  std::vector<int> hits(static_cast<size_t>(g.num_vertices()), 0);
  for (const Triangle& t : triangles(g)) {
    for (Vertex x : t) {
      if (++hits[static_cast<size_t>(x)] > 1) return true;
    }
  }
  return false;
}

std::string embedding_to_dot(const Graph& g, const RotationSystem& rot) {
  std::ostringstream os;
  os << "graph embedding {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    os << "  " << v << ";  // rotation:";
    for (Vertex y : rot.around(v)) os << ' ' << y;
    os << '\n';
  }
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  const auto fs = faces(g, rot);
  for (size_t i = 0; i < fs.size(); ++i) {
    os << "  // face " << i << " (degree " << fs[i].degree() << "):";
    for (Vertex x : fs[i].walk()) os << ' ' << x;
    os << '\n';
  }
  os << "}\n";
  return os.str();
}

}  // namespace aecc
