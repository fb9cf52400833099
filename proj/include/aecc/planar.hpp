#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aecc/graph.hpp"

namespace aecc {

class NonPlanarError : public std::runtime_error {
 public:
  NonPlanarError(std::vector<Edge> witness)
      : std::runtime_error("graph is not planar"), witness_(std::move(witness)) {}
  /// Edges of a Kuratowski subdivision, possibly empty.
  const std::vector<Edge>& witness() const { return witness_; }

 private:
  std::vector<Edge> witness_;
};

/// Cyclic order of neighbors around every vertex.
class RotationSystem {
 public:
  RotationSystem() = default;
  explicit RotationSystem(std::vector<std::vector<Vertex>> order) : order_(std::move(order)) {}

  int num_vertices() const { return static_cast<int>(order_.size()); }
  const std::vector<Vertex>& around(Vertex v) const { return order_[static_cast<size_t>(v)]; }
  int position(Vertex v, Vertex neighbor) const;
  Vertex successor(Vertex v, Vertex neighbor) const;
  Vertex predecessor(Vertex v, Vertex neighbor) const;

  /// Neighbor multisets match the graph's adjacency.
  bool consistent_with(const Graph& g) const;

  /// Equality up to rotating each cyclic list.
  bool equivalent(const RotationSystem& other) const;

 private:
  std::vector<std::vector<Vertex>> order_;
};

struct Dart {
  Vertex tail = 0;
  Vertex head = 0;
  bool operator==(const Dart&) const = default;
};

struct Face {
  std::vector<Dart> boundary;

  /// Boundary length; a bridge contributes twice.
  int degree() const { return static_cast<int>(boundary.size()); }
  /// Vertices in walk order, repeats kept.
  std::vector<Vertex> walk() const;
  /// Distinct vertices, sorted.
  std::vector<Vertex> vertices() const;
};

/// Per-vertex face slots in rotation order.  Slot i of v is the angle between
/// around(v)[i] and around(v)[i+1]; the same face may fill several slots.
struct FaceIncidence {
  struct Slot {
    int face = -1;
    int position = -1;  // index in the face boundary of the dart leaving v
  };
  std::vector<std::vector<Slot>> slots;
};

using Triangle = std::array<Vertex, 3>;

bool is_planar(const Graph& g);

/// Throws NonPlanarError for nonplanar input and GraphError(Disconnected)
/// for a disconnected one.
RotationSystem planar_embedding(const Graph& g);

/// Face traversal: the dart after (a -> b) is (b -> successor of a around b).
/// An edgeless single-vertex graph has one face of degree 0.
std::vector<Face> faces(const Graph& g, const RotationSystem& rot);

FaceIncidence face_incidence(const Graph& g, const RotationSystem& rot, const std::vector<Face>& fs);

/// Every 3-clique once, as ascending vertex triples in lexicographic order.
std::vector<Triangle> triangles(const Graph& g);

bool has_intersecting_triangles(const Graph& g);

/// DOT rendering of the embedding; faces are listed as comments.
std::string embedding_to_dot(const Graph& g, const RotationSystem& rot);

}  // namespace aecc
