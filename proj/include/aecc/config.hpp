#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "aecc/graph.hpp"

namespace aecc {

enum class Tag {
  A1_1, A1_2, A1_3, A1_4, A1_5,
  A2_1, A2_2, A2_3, A2_4,
  A3_1, A3_2, A3_3,
  A4,
  A5_1, A5_2, A5_3, A5_4,
  A6_1, A6_2,
};

inline constexpr Tag kAllTags[] = {
    Tag::A1_1, Tag::A1_2, Tag::A1_3, Tag::A1_4, Tag::A1_5, Tag::A2_1, Tag::A2_2,
    Tag::A2_3, Tag::A2_4, Tag::A3_1, Tag::A3_2, Tag::A3_3, Tag::A4,   Tag::A5_1,
    Tag::A5_2, Tag::A5_3, Tag::A5_4, Tag::A6_1, Tag::A6_2,
};

std::string to_string(Tag t);
std::optional<Tag> tag_from_string(const std::string& s);
/// 1..6
int tag_group(Tag t);

/// A1, A2.1 and A4 are handled by bounded search rather than a case machine.
bool is_delegated(Tag t);

class ConfigError : public std::runtime_error {
 public:
  enum class Kind { PreconditionFailed, TheoremViolation };

  ConfigError(Kind kind, const std::string& what, std::vector<std::string> details = {})
      : std::runtime_error(what), kind_(kind), details_(std::move(details)) {}
  Kind kind() const { return kind_; }
  /// Violated preconditions, or the edge-list dump of a counterexample.
  const std::vector<std::string>& details() const { return details_; }

 private:
  Kind kind_;
  std::vector<std::string> details_;
};

/// Witness names by group:
///   A1, A4: u v w
///   A2:     u v w u1 .. u{d(u)-1}        (w is the other neighbor of v)
///   A3:     u v u2 w1 .. w{d(u2)-1}
///   A5:     u v u1 u2 u3 u4
///   A6:     u v u1 u2 u3 u4 u5
/// Labeled neighbor lists are in non-increasing degree order.
struct Configuration {
  Tag tag = Tag::A1_1;
  std::vector<std::pair<std::string, Vertex>> witness;

  Vertex at(const std::string& name) const;
  bool has(const std::string& name) const;
  /// Witness values in name order; the canonical comparison key.
  std::vector<Vertex> tuple() const;

  bool operator==(const Configuration&) const = default;
};

struct NeighborhoodProfile {
  int degree = 0;
  std::vector<int> neighbor_degrees;  // non-increasing
  int n2 = 0;
  int n3 = 0;
  std::vector<Edge> neighbor_edges;  // edges among N(v)
};

NeighborhoodProfile profile(const Graph& g, Vertex v);

/// Canonical witness of `tag` anchored at u (the vertex named "u"), if any.
std::optional<Configuration> find_at(const Graph& g, Tag tag, Vertex u);

/// One witness per (tag, anchor); A4 reports each triangle once from its
/// smallest vertex.  Ordered by tag, then anchor.
std::vector<Configuration> find_all_configurations(const Graph& g);

/// Unmet preconditions of find_one_configuration; empty when all hold.
std::vector<std::string> config_preconditions(const Graph& g);

/// First witness in tag order A1.1 .. A6.2, anchors ascending.
Configuration find_one_configuration(const Graph& g);

bool check_witness(const Graph& g, const Configuration& cfg);

/// The edge uv removed in the inductive step.
Edge select_edge(const Graph& g, const Configuration& cfg);

nlohmann::json to_json(const Configuration& c);
Configuration configuration_from_json(const nlohmann::json& j);

}  // namespace aecc
