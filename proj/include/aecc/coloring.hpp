#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "aecc/graph.hpp"

namespace aecc {

using Color = int;
inline constexpr Color kUncolored = 0;

class ColoringError : public std::runtime_error {
 public:
  enum class Kind { NotProper, ColorClash, ColorAbsent, UnknownEdge, BadColor, Parse };

  ColoringError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Set of colors, e.g. the colors C(v) seen at a vertex.
class ColorSet {
 public:
  ColorSet() = default;
  ColorSet(std::initializer_list<Color> cs) : s_(cs) {}
  explicit ColorSet(std::set<Color> s) : s_(std::move(s)) {}

  /// {1, ..., k}
  static ColorSet range(int k);

  bool contains(Color c) const { return s_.count(c) != 0; }
  void insert(Color c) { s_.insert(c); }
  void erase(Color c) { s_.erase(c); }
  int size() const { return static_cast<int>(s_.size()); }
  bool empty() const { return s_.empty(); }
  Color min() const { return *s_.begin(); }
  auto begin() const { return s_.begin(); }
  auto end() const { return s_.end(); }

  ColorSet operator|(const ColorSet& o) const;
  ColorSet operator&(const ColorSet& o) const;
  ColorSet operator-(const ColorSet& o) const;
  bool subset_of(const ColorSet& o) const;

  bool operator==(const ColorSet&) const = default;

 private:
  std::set<Color> s_;
};

std::string to_string(const ColorSet& s);

/// Partial or total assignment of colors 1..k to the edges of a fixed edge set.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  /// Every edge of g starts uncolored.
  EdgeColoring(const Graph& g, int k);

  int palette() const { return k_; }
  void set_palette(int k) { k_ = k; }

  bool contains(Edge e) const { return colors_.count(e) != 0; }
  Color color(Edge e) const;
  Color color(Vertex a, Vertex b) const { return color(Edge::make(a, b)); }
  /// Throws UnknownEdge for edges outside the edge set, BadColor outside 0..k.
  void set(Edge e, Color c);
  void uncolor(Edge e) { set(e, kUncolored); }

  bool is_total() const;
  int num_edges() const { return static_cast<int>(colors_.size()); }
  /// Number of distinct colors in use.
  int colors_used() const;
  Color max_color() const;

  const std::map<Edge, Color>& assignment() const { return colors_; }

  /// Same edge set and colors, palette ignored.
  bool same_colors(const EdgeColoring& o) const { return colors_ == o.colors_; }
  bool operator==(const EdgeColoring&) const = default;

 private:
  int k_ = 0;
  std::map<Edge, Color> colors_;
};

/// C(v): colors of the colored edges at v.
ColorSet color_set(const Graph& g, const EdgeColoring& c, Vertex v);

/// Neighbor y of v with c(vy) == col, if any.
std::optional<Vertex> neighbor_by_color(const Graph& g, const EdgeColoring& c, Vertex v, Color col);

/// Uncolored edges are ignored.
bool is_proper(const Graph& g, const EdgeColoring& c);

struct BichromaticCycle {
  Color i = 0;
  Color j = 0;
  std::vector<Vertex> cycle;  // closed walk, first vertex not repeated
};

/// First bichromatic cycle under ascending (i, j) then smallest start vertex.
/// Throws NotProper if two colored edges at a vertex share a color.
std::optional<BichromaticCycle> find_bichromatic_cycle(const Graph& g, const EdgeColoring& c);

/// Proper, no bichromatic cycle, every edge colored, colors within the palette.
bool is_acyclic_total(const Graph& g, const EdgeColoring& c);

struct AlternatingPath {
  std::vector<Vertex> vertices;
  Color first = 0;
  Color second = 0;
  bool maximal = true;
  /// The walk returned to an earlier vertex (only possible on a bichromatic cycle).
  bool closed = false;
};

/// Maximal walk from start whose edges alternate first_color, second_color, ...
AlternatingPath trace_maximal_path(const Graph& g, const EdgeColoring& c, Vertex start, Color first_color,
                                   Color second_color);

/// An (i, j)-alternating path joins u and v.
bool exists_ij_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v, Color i, Color j);

/// B_i for the uncolored edge uv: colors j such that the (j, i)-alternating
/// walk leaving u_s by its j-edge arrives at v_t by a j-edge, where u_s and
/// v_t are the i-neighbors of u and v.
ColorSet compute_B(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v, Color i);

struct Move {
  Edge edge;
  Color color = kUncolored;
  bool operator==(const Move&) const = default;
};

/// Ordered recoloring moves; kUncolored un-colors the edge.
struct RecolorScript {
  std::vector<Move> moves;

  RecolorScript& then(Edge e, Color c) {
    moves.push_back({e, c});
    return *this;
  }
  bool empty() const { return moves.empty(); }
  std::vector<Edge> edges() const;
  bool operator==(const RecolorScript&) const = default;
};

struct ScriptResult {
  EdgeColoring coloring;
  RecolorScript undo;
};

/// Applies moves in order; the undo script restores the input exactly.
ScriptResult apply_script(const EdgeColoring& c, const RecolorScript& s);

/// Moves turning `from` into `to` on the edges they share, ascending by edge.
RecolorScript diff_script(const EdgeColoring& from, const EdgeColoring& to);

nlohmann::json to_json(const EdgeColoring& c);
/// Keys must be edges of g ("u-v", either order accepted).
EdgeColoring coloring_from_json(const Graph& g, const nlohmann::json& j);
nlohmann::json to_json(const RecolorScript& s);

}  // namespace aecc
