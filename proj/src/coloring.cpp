#include "aecc/coloring.hpp"

#include <algorithm>
#include <sstream>

namespace aecc {

ColorSet ColorSet::range(int k) {
  ColorSet s;
  for (Color c = 1; c <= k; ++c) s.insert(c);
  return s;
}

ColorSet ColorSet::operator|(const ColorSet& o) const {
  ColorSet r = *this;
  for (Color c : o) r.insert(c);
  return r;
}

ColorSet ColorSet::operator&(const ColorSet& o) const {
  ColorSet r;
  for (Color c : s_) {
    if (o.contains(c)) r.insert(c);
  }
  return r;
}

ColorSet ColorSet::operator-(const ColorSet& o) const {
  ColorSet r;
  for (Color c : s_) {
    if (!o.contains(c)) r.insert(c);
  }
  return r;
}

bool ColorSet::subset_of(const ColorSet& o) const {
  return std::all_of(s_.begin(), s_.end(), [&](Color c) { return o.contains(c); });
}

std::string to_string(const ColorSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Color c : s) {
    os << (first ? "" : ",") << c;
    first = false;
  }
  os << '}';
  return os.str();
}

EdgeColoring::EdgeColoring(const Graph& g, int k) : k_(k) {
  for (const Edge& e : g.edges()) colors_.emplace(e, kUncolored);
}

Color EdgeColoring::color(Edge e) const {
  auto it = colors_.find(e);
  if (it == colors_.end()) throw ColoringError(ColoringError::Kind::UnknownEdge, "unknown edge " + to_string(e));
  return it->second;
}

void EdgeColoring::set(Edge e, Color c) {
  auto it = colors_.find(e);
  if (it == colors_.end()) throw ColoringError(ColoringError::Kind::UnknownEdge, "unknown edge " + to_string(e));
  if (c < 0 || c > k_) {
    throw ColoringError(ColoringError::Kind::BadColor,
                        "color " + std::to_string(c) + " outside palette 1.." + std::to_string(k_));
  }
  it->second = c;
}

bool EdgeColoring::is_total() const {
  return std::all_of(colors_.begin(), colors_.end(), [](const auto& kv) { return kv.second != kUncolored; });
}

int EdgeColoring::colors_used() const {
  std::set<Color> used;
  for (const auto& [e, c] : colors_) {
    if (c != kUncolored) used.insert(c);
  }
  return static_cast<int>(used.size());
}

Color EdgeColoring::max_color() const {
  Color m = 0;
  for (const auto& [e, c] : colors_) m = std::max(m, c);
  return m;
}

ColorSet color_set(const Graph& g, const EdgeColoring& c, Vertex v) {
  ColorSet s;
  for (Vertex y : g.neighbors(v)) {
    const Color col = c.color(v, y);
    if (col != kUncolored) s.insert(col);
  }
  return s;
}

std::optional<Vertex> neighbor_by_color(const Graph& g, const EdgeColoring& c, Vertex v, Color col) {
  for (Vertex y : g.neighbors(v)) {
    if (c.color(v, y) == col) return y;
  }
  return std::nullopt;
}

bool is_proper(const Graph& g, const EdgeColoring& c) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<Color> seen;
    for (Vertex y : g.neighbors(v)) {
      const Color col = c.color(v, y);
      if (col == kUncolored) continue;
      if (std::find(seen.begin(), seen.end(), col) != seen.end()) return false;
      seen.push_back(col);
    }
  }
  return true;
}

std::optional<BichromaticCycle> find_bichromatic_cycle(const Graph& g, const EdgeColoring& c) {
  if (!is_proper(g, c)) throw ColoringError(ColoringError::Kind::NotProper, "coloring is not proper");
  const int n = g.num_vertices();
  // at[v] holds (color, neighbor) pairs.
  std::vector<std::vector<std::pair<Color, Vertex>>> at(static_cast<size_t>(n));
  std::set<Color> used;
  for (const auto& [e, col] : c.assignment()) {
    if (col == kUncolored || !g.has_edge(e.u, e.v)) continue;
    at[static_cast<size_t>(e.u)].emplace_back(col, e.v);
    at[static_cast<size_t>(e.v)].emplace_back(col, e.u);
    used.insert(col);
  }
  auto step = [&](Vertex x, Color col) -> Vertex {
    for (auto [cc, y] : at[static_cast<size_t>(x)]) {
      if (cc == col) return y;
    }
    return -1;
  };
  const std::vector<Color> colors(used.begin(), used.end());
  std::vector<int> mark(static_cast<size_t>(n), -1);
  int stamp = 0;
  for (size_t a = 0; a < colors.size(); ++a) {
    for (size_t b = a + 1; b < colors.size(); ++b) {
      const Color i = colors[a], j = colors[b];
      ++stamp;
      for (Vertex s = 0; s < n; ++s) {
        if (mark[static_cast<size_t>(s)] == stamp) continue;
        if (step(s, i) < 0 || step(s, j) < 0) continue;
        std::vector<Vertex> walk{s};
        mark[static_cast<size_t>(s)] = stamp;
        Vertex cur = s;
        Color col = i;
        bool cycle = false;
        while (true) {
          const Vertex y = step(cur, col);
          if (y < 0) break;
          if (y == s) {
            cycle = true;
            break;
          }
          if (mark[static_cast<size_t>(y)] == stamp) break;
          mark[static_cast<size_t>(y)] = stamp;
          walk.push_back(y);
          cur = y;
          col = col == i ? j : i;
        }
        if (cycle) return BichromaticCycle{i, j, std::move(walk)};
      }
    }
  }
  return std::nullopt;
}

bool is_acyclic_total(const Graph& g, const EdgeColoring& c) {
  for (const Edge& e : g.edges()) {
    if (!c.contains(e)) return false;
    const Color col = c.color(e);
    if (col == kUncolored || col > c.palette()) return false;
  }
  if (!is_proper(g, c)) return false;
  return !find_bichromatic_cycle(g, c).has_value();
}

AlternatingPath trace_maximal_path(const Graph& g, const EdgeColoring& c, Vertex start, Color first_color,
                                   Color second_color) {
  int clash = 0;
  for (Vertex y : g.neighbors(start)) clash += c.color(start, y) == first_color ? 1 : 0;
  if (clash > 1) {
    throw ColoringError(ColoringError::Kind::ColorClash,
                        "vertex " + std::to_string(start) + " has two edges colored " + std::to_string(first_color));
  }
  AlternatingPath p;
  p.first = first_color;
  p.second = second_color;
  p.vertices.push_back(start);
  Vertex cur = start;
  Color col = first_color;
  while (true) {
    auto y = neighbor_by_color(g, c, cur, col);
    if (!y) break;
    if (std::find(p.vertices.begin(), p.vertices.end(), *y) != p.vertices.end()) {
      p.closed = true;
      break;
    }
    p.vertices.push_back(*y);
    cur = *y;
    col = col == first_color ? second_color : first_color;
  }
  return p;
}

bool exists_ij_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v, Color i, Color j) {
  for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
    const auto p = trace_maximal_path(g, c, u, a, b);
    if (std::find(p.vertices.begin(), p.vertices.end(), v) != p.vertices.end()) return true;
  }
  return false;
}

ColorSet compute_B(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v, Color i) {
  const auto us = neighbor_by_color(g, c, u, i);
  const auto vt = neighbor_by_color(g, c, v, i);
  if (!us || !vt) {
    throw ColoringError(ColoringError::Kind::ColorAbsent,
                        "color " + std::to_string(i) + " not in C(" + std::to_string(u) + ") and C(" +
                            std::to_string(v) + ")");
  }
  ColorSet b;
  for (Color j : color_set(g, c, *us)) {
    if (j == i) continue;
    const auto p = trace_maximal_path(g, c, *us, j, i);
    for (size_t idx = 1; idx < p.vertices.size(); idx += 2) {
      if (p.vertices[idx] == *vt) {
        b.insert(j);
        break;
      }
    }
  }
  return b;
}

std::vector<Edge> RecolorScript::edges() const {
  std::vector<Edge> out;
  for (const Move& m : moves) out.push_back(m.edge);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ScriptResult apply_script(const EdgeColoring& c, const RecolorScript& s) {
  ScriptResult r{c, {}};
  for (const Move& m : s.moves) {
    const Color old = r.coloring.color(m.edge);
    r.coloring.set(m.edge, m.color);
    r.undo.moves.push_back({m.edge, old});
  }
  std::reverse(r.undo.moves.begin(), r.undo.moves.end());
  return r;
}

RecolorScript diff_script(const EdgeColoring& from, const EdgeColoring& to) {
  RecolorScript s;
  for (const auto& [e, col] : to.assignment()) {
    if (from.contains(e) && from.color(e) != col) s.then(e, col);
  }
  return s;
}

nlohmann::json to_json(const EdgeColoring& c) {
  nlohmann::json colors = nlohmann::json::object();
  for (const auto& [e, col] : c.assignment()) {
    if (col != kUncolored) colors[to_string(e)] = col;
  }
  return {{"k", c.palette()}, {"colors", colors}};
}

EdgeColoring coloring_from_json(const Graph& g, const nlohmann::json& j) {
  try {
    EdgeColoring c(g, j.at("k").get<int>());
    for (const auto& [key, val] : j.at("colors").items()) {
      const auto dash = key.find('-');
      if (dash == std::string::npos) throw ColoringError(ColoringError::Kind::Parse, "bad edge key '" + key + "'");
      const Vertex a = std::stoi(key.substr(0, dash));
      const Vertex b = std::stoi(key.substr(dash + 1));
      c.set(Edge::make(a, b), val.get<int>());
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ColoringError(ColoringError::Kind::Parse, e.what());
  } catch (const std::invalid_argument& e) {
    throw ColoringError(ColoringError::Kind::Parse, e.what());
  }
}

nlohmann::json to_json(const RecolorScript& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Move& m : s.moves) arr.push_back({to_string(m.edge), m.color});
  return arr;
}

}  // namespace aecc
