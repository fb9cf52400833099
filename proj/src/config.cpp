#include "aecc/config.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "aecc/planar.hpp"

namespace aecc {

namespace {

struct TagName {
  Tag tag;
  const char* name;
};

constexpr TagName kNames[] = {
    {Tag::A1_1, "A1.1"}, {Tag::A1_2, "A1.2"}, {Tag::A1_3, "A1.3"}, {Tag::A1_4, "A1.4"}, {Tag::A1_5, "A1.5"},
    {Tag::A2_1, "A2.1"}, {Tag::A2_2, "A2.2"}, {Tag::A2_3, "A2.3"}, {Tag::A2_4, "A2.4"}, {Tag::A3_1, "A3.1"},
    {Tag::A3_2, "A3.2"}, {Tag::A3_3, "A3.3"}, {Tag::A4, "A4"},     {Tag::A5_1, "A5.1"}, {Tag::A5_2, "A5.2"},
    {Tag::A5_3, "A5.3"}, {Tag::A5_4, "A5.4"}, {Tag::A6_1, "A6.1"}, {Tag::A6_2, "A6.2"},
};

using Labels = std::vector<Vertex>;

// Calls visit on labelings of pool in non-increasing degree order, in
// lexicographic order of the label sequence.  Only the first `depth`
// positions are enumerated; the rest are filled by ascending id.
bool for_each_labeling(const Graph& g, std::vector<Vertex> pool, int depth,
                       const std::function<bool(const Labels&)>& visit) {
  auto by_degree = [&](Vertex a, Vertex b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  };
  std::sort(pool.begin(), pool.end(), by_degree);
  std::vector<int> degs;
  for (Vertex x : pool) degs.push_back(g.degree(x));
  depth = std::min<int>(depth, static_cast<int>(pool.size()));
  Labels cur;
  std::vector<bool> used(pool.size(), false);
  std::function<bool()> rec = [&]() -> bool {
    const int p = static_cast<int>(cur.size());
    if (p == depth) {
      Labels full = cur;
      for (size_t i = 0; i < pool.size(); ++i) {
        if (!used[i]) full.push_back(pool[i]);
      }
      std::sort(full.begin() + depth, full.end(), by_degree);
      return visit(full);
    }
    std::vector<size_t> cand;
    for (size_t i = 0; i < pool.size(); ++i) {
      if (!used[i] && g.degree(pool[i]) == degs[static_cast<size_t>(p)]) cand.push_back(i);
    }
    std::sort(cand.begin(), cand.end(), [&](size_t a, size_t b) { return pool[a] < pool[b]; });
    for (size_t i : cand) {
      used[i] = true;
      cur.push_back(pool[i]);
      if (rec()) return true;
      cur.pop_back();
      used[i] = false;
    }
    return false;
  };
  return rec();
}

int deg(const Graph& g, Vertex x) { return g.degree(x); }
int n2(const Graph& g, Vertex x) { return g.count_neighbors_of_degree(x, 2); }

bool pred_a1(const Graph& g, Tag t, Vertex u, Vertex v, Vertex w) {
  switch (t) {
    case Tag::A1_1: return deg(g, v) == 2 && deg(g, u) <= 5;
    case Tag::A1_2: return deg(g, u) == 3 && deg(g, v) == 3;
    case Tag::A1_3: return deg(g, v) == 3 && deg(g, u) == 4 && g.has_edge(u, w);
    case Tag::A1_4: return deg(g, v) == 4 && deg(g, u) == 3 && deg(g, w) == 3;
    case Tag::A1_5: return deg(g, v) == 3 && deg(g, u) == 4 && deg(g, w) == 4;
    default: return false;
  }
}

bool all_two_from(const Graph& g, const Labels& l, size_t first_pos) {
  for (size_t p = first_pos; p < l.size(); ++p) {
    if (deg(g, l[p]) != 2) return false;
  }
  return true;
}

// l[0] is u1.
bool pred_a2(const Graph& g, Tag t, Vertex u, const Labels& l) {
  const int d = deg(g, u);
  const int a = n2(g, u), b = g.count_neighbors_of_degree(u, 3);
  switch (t) {
    case Tag::A2_1: return a + b >= d - 2;
    case Tag::A2_2: return a + b == d - 3 && b <= 3;
    case Tag::A2_3: {
      if (a != d - 4 || !all_two_from(g, l, 4)) return false;
      const int d4 = deg(g, l[3]), m = n2(g, l[3]);
      return (m == d4 - 4 || m == d4 - 5) && g.has_edge(l[2], l[3]);
    }
    case Tag::A2_4:
      return a == d - 5 && all_two_from(g, l, 5) && deg(g, l[4]) == 3 && deg(g, l[3]) == 4 && deg(g, l[2]) <= 5 &&
             g.has_edge(l[2], l[3]);
    default: return false;
  }
}

// l[0] is w1; d(u2) = l.size() + 1.
bool pred_a3(const Graph& g, Tag t, const Labels& l) {
  const int du2 = static_cast<int>(l.size()) + 1;
  switch (t) {
    case Tag::A3_1: return du2 == 5 && deg(g, l[3]) == 3 && g.has_edge(l[1], l[2]);
    case Tag::A3_2: return du2 == 6 && deg(g, l[2]) == 3 && deg(g, l[3]) == 3 && deg(g, l[4]) == 3;
    case Tag::A3_3:
      return du2 == 6 && deg(g, l[1]) <= 5 && deg(g, l[2]) == 4 && deg(g, l[3]) == 3 && deg(g, l[4]) == 3 &&
             g.has_edge(l[1], l[2]);
    default: return false;
  }
}

bool pred_a5(const Graph& g, Tag t, Vertex v, const Labels& l) {
  switch (t) {
    case Tag::A5_1: return deg(g, l[2]) == 3 && deg(g, l[3]) == 3;
    case Tag::A5_2: return deg(g, l[3]) == 3 && g.has_edge(l[0], v);
    case Tag::A5_3:
      return deg(g, l[3]) == 3 && deg(g, l[2]) == 4 && deg(g, l[1]) == 5 && g.has_edge(l[1], l[2]);
    case Tag::A5_4: return deg(g, l[2]) == 4 && deg(g, l[3]) == 4 && g.has_edge(l[2], l[3]);
    default: return false;
  }
}

bool pred_a6(const Graph& g, Tag t, const Labels& l) {
  if (deg(g, l[2]) != 3 || deg(g, l[3]) != 3 || deg(g, l[4]) != 3) return false;
  switch (t) {
    case Tag::A6_1: return deg(g, l[1]) == 3;
    case Tag::A6_2: return deg(g, l[0]) == 4 && deg(g, l[1]) == 4 && g.has_edge(l[0], l[1]);
    default: return false;
  }
}

// Positions of the labeled list whose identity (not just degree) matters.
int label_depth(Tag t) {
  switch (t) {
    case Tag::A2_3:
    case Tag::A2_4: return 4;
    case Tag::A3_1:
    case Tag::A3_3: return 3;
    case Tag::A5_2: return 1;
    case Tag::A5_3: return 3;
    case Tag::A5_4: return 4;
    case Tag::A6_2: return 2;
    default: return 0;
  }
}

std::vector<Vertex> others(const Graph& g, Vertex x, Vertex skip) {
  std::vector<Vertex> out;
  for (Vertex y : g.neighbors(x)) {
    if (y != skip) out.push_back(y);
  }
  return out;
}

void push_labels(Configuration& c, const std::string& prefix, const Labels& l) {
  for (size_t i = 0; i < l.size(); ++i) c.witness.emplace_back(prefix + std::to_string(i + 1), l[i]);
}

bool sorted_by_degree(const Graph& g, const Labels& l) {
  for (size_t i = 1; i < l.size(); ++i) {
    if (deg(g, l[i - 1]) < deg(g, l[i])) return false;
  }
  return true;
}

bool same_set(std::vector<Vertex> a, std::vector<Vertex> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

std::string to_string(Tag t) {
  for (const auto& tn : kNames) {
    if (tn.tag == t) return tn.name;
  }
  return "?";
}

std::optional<Tag> tag_from_string(const std::string& s) {
  for (const auto& tn : kNames) {
    if (s == tn.name) return tn.tag;
  }
  return std::nullopt;
}

int tag_group(Tag t) {
  const std::string s = to_string(t);
  return s[1] - '0';
}

bool is_delegated(Tag t) { return tag_group(t) == 1 || t == Tag::A2_1 || t == Tag::A4; }

Vertex Configuration::at(const std::string& name) const {
  for (const auto& [k, x] : witness) {
    if (k == name) return x;
  }
  throw std::out_of_range("witness has no vertex '" + name + "'");
}

bool Configuration::has(const std::string& name) const {
  return std::any_of(witness.begin(), witness.end(), [&](const auto& kv) { return kv.first == name; });
}

std::vector<Vertex> Configuration::tuple() const {
  std::vector<Vertex> out;
  for (const auto& kv : witness) out.push_back(kv.second);
  return out;
}

NeighborhoodProfile profile(const Graph& g, Vertex v) {
  NeighborhoodProfile p;
  p.degree = g.degree(v);
  for (Vertex y : g.neighbors(v)) p.neighbor_degrees.push_back(g.degree(y));
  std::sort(p.neighbor_degrees.rbegin(), p.neighbor_degrees.rend());
  p.n2 = g.count_neighbors_of_degree(v, 2);
  p.n3 = g.count_neighbors_of_degree(v, 3);
  const auto& n = g.neighbors(v);
  for (size_t i = 0; i < n.size(); ++i) {
    for (size_t j = i + 1; j < n.size(); ++j) {
      if (g.has_edge(n[i], n[j])) p.neighbor_edges.push_back(Edge::make(n[i], n[j]));
    }
  }
  return p;
}

std::optional<Configuration> find_at(const Graph& g, Tag tag, Vertex u) {
  Configuration c;
  c.tag = tag;
  const int group = tag_group(tag);
  if (group == 1) {
    for (Vertex v : g.neighbors(u)) {
      for (Vertex w : g.neighbors(v)) {
        if (w == u || !pred_a1(g, tag, u, v, w)) continue;
        c.witness = {{"u", u}, {"v", v}, {"w", w}};
        return c;
      }
    }
    return std::nullopt;
  }
  if (group == 4) {
    if (deg(g, u) != 4) return std::nullopt;
    for (Vertex v : g.neighbors(u)) {
      if (v <= u || deg(g, v) != 4) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w <= v || deg(g, w) != 4 || !g.has_edge(u, w)) continue;
        c.witness = {{"u", u}, {"v", v}, {"w", w}};
        return c;
      }
    }
    return std::nullopt;
  }
  if (group == 2) {
    if (deg(g, u) < 6) return std::nullopt;
    for (Vertex v : g.neighbors(u)) {
      if (deg(g, v) != 2) continue;
      const Vertex w = others(g, v, u).front();
      Labels found;
      if (for_each_labeling(g, others(g, u, v), label_depth(tag), [&](const Labels& l) {
            if (!pred_a2(g, tag, u, l)) return false;
            found = l;
            return true;
          })) {
        c.witness = {{"u", u}, {"v", v}, {"w", w}};
        push_labels(c, "u", found);
        return c;
      }
    }
    return std::nullopt;
  }
  if (group == 3) {
    if (deg(g, u) != 3) return std::nullopt;
    for (Vertex v : g.neighbors(u)) {
      if (deg(g, v) != 4) continue;
      for (Vertex u2 : g.neighbors(u)) {
        if (u2 == v) continue;
        const int du2 = deg(g, u2);
        if (du2 != 5 && du2 != 6) continue;
        Labels found;
        if (for_each_labeling(g, others(g, u2, u), label_depth(tag), [&](const Labels& l) {
              if (!pred_a3(g, tag, l)) return false;
              found = l;
              return true;
            })) {
          c.witness = {{"u", u}, {"v", v}, {"u2", u2}};
          push_labels(c, "w", found);
          return c;
        }
      }
    }
    return std::nullopt;
  }
  const int want = group == 5 ? 5 : 6;
  if (deg(g, u) != want) return std::nullopt;
  for (Vertex v : g.neighbors(u)) {
    if (deg(g, v) != 3) continue;
    Labels found;
    if (for_each_labeling(g, others(g, u, v), label_depth(tag), [&](const Labels& l) {
          if (!(group == 5 ? pred_a5(g, tag, v, l) : pred_a6(g, tag, l))) return false;
          found = l;
          return true;
        })) {
      c.witness = {{"u", u}, {"v", v}};
      push_labels(c, "u", found);
      return c;
    }
  }
  return std::nullopt;
}

std::vector<Configuration> find_all_configurations(const Graph& g) {
  std::vector<Configuration> out;
  for (Tag t : kAllTags) {
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      if (auto c = find_at(g, t, u)) out.push_back(std::move(*c));
    }
  }
  return out;
}

std::vector<std::string> config_preconditions(const Graph& g) {
  std::vector<std::string> bad;
  if (!is_biconnected(g)) bad.emplace_back("not 2-connected");
  if (!is_planar(g)) bad.emplace_back("not planar");
  if (g.max_degree() < 5) bad.emplace_back("maximum degree " + std::to_string(g.max_degree()) + " < 5");
  if (has_intersecting_triangles(g)) bad.emplace_back("has intersecting triangles");
  return bad;
}

Configuration find_one_configuration(const Graph& g) {
  auto bad = config_preconditions(g);
  if (!bad.empty()) {
    std::string msg = "preconditions failed:";
    for (const auto& s : bad) msg += " " + s + ";";
    throw ConfigError(ConfigError::Kind::PreconditionFailed, msg, std::move(bad));
  }
  for (Tag t : kAllTags) {
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      if (auto c = find_at(g, t, u)) return *c;
    }
  }
  std::ostringstream dump;
  write_edge_list(dump, g);
  throw ConfigError(ConfigError::Kind::TheoremViolation, "no configuration A1-A6 found", {dump.str()});
}

bool check_witness(const Graph& g, const Configuration& cfg) {
  const int n = g.num_vertices();
  for (const auto& [name, x] : cfg.witness) {
    if (x < 0 || x >= n) return false;
  }
  auto labels = [&](const std::string& prefix, size_t count) -> std::optional<Labels> {
    Labels l;
    for (size_t i = 1; i <= count; ++i) {
      const std::string name = prefix + std::to_string(i);
      if (!cfg.has(name)) return std::nullopt;
      l.push_back(cfg.at(name));
    }
    return l;
  };
  const int group = tag_group(cfg.tag);
  try {
    const Vertex u = cfg.at("u"), v = cfg.at("v");
    if (!g.has_edge(u, v)) return false;
    if (group == 1 || group == 4) {
      if (cfg.witness.size() != 3) return false;
      const Vertex w = cfg.at("w");
      if (w == u || !g.has_edge(v, w)) return false;
      if (group == 1) return pred_a1(g, cfg.tag, u, v, w);
      return g.has_edge(u, w) && deg(g, u) == 4 && deg(g, v) == 4 && deg(g, w) == 4;
    }
    if (group == 2) {
      const int d = deg(g, u);
      if (d < 6 || deg(g, v) != 2) return false;
      const Vertex w = cfg.at("w");
      if (w == u || !g.has_edge(v, w)) return false;
      auto l = labels("u", static_cast<size_t>(d - 1));
      if (!l || cfg.witness.size() != static_cast<size_t>(d + 2)) return false;
      if (!same_set(*l, others(g, u, v)) || !sorted_by_degree(g, *l)) return false;
      return pred_a2(g, cfg.tag, u, *l);
    }
    if (group == 3) {
      const Vertex u2 = cfg.at("u2");
      if (deg(g, u) != 3 || deg(g, v) != 4 || u2 == v || !g.has_edge(u, u2)) return false;
      const int du2 = deg(g, u2);
      if (du2 < 5) return false;
      auto l = labels("w", static_cast<size_t>(du2 - 1));
      if (!l || cfg.witness.size() != static_cast<size_t>(du2 + 2)) return false;
      if (!same_set(*l, others(g, u2, u)) || !sorted_by_degree(g, *l)) return false;
      return pred_a3(g, cfg.tag, *l);
    }
    const int want = group == 5 ? 5 : 6;
    if (deg(g, u) != want || deg(g, v) != 3) return false;
    auto l = labels("u", static_cast<size_t>(want - 1));
    if (!l || cfg.witness.size() != static_cast<size_t>(want + 1)) return false;
    if (!same_set(*l, others(g, u, v)) || !sorted_by_degree(g, *l)) return false;
    return group == 5 ? pred_a5(g, cfg.tag, v, *l) : pred_a6(g, cfg.tag, *l);
  } catch (const std::out_of_range&) {
    return false;
  }
}

Edge select_edge(const Graph& g, const Configuration& cfg) {
  (void)g;
  return Edge::make(cfg.at("u"), cfg.at("v"));
}

nlohmann::json to_json(const Configuration& c) {
  nlohmann::json w = nlohmann::json::object();
  for (const auto& [k, x] : c.witness) w[k] = x;
  nlohmann::json order = nlohmann::json::array();
  for (const auto& kv : c.witness) order.push_back(kv.first);
  return {{"tag", to_string(c.tag)}, {"witness", w}, {"order", order}};
}

Configuration configuration_from_json(const nlohmann::json& j) {
  Configuration c;
  const auto tag = tag_from_string(j.at("tag").get<std::string>());
  if (!tag) throw std::invalid_argument("unknown tag " + j.at("tag").get<std::string>());
  c.tag = *tag;
  const auto& w = j.at("witness");
  if (j.contains("order")) {
    for (const auto& name : j.at("order")) c.witness.emplace_back(name.get<std::string>(), w.at(name.get<std::string>()).get<Vertex>());
  } else {
    for (const auto& [k, x] : w.items()) c.witness.emplace_back(k, x.get<Vertex>());
  }
  return c;
}

}  // namespace aecc
