#include "aecc/cases.hpp"

#include <algorithm>

namespace aecc {

namespace {

std::vector<Vertex> others(const Graph& g, Vertex x, std::initializer_list<Vertex> skip) {
  std::vector<Vertex> out;
  for (Vertex y : g.neighbors(x)) {
    if (std::find(skip.begin(), skip.end(), y) == skip.end()) out.push_back(y);
  }
  return out;
}

std::vector<Vertex> labels(const Configuration& cfg, const std::string& prefix) {
  std::vector<Vertex> out;
  for (int i = 1; cfg.has(prefix + std::to_string(i)); ++i) out.push_back(cfg.at(prefix + std::to_string(i)));
  return out;
}

class Builder {
 public:
  Builder(const Graph& g, Edge uv) : g_(g), uv_(uv) {}

  // Adds a branch over uv plus the given vertex pairs; pairs that are not
  // edges drop the whole branch.
  void add(const std::string& name, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    add(name, std::vector<std::pair<Vertex, Vertex>>(pairs));
  }
  void add(const std::string& name, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    Branch b{name, {uv_}};
    for (auto [a, c] : pairs) {
      if (a == c || !g_.has_edge(a, c)) return;
      const Edge e = Edge::make(a, c);
      if (std::find(b.edges.begin(), b.edges.end(), e) == b.edges.end()) b.edges.push_back(e);
    }
    for (const Branch& seen : out_) {
      if (seen.edges == b.edges) return;
    }
    out_.push_back(std::move(b));
  }
  std::vector<Branch> take() { return std::move(out_); }

 private:
  const Graph& g_;
  Edge uv_;
  std::vector<Branch> out_;
};

std::string idx(const char* p, size_t i) { return p + std::to_string(i + 1); }

void a2_branches(const Graph& g, const Configuration& cfg, Builder& b) {
  const Vertex u = cfg.at("u"), v = cfg.at("v"), w = cfg.at("w");
  const auto us = labels(cfg, "u");
  auto x_of = [&](Vertex ui) { return others(g, ui, {u}).front(); };
  b.add("prop3.1:vw", {{v, w}});
  for (size_t j = 0; j < us.size(); ++j) {
    if (g.degree(us[j]) <= 3) b.add("shift:" + idx("u", j), {{v, w}, {u, us[j]}});
  }
  for (size_t j = 0; j < us.size(); ++j) {
    if (g.degree(us[j]) == 2) b.add("lemma13(1):" + idx("x", j), {{v, w}, {u, us[j]}, {us[j], x_of(us[j])}});
  }
  for (size_t j = 0; j < us.size(); ++j) {
    if (g.has_edge(w, us[j])) b.add("lemma12(C1):w-" + idx("u", j), {{v, w}, {w, us[j]}});
  }
  for (size_t a = 0; a < us.size(); ++a) {
    for (size_t c = a + 1; c < us.size(); ++c) {
      if (g.degree(us[a]) <= 4 && g.degree(us[c]) <= 4) {
        b.add("lemma12:pair-" + idx("u", a) + "-" + idx("u", c), {{v, w}, {u, us[a]}, {u, us[c]}});
      }
    }
  }
  if (us.size() >= 4) {
    for (size_t l = 0; l < us.size(); ++l) {
      if (g.degree(us[l]) == 2) {
        b.add("lemma13(3):repair-" + idx("u", l),
              {{v, w}, {u, us[3]}, {u, us[l]}, {us[l], x_of(us[l])}});
      }
    }
  }
}

void a3_branches(const Graph& g, const Configuration& cfg, Builder& b) {
  const Vertex u = cfg.at("u"), v = cfg.at("v"), u2 = cfg.at("u2");
  const auto rest = others(g, u, {v, u2});
  if (rest.empty()) return;
  const Vertex u1 = rest.front();
  const auto vs = others(g, v, {u});
  const auto ws = labels(cfg, "w");
  for (Vertex x : {u1, u2}) b.add("lemma14:u-" + std::to_string(x), {{u, x}});
  for (size_t i = 0; i < vs.size(); ++i) b.add("lemma14:" + idx("v", i), {{v, vs[i]}});
  b.add("lemma14:swap", {{u, u1}, {u, u2}});
  for (size_t a = 0; a < vs.size(); ++a) {
    for (size_t c = a + 1; c < vs.size(); ++c) {
      b.add("prop3.2:" + idx("v", a) + idx("v", c), {{v, vs[a]}, {v, vs[c]}});
    }
  }
  for (size_t a = 0; a < vs.size(); ++a) {
    for (size_t c = a + 1; c < vs.size(); ++c) {
      b.add("lemma14:swap+" + idx("v", a) + idx("v", c), {{u, u1}, {u, u2}, {v, vs[a]}, {v, vs[c]}});
    }
  }
  for (Vertex x : {u1, u2}) {
    for (Vertex y : others(g, x, {u})) b.add("prop3.4:" + std::to_string(x) + "-" + std::to_string(y), {{x, y}});
  }
  for (size_t i = 0; i < ws.size(); ++i) {
    b.add("lemma15:" + idx("w", i), {{u, u1}, {u, u2}, {u2, ws[i]}});
  }
}

void a56_branches(const Graph& g, const Configuration& cfg, Builder& b, const char* lemma) {
  const Vertex u = cfg.at("u"), v = cfg.at("v");
  const auto us = labels(cfg, "u");
  const auto vs = others(g, v, {u});
  const std::string l = lemma;
  for (size_t i = 0; i < vs.size(); ++i) b.add(l + ":" + idx("v", i), {{v, vs[i]}});
  for (size_t i = 0; i < us.size(); ++i) b.add(l + ":" + idx("u", i), {{u, us[i]}});
  if (vs.size() == 2) b.add(l + ":v1v2", {{v, vs[0]}, {v, vs[1]}});
  for (size_t i = 0; i < us.size(); ++i) {
    for (size_t j = 0; j < vs.size(); ++j) b.add("mixed:" + idx("u", i) + idx("v", j), {{u, us[i]}, {v, vs[j]}});
  }
  for (size_t i = 0; i < us.size(); ++i) {
    for (size_t j = i + 1; j < us.size(); ++j) {
      if (g.has_edge(us[i], us[j])) {
        b.add("neighbor-edge:" + idx("u", i) + idx("u", j), {{us[i], us[j]}, {u, us[i]}});
        b.add("neighbor-edge:" + idx("u", j) + idx("u", i), {{us[i], us[j]}, {u, us[j]}});
      }
    }
  }
  for (size_t i = 0; i < us.size(); ++i) {
    for (size_t j = i + 1; j < us.size(); ++j) b.add("pair:" + idx("u", i) + idx("u", j), {{u, us[i]}, {u, us[j]}});
  }
}

}  // namespace

CaseContext make_context(const Graph& g, Edge uv, const EdgeColoring& c, const Configuration& cfg) {
  CaseContext ctx;
  ctx.uv = uv;
  ctx.u = cfg.has("u") && uv.has(cfg.at("u")) ? cfg.at("u") : uv.u;
  ctx.v = uv.other(ctx.u);
  ctx.k = g.max_degree() + 2;
  ctx.cu = color_set(g, c, ctx.u);
  ctx.cv = color_set(g, c, ctx.v);
  ctx.common = ctx.cu & ctx.cv;
  ctx.free = ColorSet::range(ctx.k) - (ctx.cu | ctx.cv);
  for (int d = 2; d <= 5; ++d) ctx.s[d] = ColorSet{};
  for (Vertex w : g.neighbors(ctx.u)) {
    if (w == ctx.v) continue;
    const int d = g.degree(w);
    const Color col = c.color(ctx.u, w);
    if (d >= 2 && d <= 5 && col != kUncolored) ctx.s[d].insert(col);
  }
  for (Color i : ctx.common) ctx.b[i] = compute_B(g, c, ctx.u, ctx.v, i);
  return ctx;
}

ColorSet gate_colors(const CaseContext& ctx) {
  ColorSet out;
  for (Color j : ctx.free) {
    bool blocked = false;
    for (const auto& [i, bi] : ctx.b) blocked = blocked || bi.contains(j);
    if (!blocked) out.insert(j);
  }
  return out;
}

std::vector<Branch> case_branches(const Graph& g, Edge uv, const Configuration& cfg) {
  Builder b(g, uv);
  switch (tag_group(cfg.tag)) {
    case 2: a2_branches(g, cfg, b); break;
    case 3: a3_branches(g, cfg, b); break;
    case 5: a56_branches(g, cfg, b, "lemma16"); break;
    case 6: a56_branches(g, cfg, b, "lemma21"); break;
    default: break;
  }
  return b.take();
}

std::optional<ColorSet> lemma13_exceptions(const Graph& g, Edge uv, const EdgeColoring& c, const Configuration& cfg) {
  if (cfg.tag != Tag::A2_3) return std::nullopt;
  const Vertex u = cfg.at("u"), v = cfg.at("v"), w = cfg.at("w");
  const int delta = g.max_degree();
  if (g.degree(w) != delta) return std::nullopt;
  EdgeColoring base = c;
  base.uncolor(uv);
  base.uncolor(Edge::make(v, w));
  const ColorSet cw = color_set(g, base, w);
  const ColorSet cu = color_set(g, base, u);
  const ColorSet three = ColorSet::range(delta + 2) - cw;
  if (three.size() != 3 || !three.subset_of(cu)) return std::nullopt;
  ColorSet bstar;
  bool first = true;
  for (Color i : three) {
    EdgeColoring t = base;
    t.set(Edge::make(v, w), i);
    const ColorSet bi = compute_B(g, t, u, v, i);
    bstar = first ? bi : (bstar & bi);
    first = false;
  }
  ColorSet s2;
  for (Vertex x : g.neighbors(u)) {
    if (x != v && g.degree(x) == 2 && base.color(u, x) != kUncolored) s2.insert(base.color(u, x));
  }
  return s2 - bstar;
}

}  // namespace aecc
