#include "aecc/search.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace aecc {

IncrementalColoring::IncrementalColoring(const Graph& g, int k)
    : g_(&g), k_(k), edges_(g.edges()), color_(edges_.size(), kUncolored),
      at_(static_cast<size_t>(g.num_vertices()) * static_cast<size_t>(k + 1), -1) {
  for (size_t i = 0; i < edges_.size(); ++i) index_.emplace(edges_[i], static_cast<int>(i));
}

int IncrementalColoring::index_of(Edge e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

bool IncrementalColoring::can_assign(int idx, Color c, bool acyclic) const {
  const Edge& e = edges_[static_cast<size_t>(idx)];
  if (c < 1 || c > k_) return false;
  if (slot(e.u, c) >= 0 || slot(e.v, c) >= 0) return false;
  if (!acyclic) return true;
  // A new (c, d)-cycle would be an alternating path u ... v starting and
  // ending with d; the {c, d} subgraph is a forest, so the walk terminates.
  for (Color d = 1; d <= k_; ++d) {
    if (d == c || slot(e.u, d) < 0 || slot(e.v, d) < 0) continue;
    Vertex cur = e.u;
    Color col = d;
    while (true) {
      const Vertex nxt = slot(cur, col);
      if (nxt < 0) break;
      if (nxt == e.v) return false;
      cur = nxt;
      col = col == d ? c : d;
    }
  }
  return true;
}

void IncrementalColoring::assign(int idx, Color c) {
  const Edge& e = edges_[static_cast<size_t>(idx)];
  color_[static_cast<size_t>(idx)] = c;
  slot(e.u, c) = e.v;
  slot(e.v, c) = e.u;
}

void IncrementalColoring::unassign(int idx) {
  const Edge& e = edges_[static_cast<size_t>(idx)];
  const Color c = color_[static_cast<size_t>(idx)];
  if (c == kUncolored) return;
  slot(e.u, c) = -1;
  slot(e.v, c) = -1;
  color_[static_cast<size_t>(idx)] = kUncolored;
}

bool IncrementalColoring::load(const EdgeColoring& c) {
  for (const auto& [e, col] : c.assignment()) {
    if (col == kUncolored) continue;
    const int idx = index_of(e);
    if (idx < 0 || col > k_) return false;
    if (!can_assign(idx, col, false)) return false;
    assign(idx, col);
  }
  return true;
}

EdgeColoring IncrementalColoring::to_coloring() const {
  EdgeColoring c(*g_, k_);
  for (size_t i = 0; i < edges_.size(); ++i) c.set(edges_[i], color_[i]);
  return c;
}

std::vector<Edge> bfs_edge_order(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Vertex> starts(static_cast<size_t>(n));
  for (Vertex v = 0; v < n; ++v) starts[static_cast<size_t>(v)] = v;
  std::stable_sort(starts.begin(), starts.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<int> seen(static_cast<size_t>(n), 0);
  std::vector<Edge> order;
  std::map<Edge, bool> taken;
  for (Vertex s : starts) {
    if (seen[static_cast<size_t>(s)] || g.degree(s) == 0) continue;
    std::deque<Vertex> q{s};
    seen[static_cast<size_t>(s)] = 1;
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop_front();
      for (Vertex y : g.neighbors(x)) {
        const Edge e = Edge::make(x, y);
        if (!taken[e]) {
          taken[e] = true;
          order.push_back(e);
        }
        if (!seen[static_cast<size_t>(y)]) {
          seen[static_cast<size_t>(y)] = 1;
          q.push_back(y);
        }
      }
    }
  }
  return order;
}

namespace {

struct Dfs {
  IncrementalColoring& work;
  std::vector<int> order;                  // edge indices
  std::vector<std::vector<Color>> choices;  // per position
  const SearchOptions& opts;
  long long nodes = 0;
  bool aborted = false;

  bool run(size_t pos, Color max_used) {
    if (pos == order.size()) return true;
    if (opts.node_limit >= 0 && nodes >= opts.node_limit) {
      aborted = true;
      return false;
    }
    ++nodes;
    const int idx = order[pos];
    for (Color c : choices[pos]) {
      if (opts.break_symmetry && c > max_used + 1) break;
      if (!work.can_assign(idx, c, opts.acyclic)) continue;
      work.assign(idx, c);
      if (run(pos + 1, std::max(max_used, c))) return true;
      work.unassign(idx);
      if (aborted) return false;
    }
    return false;
  }
};

}  // namespace

SearchOutcome backtrack_coloring(const Graph& g, int k, const SearchOptions& opts) {
  IncrementalColoring work(g, k);
  Dfs dfs{work, {}, {}, opts};
  std::vector<Color> all;
  for (Color c = 1; c <= k; ++c) all.push_back(c);
  for (const Edge& e : bfs_edge_order(g)) {
    dfs.order.push_back(work.index_of(e));
    dfs.choices.push_back(all);
  }
  SearchOutcome out;
  const bool ok = dfs.run(0, 0);
  out.nodes = dfs.nodes;
  out.complete = ok || !dfs.aborted;
  if (ok) out.coloring = work.to_coloring();
  return out;
}

SearchOutcome extend_partial(const Graph& g, const EdgeColoring& base, std::span<const Edge> free_edges, int k,
                             const SearchOptions& opts) {
  IncrementalColoring work(g, k);
  EdgeColoring fixed = base;
  fixed.set_palette(std::max(fixed.palette(), k));
  for (const Edge& e : free_edges) {
    if (fixed.contains(e)) fixed.set(e, kUncolored);
  }
  SearchOutcome out;
  if (!work.load(fixed)) {
    out.complete = true;
    return out;
  }
  SearchOptions local = opts;
  local.break_symmetry = false;
  Dfs dfs{work, {}, {}, local};
  for (const Edge& e : free_edges) {
    const int idx = work.index_of(e);
    if (idx < 0) continue;
    std::vector<Color> cs;
    const Color current = base.contains(e) ? base.color(e) : kUncolored;
    if (current >= 1 && current <= k) cs.push_back(current);
    for (Color c = 1; c <= k; ++c) {
      if (c != current) cs.push_back(c);
    }
    dfs.order.push_back(idx);
    dfs.choices.push_back(std::move(cs));
  }
  const bool ok = dfs.run(0, 0);
  out.nodes = dfs.nodes;
  out.complete = ok || !dfs.aborted;
  if (ok) out.coloring = work.to_coloring();
  return out;
}

}  // namespace aecc
