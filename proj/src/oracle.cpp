#include "aecc/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>

#include "aecc/planar.hpp"
#include "aecc/search.hpp"

namespace aecc {

int oracle_size_guard() {
  if (const char* env = std::getenv("AECC_SIZE_GUARD")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
    }
  }
  return 30;
}

namespace {

void check_guard(const Graph& g, int guard) {
  if (guard < 0) guard = oracle_size_guard();
  if (g.num_edges() > guard) {
    throw OracleError(OracleError::Kind::SizeGuard, "graph has " + std::to_string(g.num_edges()) +
                                                        " edges, oracle guard is " + std::to_string(guard));
  }
}

}  // namespace

OracleResult acyclic_chromatic_index(const Graph& g, int k_max, int guard) {
  check_guard(g, guard);
  if (k_max < 0) k_max = g.max_degree() + 3;
  OracleResult r;
  r.graph_hash = g.hash();
  if (g.num_edges() == 0) {
    r.witness = EdgeColoring(g, 0);
    return r;
  }
  SearchOptions opts;
  opts.acyclic = true;
  opts.break_symmetry = true;
  for (int k = std::max(1, g.max_degree()); k <= k_max; ++k) {
    SearchOutcome out = backtrack_coloring(g, k, opts);
    r.nodes += out.nodes;
    if (out.coloring) {
      r.a_prime = k;
      r.witness = std::move(*out.coloring);
      return r;
    }
  }
  throw OracleError(OracleError::Kind::Infeasible, "no acyclic edge coloring with at most " + std::to_string(k_max) +
                                                       " colors");
}

int chromatic_index(const Graph& g, int guard) {
  check_guard(g, guard);
  if (g.num_edges() == 0) return 0;
  SearchOptions opts;
  opts.acyclic = false;
  opts.break_symmetry = true;
  for (int k = g.max_degree();; ++k) {
    if (backtrack_coloring(g, k, opts).coloring) return k;
  }
}

bool verify_against_oracle(const Graph& g, const EdgeColoring& c, int guard) {
  const OracleResult r = acyclic_chromatic_index(g, -1, guard);
  return is_acyclic_total(g, c) && c.palette() >= r.a_prime;
}

std::vector<std::string> spec_violations(const Graph& g, const GeneratorSpec& spec) {
  std::vector<std::string> bad;
  if (g.num_vertices() < spec.n_min || g.num_vertices() > spec.n_max) bad.emplace_back("vertex count");
  if (spec.planar && !is_planar(g)) bad.emplace_back("planar");
  if (spec.no_intersecting_triangles && has_intersecting_triangles(g)) bad.emplace_back("no intersecting triangles");
  if (spec.biconnected && !is_biconnected(g)) bad.emplace_back("2-connected");
  if (g.max_degree() < spec.min_max_degree) bad.emplace_back("max degree");
  return bad;
}

nlohmann::json to_json(const GeneratorSpec& spec) {
  return {{"n_min", spec.n_min},
          {"n_max", spec.n_max},
          {"planar", spec.planar},
          {"no_intersecting_triangles", spec.no_intersecting_triangles},
          {"biconnected", spec.biconnected},
          {"min_max_degree", spec.min_max_degree},
          {"max_subdivisions", spec.max_subdivisions}};
}

Generator::Generator(GeneratorSpec spec) : spec_(spec), rng_(spec.seed) {}

namespace {

using Tri = std::array<Vertex, 3>;

bool tri_has(const Tri& t, Vertex x) { return t[0] == x || t[1] == x || t[2] == x; }

Vertex third(const Tri& t, Vertex a, Vertex b) {
  for (Vertex x : t) {
    if (x != a && x != b) return x;
  }
  return -1;
}

}  // namespace

std::optional<Graph> Generator::attempt() {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); };
  const int n = uniform(spec_.n_min, spec_.n_max);
  const int subdivisions = uniform(0, std::max(0, std::min(spec_.max_subdivisions, n - 4)));
  const int n0 = n - subdivisions;
  if (n0 < 3) return std::nullopt;

  // Random triangulation: stacked insertions followed by random flips.
  std::set<Edge> edges{Edge::make(0, 1), Edge::make(1, 2), Edge::make(0, 2)};
  std::vector<Tri> tris{{0, 1, 2}, {0, 1, 2}};
  std::vector<int> degree(static_cast<size_t>(n0), 0);
  degree[0] = degree[1] = degree[2] = 2;
  for (Vertex x = 3; x < n0; ++x) {
    const size_t fi = static_cast<size_t>(uniform(0, static_cast<int>(tris.size()) - 1));
    const Tri t = tris[fi];
    tris[fi] = {t[0], t[1], x};
    tris.push_back({t[1], t[2], x});
    tris.push_back({t[0], t[2], x});
    for (Vertex y : t) {
      edges.insert(Edge::make(x, y));
      ++degree[static_cast<size_t>(y)];
    }
    degree[static_cast<size_t>(x)] = 3;
  }
  const int flips = uniform(0, 2 * n0);
  for (int f = 0; f < flips && n0 >= 4; ++f) {
    const size_t fi = static_cast<size_t>(uniform(0, static_cast<int>(tris.size()) - 1));
    const int side = uniform(0, 2);
    const Vertex a = tris[fi][static_cast<size_t>(side)], b = tris[fi][static_cast<size_t>((side + 1) % 3)];
    size_t fj = tris.size();
    for (size_t j = 0; j < tris.size(); ++j) {
      if (j != fi && tri_has(tris[j], a) && tri_has(tris[j], b)) fj = j;
    }
    if (fj == tris.size()) continue;
    const Vertex c = third(tris[fi], a, b), d = third(tris[fj], a, b);
    if (c == d || edges.count(Edge::make(c, d)) || degree[static_cast<size_t>(a)] <= 3 ||
        degree[static_cast<size_t>(b)] <= 3) {
      continue;
    }
    edges.erase(Edge::make(a, b));
    edges.insert(Edge::make(c, d));
    --degree[static_cast<size_t>(a)];
    --degree[static_cast<size_t>(b)];
    ++degree[static_cast<size_t>(c)];
    ++degree[static_cast<size_t>(d)];
    tris[fi] = {a, c, d};
    tris[fj] = {b, c, d};
  }

  std::vector<Edge> list(edges.begin(), edges.end());
  Graph g = Graph::from_edges(n0, list);

  // Break intersecting triangles by deleting triangle edges, keeping 2-connectivity.
  while (has_intersecting_triangles(g)) {
    std::vector<int> hits(static_cast<size_t>(g.num_vertices()), 0);
    const auto ts = triangles(g);
    for (const Triangle& t : ts) {
      for (Vertex x : t) ++hits[static_cast<size_t>(x)];
    }
    std::vector<Edge> cand;
    for (const Triangle& t : ts) {
      if (std::any_of(t.begin(), t.end(), [&](Vertex x) { return hits[static_cast<size_t>(x)] > 1; })) {
        cand.push_back(Edge::make(t[0], t[1]));
        cand.push_back(Edge::make(t[1], t[2]));
        cand.push_back(Edge::make(t[0], t[2]));
      }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::shuffle(cand.begin(), cand.end(), rng_);
    bool removed = false;
    for (const Edge& e : cand) {
      Graph h = g.without_edge(e);
      if (!spec_.biconnected || is_biconnected(h)) {
        g = std::move(h);
        removed = true;
        break;
      }
    }
    if (!removed) {
      ++stats_.rejected_triangles;
      return std::nullopt;
    }
  }

  const int extra = uniform(0, 2);
  for (int i = 0; i < extra; ++i) {
    auto es = g.edges();
    if (es.empty()) break;
    const Edge e = es[static_cast<size_t>(uniform(0, static_cast<int>(es.size()) - 1))];
    Graph h = g.without_edge(e);
    if (!spec_.biconnected || is_biconnected(h)) g = std::move(h);
  }

  for (int s = 0; s < subdivisions; ++s) {
    auto es = g.edges();
    const Edge e = es[static_cast<size_t>(uniform(0, static_cast<int>(es.size()) - 1))];
    const Vertex x = g.num_vertices();
    es.erase(std::find(es.begin(), es.end(), e));
    es.push_back(Edge::make(e.u, x));
    es.push_back(Edge::make(e.v, x));
    g = Graph::from_edges(x + 1, es);
  }
  return g;
}

Graph Generator::next() {
  long long misses = 0;
  while (true) {
    ++stats_.attempts;
    std::optional<Graph> g = attempt();
    if (g) {
      const auto bad = spec_violations(*g, spec_);
      if (bad.empty()) {
        ++stats_.accepted;
        return *g;
      }
      if (std::find(bad.begin(), bad.end(), "max degree") != bad.end()) ++stats_.rejected_degree;
      if (std::find(bad.begin(), bad.end(), "vertex count") != bad.end()) ++stats_.rejected_size;
    }
    if (++misses >= spec_.window) {
      throw GeneratorStarved("no graph accepted in " + std::to_string(misses) + " consecutive attempts");
    }
  }
}

std::vector<Graph> generate(const GeneratorSpec& spec, int count, GeneratorStats* stats) {
  Generator gen(spec);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(gen.next());
  if (stats) *stats = gen.stats();
  return out;
}

}  // namespace aecc
