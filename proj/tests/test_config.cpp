#include <doctest.h>

#include <map>

#include "aecc/config.hpp"
#include "aecc/planar.hpp"
#include "helpers.hpp"

using namespace aecc;
using namespace testkit;

namespace {

// Builds a graph from a core edge list, then hangs fresh leaves on vertices
// until each listed vertex reaches its target degree.
Graph with_degrees(int core_n, std::vector<std::pair<int, int>> es, std::map<int, int> target) {
  std::map<int, int> deg;
  for (auto [a, b] : es) {
    ++deg[a];
    ++deg[b];
  }
  int next = core_n;
  for (auto [x, d] : target)
    while (deg[x] < d) {
      es.emplace_back(x, next++);
      ++deg[x];
    }
  return make(next, es);
}

// --- independent reading of the configuration list -------------------------

struct Brute {
  const Graph& g;

  int d(Vertex x) const { return g.degree(x); }
  int nk(Vertex x, int k) const {
    int c = 0;
    for (Vertex y : g.neighbors(x)) c += d(y) == k;
    return c;
  }
  std::vector<Vertex> nbrs_except(Vertex x, Vertex skip) const {
    std::vector<Vertex> out;
    for (Vertex y : g.neighbors(x))
      if (y != skip) out.push_back(y);
    return out;
  }
  bool nonincreasing(const std::vector<Vertex>& l) const {
    for (size_t i = 1; i < l.size(); ++i)
      if (d(l[i - 1]) < d(l[i])) return false;
    return true;
  }
  // First (lexicographically) degree-sorted ordering of pool passing ok.
  template <class F>
  std::optional<std::vector<Vertex>> first_order(std::vector<Vertex> pool, F ok) const {
    std::sort(pool.begin(), pool.end());
    do {
      if (nonincreasing(pool) && ok(pool)) return pool;
    } while (std::next_permutation(pool.begin(), pool.end()));
    return std::nullopt;
  }

  std::optional<std::vector<Vertex>> scan(Tag t, Vertex u) const {
    const std::string s = to_string(t);
    if (s[1] == '1') {
      for (Vertex v : g.neighbors(u))
        for (Vertex w : g.neighbors(v)) {
          if (w == u) continue;
          bool hit = false;
          if (s == "A1.1") hit = d(v) == 2 && d(u) <= 5;
          if (s == "A1.2") hit = d(u) == 3 && d(v) == 3;
          if (s == "A1.3") hit = d(v) == 3 && d(u) == 4 && g.has_edge(u, w);
          if (s == "A1.4") hit = d(v) == 4 && d(u) == 3 && d(w) == 3;
          if (s == "A1.5") hit = d(v) == 3 && d(u) == 4 && d(w) == 4;
          if (hit) return std::vector<Vertex>{u, v, w};
        }
      return std::nullopt;
    }
    if (s == "A4") {
      for (Vertex v : g.neighbors(u))
        for (Vertex w : g.neighbors(v))
          if (u < v && v < w && g.has_edge(u, w) && d(u) == 4 && d(v) == 4 && d(w) == 4)
            return std::vector<Vertex>{u, v, w};
      return std::nullopt;
    }
    if (s[1] == '2') {
      if (d(u) < 6) return std::nullopt;
      const int du = d(u), n2 = nk(u, 2), n3 = nk(u, 3);
      for (Vertex v : g.neighbors(u)) {
        if (d(v) != 2) continue;
        const Vertex w = nbrs_except(v, u).front();
        auto hit = first_order(nbrs_except(u, v), [&](const std::vector<Vertex>& l) {
          auto U = [&](int j) { return l[static_cast<size_t>(j - 1)]; };
          auto twos_from = [&](int j0) {
            for (int j = j0; j <= du - 1; ++j)
              if (d(U(j)) != 2) return false;
            return true;
          };
          if (s == "A2.1") return n2 + n3 >= du - 2;
          if (s == "A2.2") return n2 + n3 == du - 3 && n3 <= 3;
          if (s == "A2.3")
            return n2 == du - 4 && twos_from(5) && (nk(U(4), 2) == d(U(4)) - 4 || nk(U(4), 2) == d(U(4)) - 5) &&
                   g.has_edge(U(3), U(4));
          return n2 == du - 5 && twos_from(6) && d(U(5)) == 3 && d(U(4)) == 4 && d(U(3)) <= 5 &&
                 g.has_edge(U(3), U(4));
        });
        if (hit) {
          std::vector<Vertex> t{u, v, w};
          t.insert(t.end(), hit->begin(), hit->end());
          return t;
        }
      }
      return std::nullopt;
    }
    if (s[1] == '3') {
      if (d(u) != 3) return std::nullopt;
      for (Vertex v : g.neighbors(u)) {
        if (d(v) != 4) continue;
        for (Vertex u2 : g.neighbors(u)) {
          if (u2 == v) continue;
          auto hit = first_order(nbrs_except(u2, u), [&](const std::vector<Vertex>& l) {
            auto W = [&](int j) { return l[static_cast<size_t>(j - 1)]; };
            if (s == "A3.1") return d(u2) == 5 && d(W(4)) == 3 && g.has_edge(W(2), W(3));
            if (s == "A3.2") return d(u2) == 6 && d(W(3)) == 3 && d(W(4)) == 3 && d(W(5)) == 3;
            return d(u2) == 6 && d(W(2)) <= 5 && d(W(3)) == 4 && d(W(4)) == 3 && d(W(5)) == 3 &&
                   g.has_edge(W(2), W(3));
          });
          if (hit) {
            std::vector<Vertex> t{u, v, u2};
            t.insert(t.end(), hit->begin(), hit->end());
            return t;
          }
        }
      }
      return std::nullopt;
    }
    const int want = s[1] == '5' ? 5 : 6;
    if (d(u) != want) return std::nullopt;
    for (Vertex v : g.neighbors(u)) {
      if (d(v) != 3) continue;
      auto hit = first_order(nbrs_except(u, v), [&](const std::vector<Vertex>& l) {
        auto U = [&](int j) { return l[static_cast<size_t>(j - 1)]; };
        if (s == "A5.1") return d(U(3)) == 3 && d(U(4)) == 3;
        if (s == "A5.2") return d(U(4)) == 3 && g.has_edge(U(1), v);
        if (s == "A5.3") return d(U(4)) == 3 && d(U(3)) == 4 && d(U(2)) == 5 && g.has_edge(U(2), U(3));
        if (s == "A5.4") return d(U(3)) == 4 && d(U(4)) == 4 && g.has_edge(U(3), U(4));
        if (d(U(3)) != 3 || d(U(4)) != 3 || d(U(5)) != 3) return false;
        if (s == "A6.1") return d(U(2)) == 3;
        return d(U(1)) == 4 && d(U(2)) == 4 && g.has_edge(U(1), U(2));
      });
      if (hit) {
        std::vector<Vertex> t{u, v};
        t.insert(t.end(), hit->begin(), hit->end());
        return t;
      }
    }
    return std::nullopt;
  }
};

void compare_with_brute(const Graph& g) {
  Brute b{g};
  std::vector<std::pair<Tag, std::vector<Vertex>>> slow;
  for (Tag t : kAllTags)
    for (Vertex u = 0; u < g.num_vertices(); ++u)
      if (auto hit = b.scan(t, u)) slow.emplace_back(t, *hit);
  std::vector<std::pair<Tag, std::vector<Vertex>>> fast;
  for (const Configuration& c : find_all_configurations(g)) {
    REQUIRE(check_witness(g, c));
    fast.emplace_back(c.tag, c.tuple());
  }
  REQUIRE(fast == slow);
}

}  // namespace

TEST_CASE("spot examples") {
  // path 0-1-2 with d(1)=2, d(0)=5
  Graph g = with_degrees(3, {{0, 1}, {1, 2}}, {{0, 5}, {2, 3}});
  auto all = find_all_configurations(g);
  bool a11 = false;
  for (const auto& c : all) a11 = a11 || (c.tag == Tag::A1_1 && c.at("u") == 0 && c.at("v") == 1);
  CHECK(a11);

  Graph tri = with_degrees(3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 4}, {1, 4}, {2, 4}});
  int a4 = 0;
  for (const auto& c : find_all_configurations(tri)) a4 += c.tag == Tag::A4;
  CHECK(a4 == 1);

  int a12 = 0;
  for (const auto& c : find_all_configurations(complete(4))) a12 += c.tag == Tag::A1_2;
  CHECK(a12 == 4);

  CHECK_THROWS_AS(find_one_configuration(complete(4)), ConfigError);
  try {
    find_one_configuration(complete(4));
  } catch (const ConfigError& e) {
    CHECK(e.kind() == ConfigError::Kind::PreconditionFailed);
    CHECK(e.details().size() == 2);
  }
}

TEST_CASE("wheel-like graph has an A1 witness") {
  // 5-star whose leaves sit on every other vertex of a 10-cycle
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < 10; ++i) es.emplace_back(1 + i, 1 + (i + 1) % 10);
  for (int i = 0; i < 5; ++i) es.emplace_back(0, 1 + 2 * i);
  Graph g = make(11, es);
  REQUIRE(g.max_degree() == 5);
  REQUIRE(triangles(g).empty());
  REQUIRE(config_preconditions(g).empty());
  const Configuration c = find_one_configuration(g);
  CHECK(tag_group(c.tag) == 1);
  CHECK(check_witness(g, c));
}

TEST_CASE("check_witness on hand instances") {
  // u=0, u1=1, u2=2 (degree 4), u3=3, u4=4 (degree 3), v=5 (degree 3)
  std::vector<std::pair<int, int>> core{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}};
  Graph g = with_degrees(6, core, {{1, 4}, {2, 4}, {3, 3}, {4, 3}, {5, 3}});
  Configuration c{Tag::A5_1, {{"u", 0}, {"v", 5}, {"u1", 1}, {"u2", 2}, {"u3", 3}, {"u4", 4}}};
  CHECK(check_witness(g, c));
  Graph bumped = with_degrees(6, core, {{1, 4}, {2, 4}, {3, 3}, {4, 4}, {5, 3}});
  CHECK_FALSE(check_witness(bumped, c));

  // 6-vertex u with five 3-neighbors
  std::vector<std::pair<int, int>> six{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}};
  Graph h = with_degrees(7, six, {{1, 5}, {2, 3}, {3, 3}, {4, 3}, {5, 3}, {6, 3}});
  Configuration a61{Tag::A6_1, {{"u", 0}, {"v", 6}, {"u1", 1}, {"u2", 2}, {"u3", 3}, {"u4", 4}, {"u5", 5}}};
  CHECK(check_witness(h, a61));
  CHECK(select_edge(h, a61) == Edge::make(0, 6));

  Configuration a11{Tag::A1_1, {{"u", 0}, {"v", 1}, {"w", 2}}};
  Graph p = with_degrees(3, {{0, 1}, {1, 2}}, {{0, 5}});
  CHECK(check_witness(p, a11));
  CHECK(select_edge(p, a11) == Edge::make(0, 1));

  CHECK(configuration_from_json(to_json(a61)) == a61);
}

TEST_CASE("property: finder equals brute-force scan on small graphs") {
  std::mt19937_64 rng(1234);
  for (int round = 0; round < 250; ++round) {
    const int n = 5 + static_cast<int>(rng() % 6);
    Graph g = random_graph(n, 0.25 + 0.05 * static_cast<double>(rng() % 6), rng);
    compare_with_brute(g);
  }
  aecc::GeneratorSpec spec;
  spec.n_min = 8;
  spec.n_max = 10;
  spec.seed = 55;
  for (const Graph& g : aecc::generate(spec, 60)) compare_with_brute(g);
}

TEST_CASE("property: structural filters") {
  std::mt19937_64 rng(8);
  auto check = [](const Graph& g) {
    auto all = find_all_configurations(g);
    auto has = [&](Tag t) {
      return std::any_of(all.begin(), all.end(), [&](const Configuration& c) { return c.tag == t; });
    };
    if (!has(Tag::A1_1))
      for (Vertex x = 0; x < g.num_vertices(); ++x)
        if (g.degree(x) <= 5)
          for (Vertex y : g.neighbors(x)) REQUIRE(g.degree(y) != 2);
    if (!has(Tag::A2_1) && !has(Tag::A2_2))
      for (Vertex x = 0; x < g.num_vertices(); ++x)
        if (g.degree(x) >= 6 && g.count_neighbors_of_degree(x, 2) > 0)
          REQUIRE(g.count_neighbors_of_degree(x, 2) <= g.degree(x) - 4);
  };
  for (int round = 0; round < 200; ++round) check(random_graph(6 + static_cast<int>(rng() % 6), 0.4, rng));
  for (const Graph& g : corpus(100)) check(g);
}

TEST_CASE("property: every corpus graph has a configuration and every witness checks out") {
  std::map<Tag, int> seen;
  for (const Graph& g : corpus(300, 4242)) {
    REQUIRE(config_preconditions(g).empty());
    const Configuration c = find_one_configuration(g);
    REQUIRE(check_witness(g, c));
    const Edge uv = select_edge(g, c);
    REQUIRE(g.has_edge(uv.u, uv.v));
    ++seen[c.tag];
  }
  for (auto [t, n] : seen) MESSAGE(to_string(t) << ": " << n);
}
