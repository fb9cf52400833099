#include <doctest.h>

#include <cstdlib>

#include "aecc/oracle.hpp"
#include "aecc/planar.hpp"
#include "helpers.hpp"

using namespace aecc;
using namespace testkit;

namespace {

// Every assignment in {1..k}^m, no pruning at all.
bool colorable_naive(const Graph& g, int k) {
  const auto es = g.edges();
  std::vector<Color> cur(es.size(), 1);
  while (true) {
    EdgeColoring c(g, k);
    for (size_t i = 0; i < es.size(); ++i) c.set(es[i], cur[i]);
    if (is_acyclic_total(g, c)) return true;
    size_t i = 0;
    while (i < cur.size() && cur[i] == k) cur[i++] = 1;
    if (i == cur.size()) return false;
    ++cur[i];
  }
}

int a_prime_naive(const Graph& g) {
  if (g.num_edges() == 0) return 0;
  for (int k = 1;; ++k)
    if (colorable_naive(g, k)) return k;
}

}  // namespace

TEST_CASE("spot values") {
  CHECK(acyclic_chromatic_index(complete(4)).a_prime == 5);
  CHECK(acyclic_chromatic_index(cycle(4)).a_prime == 3);
  CHECK(acyclic_chromatic_index(cycle(5)).a_prime == 3);
  CHECK(acyclic_chromatic_index(cycle(6)).a_prime == 3);
  for (int n = 1; n <= 7; ++n) CHECK(acyclic_chromatic_index(star(n)).a_prime == n);
  const OracleResult q3 = acyclic_chromatic_index(cube());
  CHECK(q3.a_prime <= 5);
  CHECK(is_acyclic_total(cube(), q3.witness));
  CHECK(q3.witness.colors_used() == q3.a_prime);
}

TEST_CASE("bounded search and guards") {
  try {
    acyclic_chromatic_index(complete(4), 4);
    FAIL("K4 colored with 4 colors");
  } catch (const OracleError& e) {
    CHECK(e.kind() == OracleError::Kind::Infeasible);
  }
  try {
    acyclic_chromatic_index(complete(9));
    FAIL("size guard ignored");
  } catch (const OracleError& e) {
    CHECK(e.kind() == OracleError::Kind::SizeGuard);
  }
  ::setenv("AECC_SIZE_GUARD", "40", 1);
  CHECK(oracle_size_guard() == 40);
  ::unsetenv("AECC_SIZE_GUARD");
  CHECK(oracle_size_guard() == 30);
}

TEST_CASE("verify_against_oracle") {
  Graph c4 = cycle(4);
  EdgeColoring rainbow(c4, 4);
  Color next = 1;
  for (const Edge& e : c4.edges()) rainbow.set(e, next++);
  CHECK(verify_against_oracle(c4, rainbow));
  EdgeColoring two(c4, 2);
  next = 0;
  for (const Edge& e : c4.edges()) two.set(e, 1 + (next++ % 2));
  CHECK_FALSE(verify_against_oracle(c4, two));
}

TEST_CASE("property: oracle agrees with naive enumeration") {
  std::mt19937_64 rng(606);
  int checked = 0;
  while (checked < 120) {
    Graph g = random_graph(3 + static_cast<int>(rng() % 4), 0.55, rng);
    if (g.num_edges() > 7) continue;
    REQUIRE(acyclic_chromatic_index(g).a_prime == a_prime_naive(g));
    ++checked;
  }
}

TEST_CASE("property: Vizing and sandwich bounds on small planar graphs") {
  std::mt19937_64 rng(71);
  int checked = 0;
  while (checked < 150) {
    Graph g = random_graph(4 + static_cast<int>(rng() % 6), 0.4, rng);
    if (g.num_edges() == 0 || g.num_edges() > 16 || !is_planar(g)) continue;
    const int delta = g.max_degree();
    const int chi = chromatic_index(g);
    REQUIRE(chi >= delta);
    REQUIRE(chi <= delta + 1);
    const int a = acyclic_chromatic_index(g).a_prime;
    REQUIRE(a >= chi);
    ++checked;
  }
}

TEST_CASE("generator") {
  GeneratorSpec spec;
  spec.n_min = 8;
  spec.n_max = 12;
  spec.seed = 1;
  GeneratorStats stats;
  const auto a = generate(spec, 40, &stats);
  CHECK(a.size() == 40);
  for (const Graph& g : a) CHECK(spec_violations(g, spec).empty());
  CHECK(stats.accepted == 40);
  CHECK(a == generate(spec, 40));
  spec.seed = 2;
  CHECK(a != generate(spec, 40));

  GeneratorSpec tiny;
  tiny.n_min = tiny.n_max = 5;
  tiny.window = 2000;
  CHECK_THROWS_AS(generate(tiny, 1), GeneratorStarved);

  Graph k4 = complete(4);
  const auto bad = spec_violations(k4, spec);
  CHECK(std::find(bad.begin(), bad.end(), "no intersecting triangles") != bad.end());
  CHECK(std::find(bad.begin(), bad.end(), "max degree") != bad.end());
}
