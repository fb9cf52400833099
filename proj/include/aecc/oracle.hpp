#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aecc/coloring.hpp"
#include "aecc/graph.hpp"

namespace aecc {

class OracleError : public std::runtime_error {
 public:
  enum class Kind { Infeasible, SizeGuard };

  OracleError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct OracleResult {
  std::uint64_t graph_hash = 0;
  int a_prime = 0;
  EdgeColoring witness;
  long long nodes = 0;
};

/// Largest edge count the oracle accepts: AECC_SIZE_GUARD if set, else 30.
int oracle_size_guard();

/// Smallest k <= k_max admitting an acyclic proper edge coloring.  A negative
/// k_max means Delta + 3; a negative guard means oracle_size_guard().
OracleResult acyclic_chromatic_index(const Graph& g, int k_max = -1, int guard = -1);

/// Proper (not necessarily acyclic) chromatic index, same search engine.
int chromatic_index(const Graph& g, int guard = -1);

/// c is acyclic, proper, total, and its palette is at least a'(g).
bool verify_against_oracle(const Graph& g, const EdgeColoring& c, int guard = -1);

struct GeneratorSpec {
  int n_min = 8;
  int n_max = 16;
  std::uint64_t seed = 1;
  bool planar = true;
  bool no_intersecting_triangles = true;
  bool biconnected = true;
  int min_max_degree = 5;
  /// At most this many edges get subdivided (each adds a 2-vertex).
  int max_subdivisions = 2;
  /// Consecutive attempts without a hit before giving up.
  long long window = 10000;
};

class GeneratorStarved : public std::runtime_error {
 public:
  explicit GeneratorStarved(const std::string& what) : std::runtime_error(what) {}
};

struct GeneratorStats {
  long long attempts = 0;
  long long accepted = 0;
  long long rejected_degree = 0;
  long long rejected_size = 0;
  long long rejected_triangles = 0;
};

/// Constraint names the graph violates under spec (empty when it passes).
std::vector<std::string> spec_violations(const Graph& g, const GeneratorSpec& spec);

nlohmann::json to_json(const GeneratorSpec& spec);

class Generator {
 public:
  explicit Generator(GeneratorSpec spec);

  Graph next();
  const GeneratorStats& stats() const { return stats_; }
  const GeneratorSpec& spec() const { return spec_; }

 private:
  std::optional<Graph> attempt();

  GeneratorSpec spec_;
  std::mt19937_64 rng_;
  GeneratorStats stats_;
};

std::vector<Graph> generate(const GeneratorSpec& spec, int count, GeneratorStats* stats = nullptr);

}  // namespace aecc
