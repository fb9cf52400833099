#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aecc/coloring.hpp"
#include "aecc/config.hpp"
#include "aecc/graph.hpp"

namespace aecc {

class SolverError : public std::runtime_error {
 public:
  enum class Kind { UnsupportedInput, InternalExhaustion, PreconditionFailed, PaletteOverflow };

  SolverError(Kind kind, const std::string& what, std::string dump = {})
      : std::runtime_error(what), kind_(kind), dump_(std::move(dump)) {}
  Kind kind() const { return kind_; }
  /// Edge list of the graph being processed, when relevant.
  const std::string& dump() const { return dump_; }

 private:
  Kind kind_;
  std::string dump_;
};

enum class StepKind { BaseDistinct, BaseLowDegree, Extend, Lemma10, MergeBlocks };

std::string to_string(StepKind k);

struct SolveStep {
  StepKind kind = StepKind::BaseDistinct;
  std::optional<Configuration> cfg;
  std::optional<Edge> removed;
  RecolorScript script;
  std::string branch;
  bool fallback = false;
  /// Local search radius that succeeded; -1 when no local search ran.
  int radius = -1;
  /// The coloring outside the script edges is unchanged (checked when built).
  bool local = true;
  std::string note;

  // Kept only with SolverOptions::keep_snapshots.
  std::optional<Graph> graph;
  std::optional<EdgeColoring> before;
  std::optional<EdgeColoring> after;
};

struct SolveTrace {
  std::vector<SolveStep> steps;

  /// Applies every script in order to an empty assignment (kUncolored erases).
  EdgeColoring replay(const Graph& g, int k) const;
};

nlohmann::json to_json(const SolveStep& s);

struct SolverOptions {
  /// Node budget of each local search attempt.
  long long local_budget = 200000;
  int max_radius = 2;
  /// Node budget for the below-Delta+2 attempts in base_low_degree.
  long long base_budget = 20000;
  /// Per-branch node budget in the case machines.
  long long branch_budget = 20000;
  bool keep_snapshots = false;
};

struct SolveResult {
  EdgeColoring coloring;
  SolveTrace trace;
};

/// Throws SolverError(UnsupportedInput) for nonplanar graphs or graphs with
/// intersecting triangles.  The result is verified before it is returned.
SolveResult solve(const Graph& g, const SolverOptions& opts = {});

/// Every edge gets its own color; needs |E| <= Delta + 2.
EdgeColoring base_distinct(const Graph& g);

/// Backtracking for Delta <= 4 (k = Delta, Delta+1 within a node budget,
/// then Delta + 2 without one).
EdgeColoring base_low_degree(const Graph& g, long long budget = 20000);

/// Full backtracking with Delta + 2 colors.
EdgeColoring fallback_backtrack(const Graph& g);

/// Edges within `radius` hops of uv: uv itself is 0, edges sharing an
/// endpoint with uv are 1, and so on.  uv comes first.
std::vector<Edge> edges_within(const Graph& g, Edge uv, int radius);

/// Recolors only edges within radius of uv (palette Delta(g)+2) on top of
/// cH, a coloring of g - uv.  nullopt when the region admits no extension or
/// the budget runs out.
std::optional<EdgeColoring> fallback_local_search(const Graph& g, Edge uv, const EdgeColoring& cH, int radius,
                                                  long long budget = 200000);

/// Block colorings are over the same vertex ids as g; the result permutes
/// colors inside blocks so that cut vertices see distinct colors.
EdgeColoring merge_blocks(const Graph& g, const BlockDecomposition& bd, const std::vector<EdgeColoring>& blocks,
                          int k);

struct Extension {
  EdgeColoring coloring;
  RecolorScript script;
  std::string branch;
  bool fallback = false;
  int radius = -1;
  std::string note;
};

/// Colors uv on top of cH (a verified coloring of g - uv) using the case
/// machine for cfg, then local search, then full backtracking.
Extension extend_coloring(const Graph& g, Edge uv, const EdgeColoring& cH, const Configuration& cfg,
                          const SolverOptions& opts = {});

/// The 2-neighbor of u (v included) that merging can remove:
/// u x_i is not an edge and x_i sees no other neighbor of u.
struct MergeCandidate {
  Vertex u = 0;
  Vertex ui = 0;
  Vertex xi = 0;
};
std::optional<MergeCandidate> merge_candidate(const Graph& g, const Configuration& cfg);

/// g with u-ui-xi replaced by the single edge u xi (ui stays, isolated).
Graph merge_graph(const Graph& g, const MergeCandidate& mc);

struct Lemma10Split {
  EdgeColoring coloring;
  RecolorScript script;
  /// merged coloring restricted to the edges g shares with merge_graph
  EdgeColoring before;
};
/// Turns a coloring of merge_graph(g, mc) into one of g: ui xi takes the
/// merged color, u ui the first color that keeps things acyclic.
std::optional<Lemma10Split> lemma10_split(const Graph& g, const MergeCandidate& mc, const EdgeColoring& merged);

}  // namespace aecc
