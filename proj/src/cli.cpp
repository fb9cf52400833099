#include "aecc/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "aecc/coloring.hpp"
#include "aecc/config.hpp"
#include "aecc/discharge.hpp"
#include "aecc/graph.hpp"
#include "aecc/oracle.hpp"
#include "aecc/planar.hpp"
#include "aecc/solver.hpp"

namespace aecc {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kInternal = 3;

std::string write_dump(const std::string& text) {
  std::hash<std::string> h;
  const auto path = std::filesystem::temp_directory_path() / ("aecc-dump-" + std::to_string(h(text) % 1000000007) + ".txt");
  std::ofstream(path) << text;
  return path.string();
}

std::string dump_graph(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return write_dump(os.str());
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError(GraphError::Kind::Parse, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(GraphError::Kind::Parse, path + ": " + e.what());
  }
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  std::pair<int, int> r;
  try {
    if (dots == std::string::npos) {
      r.first = r.second = std::stoi(s);
    } else {
      r = {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "expected A..B, got " + s);
  }
  if (r.first < 1 || r.first > r.second) throw CLI::ValidationError("--n", "empty range " + s);
  return r;
}

struct Ctx {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

int cmd_solve(Ctx& c, const std::string& in, const std::string& trace_path, const std::string& out_path) {
  const Graph g = read_edge_list_file(in);
  SolveResult r;
  try {
    r = solve(g);
  } catch (const SolverError& e) {
    if (e.kind() == SolverError::Kind::UnsupportedInput) {
      c.err << "UnsupportedInput: " << e.what() << "\n";
      return kInputError;
    }
    c.err << "InternalExhaustion: " << e.what() << "\ndump: " << (e.dump().empty() ? dump_graph(g) : write_dump(e.dump()))
          << "\n";
    return kInternal;
  } catch (const ConfigError& e) {
    c.err << "TheoremViolation: " << e.what() << "\ndump: "
          << (e.details().empty() ? dump_graph(g) : write_dump(e.details().front())) << "\n";
    return kInternal;
  }
  if (!trace_path.empty()) {
    std::ofstream t(trace_path);
    for (const SolveStep& s : r.trace.steps) t << to_json(s).dump() << "\n";
  }
  const nlohmann::json cj = to_json(r.coloring);
  if (!out_path.empty()) std::ofstream(out_path) << cj.dump(2) << "\n";
  int fallbacks = 0;
  for (const SolveStep& s : r.trace.steps) fallbacks += s.fallback ? 1 : 0;
  if (c.json) {
    c.out << nlohmann::json{{"delta", g.max_degree()},
                            {"colors", r.coloring.colors_used()},
                            {"steps", r.trace.steps.size()},
                            {"fallbacks", fallbacks},
                            {"coloring", cj}}
                 .dump()
          << "\n";
  } else {
    c.out << "Delta=" << g.max_degree() << " colors=" << r.coloring.colors_used() << " steps=" << r.trace.steps.size()
          << " fallbacks=" << fallbacks << "\n";
    if (out_path.empty()) c.out << cj.dump() << "\n";
  }
  return kOk;
}

int cmd_verify(Ctx& c, const std::string& in, const std::string& coloring_path) {
  const Graph g = read_edge_list_file(in);
  const EdgeColoring col = coloring_from_json(g, read_json(coloring_path));
  const int k = g.max_degree() + 2;
  std::string problem;
  if (!col.is_total()) {
    problem = "not every edge is colored";
  } else if (!is_proper(g, col)) {
    problem = "not proper";
  } else if (auto cyc = find_bichromatic_cycle(g, col)) {
    problem = "bichromatic cycle in colors " + std::to_string(cyc->i) + "," + std::to_string(cyc->j);
  } else if (col.max_color() > k) {
    problem = "uses color " + std::to_string(col.max_color()) + " > Delta + 2 = " + std::to_string(k);
  }
  if (c.json) {
    c.out << nlohmann::json{{"ok", problem.empty()}, {"problem", problem}, {"colors", col.colors_used()}}.dump()
          << "\n";
  } else {
    c.out << (problem.empty() ? "ok: acyclic proper coloring with " + std::to_string(col.colors_used()) + " colors"
                              : "FAIL: " + problem)
          << "\n";
  }
  return problem.empty() ? kOk : kVerifyFailed;
}

int cmd_find_config(Ctx& c, const std::string& in, bool all) {
  const Graph g = read_edge_list_file(in);
  try {
    if (all) {
      nlohmann::json arr = nlohmann::json::array();
      for (const Configuration& cfg : find_all_configurations(g)) {
        if (c.json) {
          arr.push_back(to_json(cfg));
        } else {
          c.out << to_json(cfg).dump() << "\n";
        }
      }
      if (c.json) c.out << arr.dump() << "\n";
      return kOk;
    }
    const Configuration cfg = find_one_configuration(g);
    c.out << to_json(cfg).dump() << "\n";
    if (!c.json) c.out << "remove " << to_string(select_edge(g, cfg)) << "\n";
    return kOk;
  } catch (const ConfigError& e) {
    if (e.kind() == ConfigError::Kind::PreconditionFailed) {
      c.err << "PreconditionFailed: " << e.what() << "\n";
      return kInputError;
    }
    const std::string dump = e.details().empty() ? std::string() : e.details().front();
    c.err << "TheoremViolation: " << e.what() << "\ndump: " << (dump.empty() ? dump_graph(g) : write_dump(dump))
          << "\n";
    return kInternal;
  }
}

int cmd_audit(Ctx& c, const std::string& in) {
  const Graph g = read_edge_list_file(in);
  if (!is_planar(g)) {
    c.err << "UnsupportedInput: graph is not planar\n";
    return kInputError;
  }
  nlohmann::json reports = nlohmann::json::array();
  bool ok = true;
  for (const AnnotatedPlane& ap : annotate(g)) {
    const ChargeLedger init = initial_charges(ap);
    ChargeLedger fin;
    try {
      fin = apply_rules(ap, init);
    } catch (const RuleGap& gap) {
      c.err << "RuleGap: " << gap.what() << "\ndump: " << dump_graph(g) << "\n";
      return kInternal;
    }
    const AuditReport r = audit(ap, fin);
    ok = ok && r.conserved;
    if (c.json) {
      reports.push_back(to_json(r, true));
    } else {
      c.out << "component: |V(H)|=" << ap.h.num_vertices() << " initial=" << format_quarters(r.initial_total)
            << " final=" << format_quarters(r.total) << (r.conserved ? " conserved" : " NOT conserved")
            << " negatives=" << r.negatives.size() << "\n";
      for (const AuditEntry& n : r.negatives) c.out << "  " << n.element << " " << format_quarters(n.charge) << "\n";
    }
  }
  if (c.json) c.out << reports.dump() << "\n";
  return ok ? kOk : kVerifyFailed;
}

int cmd_oracle(Ctx& c, const std::string& in, int kmax) {
  const Graph g = read_edge_list_file(in);
  try {
    const OracleResult r = acyclic_chromatic_index(g, kmax);
    if (c.json) {
      c.out << nlohmann::json{{"a_prime", r.a_prime}, {"nodes", r.nodes}, {"witness", to_json(r.witness)}}.dump()
            << "\n";
    } else {
      c.out << "a'=" << r.a_prime << "\n";
    }
    return kOk;
  } catch (const OracleError& e) {
    c.err << (e.kind() == OracleError::Kind::SizeGuard ? "SizeGuard: " : "Infeasible: ") << e.what() << "\n";
    return kInputError;
  }
}

int cmd_gen(Ctx& c, const std::string& range, std::uint64_t seed, int count, const std::string& dir) {
  GeneratorSpec spec;
  std::tie(spec.n_min, spec.n_max) = parse_range(range);
  spec.seed = seed;
  std::filesystem::create_directories(dir);
  Generator gen(spec);
  const int guard = oracle_size_guard();
  for (int i = 0; i < count; ++i) {
    Graph g;
    try {
      g = gen.next();
    } catch (const GeneratorStarved& e) {
      c.err << "GeneratorStarved: " << e.what() << "\n";
      return kInputError;
    }
    const std::string stem = (std::filesystem::path(dir) / ("g" + std::to_string(seed) + "_" + std::to_string(i))).string();
    std::ofstream gf(stem + ".txt");
    write_edge_list(gf, g);
    nlohmann::json side = {{"seed", seed}, {"index", i}, {"constraints", to_json(spec)}, {"a_prime", nullptr}};
    if (g.num_edges() <= guard) side["a_prime"] = acyclic_chromatic_index(g).a_prime;
    std::ofstream(stem + ".json") << side.dump(2) << "\n";
    if (!c.json) c.out << stem << ".txt n=" << g.num_vertices() << " m=" << g.num_edges() << "\n";
  }
  if (c.json) c.out << nlohmann::json{{"written", count}, {"attempts", gen.stats().attempts}}.dump() << "\n";
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"acyclic edge (Delta+2)-coloring toolkit"};
  app.require_subcommand(1);
  Ctx ctx{out, err};
  app.add_flag("--json", ctx.json, "machine-readable output");

  std::string in, second, trace_path, out_path, range;
  bool all = false;
  int kmax = -1, count = 1;
  std::uint64_t seed = 1;

  auto* solve_cmd = app.add_subcommand("solve", "color a graph");
  solve_cmd->add_option("input", in, "edge list")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--trace", trace_path, "write the solve trace as JSON lines");
  solve_cmd->add_option("-o", out_path, "write the coloring as JSON");

  auto* verify_cmd = app.add_subcommand("verify", "check a coloring");
  verify_cmd->add_option("input", in)->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("coloring", second)->required()->check(CLI::ExistingFile);

  auto* find_cmd = app.add_subcommand("find-config", "locate an unavoidable configuration");
  find_cmd->add_option("input", in)->required()->check(CLI::ExistingFile);
  find_cmd->add_flag("--all", all);

  auto* audit_cmd = app.add_subcommand("audit-discharge", "run the discharging rules on H");
  audit_cmd->add_option("input", in)->required()->check(CLI::ExistingFile);

  auto* oracle_cmd = app.add_subcommand("oracle", "exact acyclic chromatic index");
  oracle_cmd->add_option("input", in)->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--kmax", kmax)->check(CLI::PositiveNumber);

  auto* gen_cmd = app.add_subcommand("gen", "write generated graphs");
  gen_cmd->add_option("--n", range, "vertex range A..B")->required();
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--count", count)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(ctx, in, trace_path, out_path);
    if (*verify_cmd) return cmd_verify(ctx, in, second);
    if (*find_cmd) return cmd_find_config(ctx, in, all);
    if (*audit_cmd) return cmd_audit(ctx, in);
    if (*oracle_cmd) return cmd_oracle(ctx, in, kmax);
    if (*gen_cmd) return cmd_gen(ctx, range, seed, count, out_path);
  } catch (const GraphError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ColoringError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const ConfigError& e) {
    err << "TheoremViolation: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInputError;
}

}  // namespace aecc
