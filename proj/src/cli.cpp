#include "kcut/cli.hpp"

#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "kcut/bench.hpp"
#include "kcut/error.hpp"
#include "kcut/generators.hpp"
#include "kcut/json.hpp"
#include "kcut/log.hpp"
#include "kcut/oracle.hpp"
#include "kcut/pipeline.hpp"

namespace kcut {
namespace {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo:
    case ErrorKind::kParse:
      return kExitIo;
    case ErrorKind::kInvariant:
      return kExitInvariant;
    default:
      return kExitUsage;
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  require(static_cast<bool>(file), ErrorKind::kIo, "cannot open " + path);
  file << text;
  require(static_cast<bool>(file), ErrorKind::kIo, "cannot write " + path);
}

struct SolveArgs {
  std::string graph;
  int k = 0;
  std::uint64_t seed = 0;
  std::string force_branch;
  std::int64_t trial_cap = kDefaultTrialCap;
  int t = 2;
};

struct BenchArgs {
  std::string suite;
  std::uint64_t seed = 0;
  std::string out;
  std::string force_branch;
  std::int64_t trial_cap = kDefaultTrialCap;
  int threads = 0;
};

std::optional<Branch> branch_arg(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto b = parse_branch(text);
  require(b.has_value(), ErrorKind::kInvalidArgument,
          "--force-branch must be exact or sparsify");
  return b;
}

}  // namespace

void configure_logging() { reload_log_level(); }

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  configure_logging();

  CLI::App app{"minimum k-cut solver"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "solve a graph file");
  solve_cmd->add_option("--graph", solve.graph, "edge-list file")->required();
  solve_cmd->add_option("--k", solve.k, "number of parts")->required();
  solve_cmd->add_option("--seed", solve.seed);
  solve_cmd->add_option("--force-branch", solve.force_branch,
                        "exact or sparsify");
  solve_cmd->add_option("--trial-cap", solve.trial_cap);
  solve_cmd->add_option("--t", solve.t);

  std::string oracle_graph;
  int oracle_k = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact reference solver");
  oracle_cmd->add_option("--graph", oracle_graph)->required();
  oracle_cmd->add_option("--k", oracle_k)->required();

  GenParams gen;
  std::string gen_out;
  std::uint64_t gen_seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "write a generated instance");
  gen_cmd->add_option("--kind", gen.kind, "gnp|planted|cycle|cliques_bridge")
      ->required();
  gen_cmd->add_option("--out", gen_out)->required();
  gen_cmd->add_option("--seed", gen_seed);
  gen_cmd->add_option("--n", gen.n);
  gen_cmd->add_option("--p", gen.p);
  gen_cmd->add_option("--k", gen.k);
  gen_cmd->add_option("--size", gen.size);
  gen_cmd->add_option("--p-in", gen.p_in);
  gen_cmd->add_option("--p-out", gen.p_out);
  gen_cmd->add_option("--islands", gen.islands);
  gen_cmd->add_option("--island-degree", gen.island_degree);
  gen_cmd->add_option("--count", gen.count);
  gen_cmd->add_option("--bridges", gen.bridges);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "pipeline vs oracle table");
  bench_cmd->add_option("--suite", bench.suite, "small|planted|stress")
      ->required();
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--out", bench.out,
                        "CSV path; JSON goes to PATH.json");
  bench_cmd->add_option("--force-branch", bench.force_branch);
  bench_cmd->add_option("--trial-cap", bench.trial_cap);
  bench_cmd->add_option("--threads", bench.threads);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) {
      PipelineConfig cfg;
      cfg.seed = solve.seed;
      cfg.trial_cap = solve.trial_cap;
      cfg.t = solve.t;
      cfg.force_branch = branch_arg(solve.force_branch);
      const Graph g = read_graph_file(solve.graph);
      out << to_json(min_kcut(g, solve.k, cfg)).dump(2) << '\n';
      return kExitOk;
    }
    if (oracle_cmd->parsed()) {
      const Graph g = read_graph_file(oracle_graph);
      const KCut cut = exact_min_kcut(g, oracle_k);
      nlohmann::json doc = cut_json(cut);
      doc["method"] = component_kcut(g, oracle_k)     ? "components"
                      : g.num_vertices() <= kDefaultKCutOracleLimit
                          ? "brute_force"
                          : "branch_and_bound";
      out << doc.dump(2) << '\n';
      return kExitOk;
    }
    if (gen_cmd->parsed()) {
      write_file(gen_out, format_graph(gen_instance(gen, gen_seed)));
      return kExitOk;
    }
    if (bench_cmd->parsed()) {
      PipelineConfig cfg;
      cfg.seed = bench.seed;
      cfg.trial_cap = bench.trial_cap;
      cfg.force_branch = branch_arg(bench.force_branch);
      const auto rows =
          run_bench(bench_suite(bench.suite, bench.seed), cfg, bench.threads);
      const std::string csv = bench_csv(rows);
      out << csv;
      if (!bench.out.empty()) {
        write_file(bench.out, csv);
        write_file(bench.out + ".json", bench_json(rows).dump(2) + "\n");
      }
      for (const BenchRow& r : rows) {
        if (r.agree == false || !r.kt_checks_ok) return kExitDisagreement;
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return kExitUsage;
}

}  // namespace kcut
