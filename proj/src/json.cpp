#include "kcut/json.hpp"

namespace kcut {

using nlohmann::json;

json to_json(const KTReport& report) {
  const KTParams& p = report.params;
  return {
      {"q", report.q},
      {"stages",
       {{"regularized_removed", report.regularized_removed},
        {"clusters", report.clusters},
        {"trimmed", report.trimmed},
        {"shaved", report.shaved},
        {"shattered", report.shattered}}},
      {"params",
       {{"epsilon", p.epsilon},
        {"gamma", p.gamma.value()},
        {"delta", p.delta},
        {"n", p.n},
        {"min_degree_floor", p.min_degree_floor}}},
      {"sparsifier_edges", report.sparsifier_edges},
      {"decomposition",
       {{"certified_blocks", report.certified_blocks},
        {"inter_block_weight", report.inter_block_weight},
        {"edge_budget", report.edge_budget}}},
      {"checks",
       {{"trim", report.checks.trim_ok},
        {"shave", report.checks.shave_ok},
        {"shatter", report.checks.shatter_ok},
        {"expanders_certified", report.checks.expanders_certified},
        {"edge_budget", report.checks.edge_budget_ok},
        {"partition", report.checks.partition_ok}}},
  };
}

json cut_json(const KCut& cut) {
  return {{"k", cut.k}, {"value", cut.value}, {"components", cut.components()}};
}

json to_json(const SolveReport& report) {
  json stats = {
      {"lambda_bar", report.lambda_bar},
      {"threshold", report.threshold},
      {"stage_ms", report.stage_ms},
  };
  if (report.partition) {
    stats["partition"] = to_json(*report.partition);
    stats["contracted_vertices"] = report.contracted_vertices;
    // The (1+1/k)-approximation is replaced by greedy splitting throughout.
    stats["approximation"] = "sv_2approx";
  }
  json guesses = json::array();
  for (const IslandGuessStats& g : report.guesses) {
    guesses.push_back({
        {"i", g.i},
        {"s", g.s},
        {"beta", g.beta},
        {"tau", g.tau},
        {"trials", g.trials},
        {"failed_guesses", g.failed_guesses},
        {"border_candidates", g.border_candidates},
        {"extended", g.extended},
        {"pruned", g.pruned},
        {"island_solves", g.island_solves},
        {"best_value", g.best_value ? json(*g.best_value) : json(nullptr)},
    });
  }
  if (!guesses.empty()) stats["borders"] = std::move(guesses);
  stats["fallback"] = report.method == "sv_fallback";

  json out = cut_json(report.cut);
  out["k"] = report.k;
  out["value"] = report.value;
  out["method"] = report.method;
  out["branch"] =
      report.branch ? json(to_string(*report.branch)) : json(nullptr);
  out["seed"] = report.seed;
  out["stats"] = std::move(stats);
  return out;
}

}  // namespace kcut
