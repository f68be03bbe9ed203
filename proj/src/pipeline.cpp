#include "kcut/pipeline.hpp"

#include <chrono>
#include <cmath>

#include "kcut/error.hpp"
#include "kcut/island.hpp"
#include "kcut/log.hpp"

namespace kcut {
namespace {

class StageTimer {
 public:
  StageTimer(std::map<std::string, double>& sink, std::string name)
      : sink_(sink), name_(std::move(name)),
        start_(std::chrono::steady_clock::now()) {}
  ~StageTimer() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    sink_[name_] +=
        std::chrono::duration<double, std::milli>(elapsed).count();
  }

 private:
  std::map<std::string, double>& sink_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

// (value, canonical labels) ordering used for every final reduction.
bool better(const KCut& a, const KCut& b) {
  if (a.value != b.value) return a.value < b.value;
  return a.labels < b.labels;
}

}  // namespace

std::string to_string(Branch branch) {
  return branch == Branch::kExact ? "exact" : "sparsify";
}

std::optional<Branch> parse_branch(const std::string& text) {
  if (text == "exact") return Branch::kExact;
  if (text == "sparsify") return Branch::kSparsify;
  return std::nullopt;
}

double exact_branch_threshold(int n, const PipelineConfig& cfg) {
  return cfg.threshold_const * std::pow(static_cast<double>(n), 1.0 / (cfg.t + 1));
}

SolveReport min_kcut(const Graph& g, int k, const PipelineConfig& cfg) {
  require(g.is_simple(), ErrorKind::kInvalidArgument,
          "the solver needs a simple graph");
  require(k >= 2 && k <= g.num_vertices(), ErrorKind::kDomain,
          "k must lie in [2, n]");
  require(cfg.t >= 1, ErrorKind::kInvalidArgument, "t must be at least 1");
  require(cfg.threshold_const > 0, ErrorKind::kInvalidArgument,
          "threshold constant must be positive");
  require(cfg.trial_cap >= 1, ErrorKind::kInvalidArgument,
          "trial cap must be positive");

  SolveReport report;
  report.k = k;
  report.seed = cfg.seed;
  report.threshold = exact_branch_threshold(g.num_vertices(), cfg);

  if (auto zero = component_kcut(g, k)) {
    report.cut = *zero;
    report.value = 0;
    report.method = "components";
    return report;
  }

  KCut approx;
  {
    StageTimer timer(report.stage_ms, "approximation");
    approx = sv_2approx(g, k);
  }
  report.lambda_bar = approx.value;
  const Branch branch =
      cfg.force_branch.value_or(static_cast<double>(approx.value) <=
                                        report.threshold
                                    ? Branch::kExact
                                    : Branch::kSparsify);
  report.branch = branch;
  logger().info("min_kcut: n={} m={} k={} lambda_bar={} branch={}",
               g.num_vertices(), g.total_weight(), k, approx.value,
               to_string(branch));

  if (branch == Branch::kExact) {
    StageTimer timer(report.stage_ms, "exact");
    report.method = g.num_vertices() <= cfg.oracle_n_limit
                        ? "brute_force"
                        : "branch_and_bound";
    report.cut = exact_min_kcut(g, k, cfg.oracle_n_limit, approx);
    report.value = report.cut.value;
    return report;
  }

  KTResult kt;
  {
    StageTimer timer(report.stage_ms, "kt_partition");
    kt = kt_partition(g, k, approx.value);
  }
  report.partition = kt.report;
  Contraction contracted = contract(g, kt.partition);
  const Graph& small = contracted.graph;
  report.contracted_vertices = small.num_vertices();

  std::optional<KCut> best;
  for (int i = 0; i < k; ++i) {
    const int s = k - i;
    if (s > small.num_vertices()) continue;
    IslandGuessStats gs;
    gs.i = i;
    BorderParams params = make_border_params(small.num_vertices(), k, i,
                                             cfg.seed, cfg.trial_cap);
    gs.s = params.s;
    gs.beta = params.beta;
    gs.tau = params.tau;

    BorderList borders;
    {
      StageTimer timer(report.stage_ms, "borders");
      borders = enumerate_borders(small, params);
    }
    gs.trials = borders.trials;
    gs.failed_guesses = borders.failed_guesses;
    gs.border_candidates = static_cast<std::int64_t>(borders.cuts.size());

    StageTimer timer(report.stage_ms, "islands");
    for (const KCut& candidate : borders.cuts) {
      const Weight floor = best ? best->value : approx.value;
      // Islands only add weight; a border already above the floor is done.
      if (candidate.value > floor) {
        ++gs.pruned;
        continue;
      }
      KCut border = lift_cut(g, contracted.map, candidate);
      ExtendStats es;
      std::optional<KCut> cut = extend_border(g, border, i, &es);
      gs.island_solves += es.island_solves;
      ++gs.extended;
      if (!cut) continue;
      if (!gs.best_value || cut->value < *gs.best_value) {
        gs.best_value = cut->value;
      }
      if (!best || better(*cut, *best)) best = std::move(*cut);
    }
    logger().debug("min_kcut: i={} s={} tau={} trials={} candidates={} best={}",
                  i, s, params.tau, gs.trials, gs.border_candidates,
                  gs.best_value ? std::to_string(*gs.best_value) : "-");
    report.guesses.push_back(gs);
  }

  if (best && best->value <= approx.value) {
    report.cut = std::move(*best);
    report.method = "sparsify";
  } else {
    report.cut = approx;
    report.method = "sv_fallback";
  }
  report.value = report.cut.value;
  require(cut_value(g, report.cut) == report.value && report.cut.k == k,
          ErrorKind::kInvariant, "solver produced an inconsistent cut");
  return report;
}

}  // namespace kcut
