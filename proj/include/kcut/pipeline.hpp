#ifndef KCUT_PIPELINE_HPP
#define KCUT_PIPELINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kcut/border_finder.hpp"
#include "kcut/graph.hpp"
#include "kcut/kt_partition.hpp"
#include "kcut/oracle.hpp"

namespace kcut {

enum class Branch { kExact, kSparsify };

std::string to_string(Branch branch);
std::optional<Branch> parse_branch(const std::string& text);

struct PipelineConfig {
  /// Exponent of the exact algorithm the threshold is tuned for.
  int t = 2;
  double threshold_const = 10.0;
  std::int64_t trial_cap = kDefaultTrialCap;
  int oracle_n_limit = kDefaultKCutOracleLimit;
  std::uint64_t seed = 0;
  std::optional<Branch> force_branch;
};

/// Per island-count guess i of the sparsify branch.
struct IslandGuessStats {
  int i = 0;
  int s = 0;
  double beta = 0;
  int tau = 0;
  std::int64_t trials = 0;
  std::int64_t failed_guesses = 0;
  std::int64_t border_candidates = 0;
  std::int64_t extended = 0;
  std::int64_t pruned = 0;
  std::int64_t island_solves = 0;
  std::optional<Weight> best_value;
};

struct SolveReport {
  int k = 0;
  Weight value = 0;
  KCut cut;
  /// "components", "brute_force", "branch_and_bound", "sparsify" or
  /// "sv_fallback".
  std::string method;
  std::optional<Branch> branch;
  Weight lambda_bar = 0;
  double threshold = 0;
  std::uint64_t seed = 0;
  std::optional<KTReport> partition;
  int contracted_vertices = 0;
  std::vector<IslandGuessStats> guesses;
  /// Stage name -> wall time in milliseconds.
  std::map<std::string, double> stage_ms;
};

/// lambda_bar <= threshold_const * n^(1/(t+1)) selects the exact branch.
double exact_branch_threshold(int n, const PipelineConfig& cfg);

/// Minimum k-cut of a simple graph. Graphs with at least k components are
/// answered with a zero cut. Otherwise the greedy-splitting approximation
/// picks the branch: exact search for small values, or KT partition,
/// randomized border listing per island count and island extension. The
/// approximate cut is kept as a floor, so the answer is never worse.
SolveReport min_kcut(const Graph& g, int k, const PipelineConfig& cfg = {});

}  // namespace kcut

#endif  // KCUT_PIPELINE_HPP
