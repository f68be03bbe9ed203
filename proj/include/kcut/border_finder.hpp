#ifndef KCUT_BORDER_FINDER_HPP
#define KCUT_BORDER_FINDER_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

using Rng = std::mt19937_64;

inline constexpr std::int64_t kDefaultTrialCap = 100000;

struct BorderParams {
  /// Number of parts in each listed cut.
  int s = 2;
  double beta = 1.0;
  /// Contraction stops at tau vertices.
  int tau = 2;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
};

/// Stop threshold ceil(8 beta k^2 + 2k).
int contraction_threshold(double beta, int k);

/// beta = 1 - (1 - 2/log2 n) i / k for island-count guess i.
double border_beta(int n, int k, int i);

/// Repetitions needed to list a fixed s-cut: ln n * n^(beta k) for the
/// contraction stage times s^min(n, tau) / s! for the final guess, capped.
std::int64_t default_trial_budget(int n, int k, int s, double beta, int tau,
                                  std::int64_t cap);

/// Parameters for island-count guess i on a graph of n vertices.
BorderParams make_border_params(int n, int k, int i, std::uint64_t seed,
                                std::int64_t trial_cap = kDefaultTrialCap);

/// Contracts edges chosen with probability proportional to weight until at
/// most tau super-vertices remain or no edge is left.
Contraction contract_random(const Graph& g, int tau, Rng& rng);

/// Labels each vertex uniformly from 0..s-1, retrying up to 100 s^2 times
/// until every label is used; nullopt when all attempts leave a part empty.
std::optional<KCut> random_s_cut(const Graph& g, int s, Rng& rng);

struct BorderList {
  /// Distinct s-cuts of the input, sorted by value then canonical labels.
  std::vector<KCut> cuts;
  std::int64_t trials = 0;
  std::int64_t failed_guesses = 0;
};

/// Runs params.trials independent contract-then-guess repetitions (trial t
/// seeded with seed ^ t) and lifts each guess back to a cut of g.
BorderList enumerate_borders(const Graph& g, const BorderParams& params);

}  // namespace kcut

#endif  // KCUT_BORDER_FINDER_HPP
