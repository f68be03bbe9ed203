#ifndef KCUT_ORACLE_HPP
#define KCUT_ORACLE_HPP

#include <optional>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

inline constexpr int kDefaultKCutOracleLimit = 14;
inline constexpr int kDefaultIslandOracleLimit = 18;

/// Exhaustive minimum k-cut over all set partitions into exactly k blocks,
/// enumerated as restricted growth strings. Ties go to the lexicographically
/// smallest canonical label string. Refuses graphs above `n_limit` vertices.
KCut brute_force_min_kcut(const Graph& g, int k,
                          int n_limit = kDefaultKCutOracleLimit);

/// Exact minimum k-cut by depth-first branch and bound. Vertices are
/// assigned in maximum-adjacency order, each to an open part or a new one;
/// a branch is cut once its crossing weight plus a per-vertex lower bound
/// reaches the incumbent. Without an incumbent the search starts from
/// sv_2approx.
KCut branch_and_bound_min_kcut(const Graph& g, int k,
                               std::optional<KCut> incumbent = std::nullopt);

/// A zero-value k-cut built from the connected components when there are at
/// least k of them: the first k-1 components (by smallest member) become
/// parts and the rest share the last part.
std::optional<KCut> component_kcut(const Graph& g, int k);

/// Dispatches to component_kcut, brute force (n <= n_limit) or branch and
/// bound.
KCut exact_min_kcut(const Graph& g, int k,
                    int n_limit = kDefaultKCutOracleLimit,
                    std::optional<KCut> incumbent = std::nullopt);

struct IslandSolution {
  Weight value = 0;
  /// Sorted island vertices.
  std::vector<Vertex> islands;
};

/// Weight of edges with at least one endpoint in `islands`, i.e. the value
/// of the (r+1)-cut that makes each island its own part.
Weight island_cut_value(const Graph& g, std::span<const Vertex> islands);

/// Exhaustive r-island oracle over all r-subsets in lexicographic order.
IslandSolution brute_force_r_island(const Graph& g, int r,
                                    int n_limit = kDefaultIslandOracleLimit);

/// Stoer-Wagner global minimum cut. A disconnected graph yields value 0 with
/// the component of vertex 0 on one side. Requires n >= 2.
KCut stoer_wagner_mincut(const Graph& g);

/// Greedy splitting (Saran-Vazirani): repeatedly applies the cheapest
/// minimum 2-cut among the current parts' induced subgraphs until k parts
/// exist. Value is within 2(1 - 1/k) of optimal.
KCut sv_2approx(const Graph& g, int k);

}  // namespace kcut

#endif  // KCUT_ORACLE_HPP
