#ifndef KCUT_KT_PARTITION_HPP
#define KCUT_KT_PARTITION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

/// Exact positive fraction num/den.
struct Ratio {
  Weight num = 1;
  Weight den = 1;

  double value() const { return static_cast<double>(num) / den; }
};

struct KTParams {
  int k = 2;
  /// Shaving fraction 1/(k log2 n), n the post-regularization vertex count.
  double epsilon = 0.5;
  /// Expander parameter 1/delta (1 when delta <= 1).
  Ratio gamma;
  /// Vertices of degree below this are split off as trivial parts.
  double min_degree_floor = 0;
  /// Fraction of degree a cluster vertex must keep inside to survive trim.
  Ratio trim_fraction{2, 5};
  Weight delta = 0;
  int n = 0;
};

/// Derives the parameters from the regularized graph and the approximation.
KTParams make_kt_params(int n, int k, Weight delta, Weight lambda_bar);

struct ClusterState {
  std::vector<std::vector<Vertex>> clusters;
  /// Sorted singleton set S.
  std::vector<Vertex> singletons;
  /// One core per cluster once shaved; empty before that.
  std::vector<std::vector<Vertex>> cores;
};

/// A (k - |I|)-cut obtained from a k-cut by merging some singleton parts
/// (the islands) into non-singleton parts.
struct Border {
  KCut base_cut;
  /// (island, label of its host part in base_cut), sorted by island.
  std::vector<std::pair<Vertex, int>> merged;
  /// Sorted island vertices.
  std::vector<Vertex> islands;

  /// Re-singles every island, recovering a k-cut of g.
  KCut reconstruct(const Graph& g) const;
};

/// Merges each island (a singleton part of `cut`) into the part that holds
/// `hosts[i]`, which must be a vertex of a non-singleton part.
Border make_border(const Graph& g, const KCut& cut,
                   std::span<const Vertex> islands,
                   std::span<const Vertex> hosts);

/// True when every block of `p` lies inside a single part of `cut`, so the
/// cut survives contracting the blocks.
bool agrees_with_partition(const KCut& cut, const VertexPartition& p);

/// Searches all island sets I and host maps sigma of `min_cut` for a border
/// that agrees with `p`; returns the cheapest one.
std::optional<Border> find_agreeing_border(const Graph& g, const KCut& min_cut,
                                           const VertexPartition& p);

struct Regularized {
  /// Remaining graph, densely relabeled.
  Graph graph;
  /// Removed vertices (ids of the input) in removal order.
  std::vector<Vertex> removed;
  /// original_id[i] is the input vertex that became i.
  std::vector<Vertex> original_id;
};

/// Repeatedly removes the lowest-id vertex whose current degree is below
/// lambda_bar / (2(k-1)). Throws kInvariant if k or more vertices go, since
/// that would certify a k-cut cheaper than lambda_bar allows.
Regularized regularize(const Graph& g, int k, Weight lambda_bar);

struct ExpanderDecomposition {
  VertexPartition partition;
  /// certified[b]: block b was verified a gamma-expander by exhaustive
  /// search (always the case for blocks of at most kExactExpanderLimit).
  std::vector<char> certified;
  Weight inter_block_weight = 0;
};

inline constexpr int kExactExpanderLimit = 16;
inline constexpr double kDecompositionBudgetConst = 10.0;

/// Recursively splits along cuts of conductance below gamma: exhaustive
/// search on blocks of at most 16 vertices, spectral sweep above that.
ExpanderDecomposition expander_decompose(const Graph& g, Ratio gamma);

/// Minimum-conductance nonempty proper subset of G[block], by exhaustive
/// enumeration. Block must have 2..kExactExpanderLimit vertices.
std::pair<Conductance, std::vector<Vertex>> min_conductance_cut(
    const Graph& g, std::span<const Vertex> block);

/// 10 * gamma * m * log2 m, the allowed inter-block weight.
double decomposition_edge_budget(const Graph& g, Ratio gamma);

/// Trimming: moves cluster vertices keeping at most 2/5 of their degree
/// inside their cluster to the singletons, lowest id first, to a fixpoint.
ClusterState trim(const Graph& g, ClusterState state);

/// Shaving: one simultaneous pass; cluster vertices keeping at most
/// (1 - epsilon) of their degree inside become singletons, the rest of each
/// cluster becomes its core.
ClusterState shave(const Graph& g, ClusterState state, double epsilon);

/// Shattering: cores of at most k vertices dissolve into singletons.
ClusterState shatter(ClusterState state, int k);

struct KTChecks {
  bool trim_ok = true;
  bool shave_ok = true;
  bool shatter_ok = true;
  bool expanders_certified = true;
  bool edge_budget_ok = true;
  bool partition_ok = true;

  bool all() const {
    return trim_ok && shave_ok && shatter_ok && expanders_certified &&
           edge_budget_ok && partition_ok;
  }
};

struct KTReport {
  int q = 0;
  std::size_t sparsifier_edges = 0;
  int regularized_removed = 0;
  int clusters = 0;
  int trimmed = 0;
  int shaved = 0;
  int shattered = 0;
  int certified_blocks = 0;
  Weight inter_block_weight = 0;
  double edge_budget = 0;
  KTParams params;
  KTChecks checks;
};

struct KTResult {
  /// Partition of the full input vertex set.
  VertexPartition partition;
  KTReport report;
  /// Intermediate state, in regularized-graph ids.
  Regularized regularized;
  ExpanderDecomposition decomposition;
  ClusterState state;
};

/// Re-checks the trim, shave and shatter thresholds, certifies small
/// expander blocks by brute-force conductance and checks the edge budget.
KTChecks check_kt_postconditions(const Graph& regularized,
                                 const ExpanderDecomposition& decomposition,
                                 const ClusterState& state,
                                 const KTParams& params);

/// NI-sparsify with s = lambda_bar, regularize, expander-decompose, trim,
/// shave, shatter; the final partition is the nonempty cores plus every
/// singleton and trivially removed vertex as its own block.
KTResult kt_partition(const Graph& g, int k, Weight lambda_bar);

}  // namespace kcut

#endif  // KCUT_KT_PARTITION_HPP
