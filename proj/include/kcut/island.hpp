#ifndef KCUT_ISLAND_HPP
#define KCUT_ISLAND_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "kcut/graph.hpp"
#include "kcut/matrix.hpp"
#include "kcut/oracle.hpp"

namespace kcut {

/// A vertex subset of size r/3 with its internal edge count and the edges
/// leaving it.
struct SubsetProfile {
  std::uint64_t subset = 0;
  Weight internal = 0;
  Weight outgoing = 0;
};

/// The nine numbers fixed while searching for a triangle (S1, S2, S3) in the
/// subset graph: internal[i] = w_Si, outgoing[i] = w_Si^V and
/// pairwise = {w_S1S2, w_S2S3, w_S3S1}.
struct ParameterGuess {
  std::array<Weight, 3> internal{};
  std::array<Weight, 3> outgoing{};
  std::array<Weight, 3> pairwise{};

  /// Value of the cut isolating S1 u S2 u S3:
  ///   sum w_Si + sum w_SiSj + sum (w_Si^V - w_SiSj - w_SkSi)
  /// which is exactly the weight of edges touching the islands.
  Weight implied_value() const;
};

struct IslandSearchStats {
  int padded_r = 0;
  int dummies = 0;
  std::int64_t subsets = 0;
  std::int64_t profile_classes = 0;
  /// Feasible guesses generated and guesses run through triangle detection.
  std::int64_t guesses = 0;
  std::int64_t triangle_searches = 0;
  /// (C(t,2)+1)^3 ((t n)+1)^3 (t^2+1)^3 with t = padded_r / 3.
  double parameter_space_bound = 0;
};

/// Exact r-island solver. r = 1, 2 by direct enumeration; r >= 3 pads with
/// isolated dummy vertices to a multiple of 3 and runs triangle detection on
/// the (r/3)-subset graph for every feasible parameter guess, cheapest
/// implied value first. Ties go to the lexicographically smallest island
/// set. Requires a simple graph with at most 64 vertices after padding.
IslandSolution solve_r_island(const Graph& g, int r,
                              IslandSearchStats* stats = nullptr,
                              const MatmulOptions& matmul_options = {});

struct ExtendStats {
  std::int64_t compositions = 0;
  std::int64_t island_solves = 0;
};

/// Carves i islands out of the non-singleton parts of a (k-i)-cut: tries
/// every split of i over those parts (a part of size p takes at most p-1),
/// solves each part's island problem on its induced subgraph, and returns
/// the cheapest resulting k-cut. nullopt when no split fits.
std::optional<KCut> extend_border(const Graph& g, const KCut& border_cut,
                                  int i, ExtendStats* stats = nullptr);

}  // namespace kcut

#endif  // KCUT_ISLAND_HPP
