#ifndef KCUT_SPARSIFIER_HPP
#define KCUT_SPARSIFIER_HPP

#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

/// s edge-disjoint forests; forest i is a maximal spanning forest of g with
/// forests 0..i-1 removed. Each forest is built by one union-find pass over
/// the remaining edges in sorted (u, v) order. Requires a simple graph.
std::vector<std::vector<Edge>> forest_decomposition(const Graph& g, int s);

/// Nagamochi-Ibaraki sparsifier: the union of the s forests. Has at most
/// s*n edges, and every k-cut of value <= s crosses exactly the same edges
/// as in g.
Graph ni_sparsify(const Graph& g, int s);

}  // namespace kcut

#endif  // KCUT_SPARSIFIER_HPP
