#ifndef KCUT_GENERATORS_HPP
#define KCUT_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kcut/graph.hpp"

namespace kcut {

/// Erdos-Renyi G(n, p).
Graph gnp_graph(int n, double p, std::uint64_t seed);

/// Cycle 0-1-...-(n-1)-0.
Graph cycle_graph(int n);

/// `count` cliques of `size` vertices; consecutive cliques j, j+1 are joined
/// by `bridges` edges (j*size + b, (j+1)*size + b), b < bridges.
Graph cliques_bridge_graph(int size, int count, int bridges);

struct PlantedInstance {
  Graph graph;
  /// Planted cluster per vertex; -1 for planted islands.
  std::vector<int> cluster_of;
  std::vector<Vertex> islands;
};

/// k clusters of `size` vertices (cluster c holds c*size..(c+1)*size-1),
/// edges inside clusters with probability p_in and between clusters with
/// p_out, then `islands` extra vertices each attached to `island_degree`
/// distinct vertices of one random cluster.
PlantedInstance planted_graph(int k, int size, double p_in, double p_out,
                              int islands, std::uint64_t seed,
                              int island_degree = 2);

struct GenParams {
  std::string kind;  // gnp | planted | cycle | cliques_bridge
  int n = 0;
  double p = 0.5;
  int k = 2;
  int size = 5;
  double p_in = 0.9;
  double p_out = 0.05;
  int islands = 0;
  int island_degree = 2;
  int count = 2;
  int bridges = 1;
};

/// Dispatches on params.kind; throws kInvalidArgument on bad parameters.
Graph gen_instance(const GenParams& params, std::uint64_t seed);

}  // namespace kcut

#endif  // KCUT_GENERATORS_HPP
