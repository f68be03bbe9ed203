#include "kcut/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "kcut/error.hpp"

namespace kcut {
namespace {

void check_probability(double p) {
  require(p >= 0.0 && p <= 1.0, ErrorKind::kInvalidArgument,
          "probability must lie in [0, 1]");
}

}  // namespace

Graph gnp_graph(int n, double p, std::uint64_t seed) {
  require(n >= 1, ErrorKind::kInvalidArgument, "gnp needs n >= 1");
  check_probability(p);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v, 1});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, ErrorKind::kInvalidArgument, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, 1});
  return Graph::from_edges(n, edges);
}

Graph cliques_bridge_graph(int size, int count, int bridges) {
  require(size >= 1 && count >= 1, ErrorKind::kInvalidArgument,
          "cliques_bridge needs size >= 1 and count >= 1");
  require(bridges >= 0 && bridges <= size, ErrorKind::kInvalidArgument,
          "bridges must lie in [0, size]");
  std::vector<Edge> edges;
  for (int c = 0; c < count; ++c) {
    const Vertex base = c * size;
    for (Vertex u = 0; u < size; ++u) {
      for (Vertex v = u + 1; v < size; ++v) {
        edges.push_back({base + u, base + v, 1});
      }
    }
    if (c + 1 < count) {
      for (Vertex b = 0; b < bridges; ++b) {
        edges.push_back({base + b, base + size + b, 1});
      }
    }
  }
  return Graph::from_edges(size * count, edges);
}

PlantedInstance planted_graph(int k, int size, double p_in, double p_out,
                              int islands, std::uint64_t seed,
                              int island_degree) {
  require(k >= 1 && size >= 1 && islands >= 0, ErrorKind::kInvalidArgument,
          "planted needs k >= 1, size >= 1, islands >= 0");
  require(island_degree >= 1 && island_degree <= size,
          ErrorKind::kInvalidArgument, "island degree must lie in [1, size]");
  check_probability(p_in);
  check_probability(p_out);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution inside(p_in);
  std::bernoulli_distribution across(p_out);

  PlantedInstance out;
  const int core_n = k * size;
  const int n = core_n + islands;
  out.cluster_of.assign(n, -1);
  for (Vertex v = 0; v < core_n; ++v) out.cluster_of[v] = v / size;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < core_n; ++u) {
    for (Vertex v = u + 1; v < core_n; ++v) {
      const bool same = out.cluster_of[u] == out.cluster_of[v];
      if (same ? inside(rng) : across(rng)) edges.push_back({u, v, 1});
    }
  }
  std::uniform_int_distribution<int> pick_cluster(0, k - 1);
  std::vector<Vertex> members(size);
  for (int i = 0; i < islands; ++i) {
    const Vertex island = core_n + i;
    const int c = pick_cluster(rng);
    std::iota(members.begin(), members.end(), c * size);
    std::shuffle(members.begin(), members.end(), rng);
    for (int d = 0; d < island_degree; ++d) {
      edges.push_back({island, members[d], 1});
    }
    out.islands.push_back(island);
  }
  out.graph = Graph::from_edges(n, edges);
  return out;
}

Graph gen_instance(const GenParams& params, std::uint64_t seed) {
  if (params.kind == "gnp") return gnp_graph(params.n, params.p, seed);
  if (params.kind == "cycle") return cycle_graph(params.n);
  if (params.kind == "cliques_bridge") {
    return cliques_bridge_graph(params.size, params.count, params.bridges);
  }
  if (params.kind == "planted") {
    return planted_graph(params.k, params.size, params.p_in, params.p_out,
                         params.islands, seed, params.island_degree)
        .graph;
  }
  fail(ErrorKind::kInvalidArgument, "unknown instance kind: " + params.kind);
}

}  // namespace kcut
