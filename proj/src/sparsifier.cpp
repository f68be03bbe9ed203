#include "kcut/sparsifier.hpp"

#include <numeric>

#include "kcut/error.hpp"

namespace kcut {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::vector<std::vector<Edge>> forest_decomposition(const Graph& g, int s) {
  require(g.is_simple(), ErrorKind::kInvalidArgument,
          "forest decomposition needs a simple graph");
  require(s >= 1, ErrorKind::kInvalidArgument, "s must be at least 1");
  std::vector<Edge> remaining(g.edges().begin(), g.edges().end());
  std::vector<std::vector<Edge>> forests;
  forests.reserve(s);
  for (int i = 0; i < s; ++i) {
    UnionFind uf(g.num_vertices());
    std::vector<Edge> forest;
    std::vector<Edge> rest;
    for (const Edge& e : remaining) {
      if (uf.unite(e.u, e.v)) {
        forest.push_back(e);
      } else {
        rest.push_back(e);
      }
    }
    forests.push_back(std::move(forest));
    remaining = std::move(rest);
  }
  return forests;
}

Graph ni_sparsify(const Graph& g, int s) {
  std::vector<Edge> kept;
  for (const auto& forest : forest_decomposition(g, s)) {
    kept.insert(kept.end(), forest.begin(), forest.end());
  }
  return Graph::from_edges(g.num_vertices(), kept);
}

}  // namespace kcut
