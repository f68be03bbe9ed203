// Expander decomposition used by the KT partition.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "kcut/error.hpp"
#include "kcut/kt_partition.hpp"

namespace kcut {
namespace {

struct LocalCut {
  Conductance value;
  std::vector<Vertex> side;  // Local ids.
};

LocalCut exhaustive_cut(const Graph& sub) {
  const int n = sub.num_vertices();
  std::vector<Weight> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = sub.degree(v);
  const Weight total_volume = 2 * sub.total_weight();

  // Subsets avoiding the last vertex cover every cut once (complements).
  const std::uint32_t limit = 1u << (n - 1);
  LocalCut best{{1, 0}, {}};
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    Weight vol = 0;
    for (int v = 0; v < n - 1; ++v) {
      if (mask >> v & 1u) vol += deg[v];
    }
    Weight boundary = 0;
    for (const Edge& e : sub.edges()) {
      const bool a = e.u < n - 1 && (mask >> e.u & 1u);
      const bool b = e.v < n - 1 && (mask >> e.v & 1u);
      if (a != b) boundary += e.w;
    }
    Conductance c{boundary, std::min(vol, total_volume - vol)};
    if (best_mask == 0 || c < best.value) {
      best.value = c;
      best_mask = mask;
    }
  }
  for (int v = 0; v < n - 1; ++v) {
    if (best_mask >> v & 1u) best.side.push_back(v);
  }
  return best;
}

// Sweep over the order given by the second eigenvector of the normalized
// Laplacian. `sub` must be connected with at least two vertices.
LocalCut spectral_sweep_cut(const Graph& sub) {
  const int n = sub.num_vertices();
  Eigen::MatrixXd normalized = Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd inv_sqrt_deg(n);
  for (int v = 0; v < n; ++v) {
    inv_sqrt_deg[v] = 1.0 / std::sqrt(static_cast<double>(sub.degree(v)));
  }
  for (const Edge& e : sub.edges()) {
    const double x = -static_cast<double>(e.w) * inv_sqrt_deg[e.u] *
                     inv_sqrt_deg[e.v];
    normalized(e.u, e.v) = x;
    normalized(e.v, e.u) = x;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(normalized);
  Eigen::VectorXd fiedler = solver.eigenvectors().col(1);

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return fiedler[a] * inv_sqrt_deg[a] < fiedler[b] * inv_sqrt_deg[b];
  });

  const Weight total_volume = 2 * sub.total_weight();
  std::vector<char> in(n, 0);
  Weight boundary = 0;
  Weight vol = 0;
  LocalCut best{{1, 0}, {}};
  int best_len = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const Vertex v = order[i];
    Weight inside = 0;
    for (const Neighbor& nb : sub.neighbors(v)) {
      if (in[nb.v]) inside += nb.w;
    }
    in[v] = 1;
    boundary += sub.degree(v) - 2 * inside;
    vol += sub.degree(v);
    Conductance c{boundary, std::min(vol, total_volume - vol)};
    if (best_len == 0 || c < best.value) {
      best.value = c;
      best_len = i + 1;
    }
  }
  best.side.assign(order.begin(), order.begin() + best_len);
  return best;
}

}  // namespace

std::pair<Conductance, std::vector<Vertex>> min_conductance_cut(
    const Graph& g, std::span<const Vertex> block) {
  require(block.size() >= 2 &&
              block.size() <= static_cast<std::size_t>(kExactExpanderLimit),
          ErrorKind::kInvalidArgument,
          "exhaustive conductance search needs 2..16 vertices");
  InducedSubgraph sub = induced_subgraph(g, block);
  require(sub.graph.total_weight() > 0, ErrorKind::kDomain,
          "conductance needs at least one edge");
  LocalCut cut = exhaustive_cut(sub.graph);
  std::vector<Vertex> side;
  for (Vertex v : cut.side) side.push_back(sub.original_id[v]);
  std::sort(side.begin(), side.end());
  return {cut.value, side};
}

double decomposition_edge_budget(const Graph& g, Ratio gamma) {
  const double m = static_cast<double>(g.total_weight());
  if (m <= 1) return 0.0;
  return kDecompositionBudgetConst * gamma.value() * m * std::log2(m);
}

ExpanderDecomposition expander_decompose(const Graph& g, Ratio gamma) {
  require(gamma.num > 0 && gamma.den > 0 && gamma.num <= gamma.den,
          ErrorKind::kInvalidArgument, "gamma must lie in (0, 1]");
  ExpanderDecomposition out;
  std::vector<std::pair<std::vector<Vertex>, bool>> done;
  std::vector<std::vector<Vertex>> work;
  for (auto& comp : connected_components(g).blocks) work.push_back(comp);

  while (!work.empty()) {
    std::vector<Vertex> block = std::move(work.back());
    work.pop_back();
    if (block.size() == 1) {
      done.emplace_back(std::move(block), true);
      continue;
    }
    InducedSubgraph sub = induced_subgraph(g, block);
    VertexPartition comps = connected_components(sub.graph);
    if (comps.size() > 1) {
      for (const auto& comp : comps.blocks) {
        std::vector<Vertex> piece;
        for (Vertex v : comp) piece.push_back(sub.original_id[v]);
        work.push_back(std::move(piece));
      }
      continue;
    }
    const bool exact = block.size() <= kExactExpanderLimit;
    LocalCut cut =
        exact ? exhaustive_cut(sub.graph) : spectral_sweep_cut(sub.graph);
    if (!conductance_below(cut.value, gamma.num, gamma.den)) {
      done.emplace_back(std::move(block), exact);
      continue;
    }
    std::vector<char> in_side(block.size(), 0);
    for (Vertex v : cut.side) in_side[v] = 1;
    std::vector<Vertex> left;
    std::vector<Vertex> right;
    for (std::size_t i = 0; i < block.size(); ++i) {
      (in_side[i] ? left : right).push_back(block[i]);
    }
    work.push_back(std::move(left));
    work.push_back(std::move(right));
  }

  for (auto& [block, certified] : done) std::sort(block.begin(), block.end());
  std::sort(done.begin(), done.end(), [](const auto& a, const auto& b) {
    return a.first.front() < b.first.front();
  });
  for (auto& [block, certified] : done) {
    out.partition.blocks.push_back(std::move(block));
    out.certified.push_back(certified ? 1 : 0);
  }
  const std::vector<int> block_of = out.partition.block_of(g.num_vertices());
  for (const Edge& e : g.edges()) {
    if (block_of[e.u] != block_of[e.v]) out.inter_block_weight += e.w;
  }
  return out;
}

}  // namespace kcut
