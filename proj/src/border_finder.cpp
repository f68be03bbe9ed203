#include "kcut/border_finder.hpp"

#include <algorithm>
#include <cmath>
#include <map>
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
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

int contraction_threshold(double beta, int k) {
  // Round away float noise before taking the ceiling.
  const double raw = 8.0 * beta * k * k + 2.0 * k;
  return static_cast<int>(std::ceil(raw - 1e-9));
}

double border_beta(int n, int k, int i) {
  const double log_n = std::max(1.0, std::log2(std::max(n, 2)));
  return 1.0 - (1.0 - 2.0 / log_n) * i / k;
}

std::int64_t default_trial_budget(int n, int k, int s, double beta, int tau,
                                  std::int64_t cap) {
  const double size = std::max(n, 2);
  double log_budget = std::log(std::log(size)) + beta * k * std::log(size);
  const int guessed = std::min(n, tau);
  log_budget += guessed * std::log(static_cast<double>(s)) - std::lgamma(s + 1.0);
  if (log_budget >= std::log(static_cast<double>(cap))) return cap;
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(
                                       std::ceil(std::exp(log_budget))));
}

BorderParams make_border_params(int n, int k, int i, std::uint64_t seed,
                                std::int64_t trial_cap) {
  BorderParams params;
  params.s = k - i;
  params.beta = border_beta(n, k, i);
  params.tau = contraction_threshold(params.beta, k);
  params.trials = default_trial_budget(n, k, params.s, params.beta,
                                       params.tau, trial_cap);
  params.seed = seed;
  return params;
}

Contraction contract_random(const Graph& g, int tau, Rng& rng) {
  require(tau >= 1, ErrorKind::kInvalidArgument, "tau must be positive");
  const int n = g.num_vertices();
  UnionFind uf(n);
  int remaining = n;
  std::vector<Weight> prefix;
  std::vector<std::size_t> live;
  while (remaining > tau) {
    prefix.clear();
    live.clear();
    Weight total = 0;
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (uf.find(edges[i].u) == uf.find(edges[i].v)) continue;
      total += edges[i].w;
      prefix.push_back(total);
      live.push_back(i);
    }
    if (total == 0) break;
    std::uniform_int_distribution<Weight> pick(0, total - 1);
    const Weight x = pick(rng);
    const std::size_t j =
        std::upper_bound(prefix.begin(), prefix.end(), x) - prefix.begin();
    uf.unite(edges[live[j]].u, edges[live[j]].v);
    --remaining;
  }

  std::map<int, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < n; ++v) groups[uf.find(v)].push_back(v);
  VertexPartition p;
  for (auto& [root, members] : groups) p.blocks.push_back(std::move(members));
  p.normalize();
  return contract(g, p);
}

std::optional<KCut> random_s_cut(const Graph& g, int s, Rng& rng) {
  const int n = g.num_vertices();
  require(s >= 1 && s <= n, ErrorKind::kInvalidArgument,
          "part count must lie in [1, n]");
  std::uniform_int_distribution<int> label(0, s - 1);
  std::vector<int> labels(n);
  std::vector<char> used(s);
  const int attempts = 100 * s * s;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::fill(used.begin(), used.end(), 0);
    int distinct = 0;
    for (int v = 0; v < n; ++v) {
      labels[v] = label(rng);
      if (!used[labels[v]]) {
        used[labels[v]] = 1;
        ++distinct;
      }
    }
    if (distinct == s) return make_kcut(g, labels, s);
  }
  return std::nullopt;
}

BorderList enumerate_borders(const Graph& g, const BorderParams& params) {
  require(params.trials >= 1, ErrorKind::kInvalidArgument,
          "at least one trial required");
  require(params.s >= 1, ErrorKind::kInvalidArgument, "s must be positive");
  BorderList out;
  std::map<std::vector<int>, KCut> seen;
  for (std::int64_t t = 0; t < params.trials; ++t) {
    Rng rng(params.seed ^ static_cast<std::uint64_t>(t));
    ++out.trials;
    Contraction c = contract_random(g, params.tau, rng);
    if (c.graph.num_vertices() < params.s) {
      ++out.failed_guesses;
      continue;
    }
    std::optional<KCut> guess = random_s_cut(c.graph, params.s, rng);
    if (!guess) {
      ++out.failed_guesses;
      continue;
    }
    KCut lifted = lift_cut(g, c.map, *guess);
    seen.try_emplace(lifted.labels, std::move(lifted));
  }
  for (auto& [labels, cut] : seen) out.cuts.push_back(std::move(cut));
  std::stable_sort(out.cuts.begin(), out.cuts.end(),
                   [](const KCut& a, const KCut& b) {
                     return a.value < b.value;
                   });
  return out;
}

}  // namespace kcut
