#include "kcut/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "kcut/error.hpp"

namespace kcut {
namespace {

constexpr Weight kInfinity = std::numeric_limits<Weight>::max();

void check_k(const Graph& g, int k) {
  require(k >= 2, ErrorKind::kDomain, "k must be at least 2");
  require(k <= g.num_vertices(), ErrorKind::kDomain,
          "k exceeds the number of vertices");
}

// Edges to lower-numbered vertices, per vertex.
std::vector<std::vector<Neighbor>> back_neighbors(const Graph& g) {
  std::vector<std::vector<Neighbor>> back(g.num_vertices());
  for (const Edge& e : g.edges()) back[e.v].push_back({e.u, e.w});
  return back;
}

class PartitionEnumerator {
 public:
  PartitionEnumerator(const Graph& g, int k)
      : n_(g.num_vertices()), k_(k), back_(back_neighbors(g)), labels_(n_) {}

  KCut run(const Graph& g) {
    recurse(0, 0, 0);
    return make_kcut(g, best_labels_, k_);
  }

 private:
  void recurse(int v, int used, Weight cost) {
    if (cost >= best_) return;
    if (v == n_) {
      if (used == k_) {
        best_ = cost;
        best_labels_ = labels_;
      }
      return;
    }
    const int remaining = n_ - v - 1;
    const int max_label = std::min(used, k_ - 1);
    for (int l = 0; l <= max_label; ++l) {
      const int used_after = l == used ? used + 1 : used;
      if (remaining < k_ - used_after) continue;
      Weight add = 0;
      for (const Neighbor& nb : back_[v]) {
        if (labels_[nb.v] != l) add += nb.w;
      }
      labels_[v] = l;
      recurse(v + 1, used_after, cost + add);
    }
  }

  int n_;
  int k_;
  std::vector<std::vector<Neighbor>> back_;
  std::vector<int> labels_;
  std::vector<int> best_labels_;
  Weight best_ = kInfinity;
};

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, int k, Weight incumbent)
      : g_(g), n_(g.num_vertices()), k_(k), best_(incumbent) {
    order_ = max_adjacency_order();
    label_.assign(n_, -1);
    to_label_.assign(static_cast<std::size_t>(n_) * k_, 0);
    to_assigned_.assign(n_, 0);
  }

  // Returns true when a cut strictly better than the incumbent was found.
  bool run() {
    recurse(0, 0, 0);
    return found_;
  }

  const std::vector<int>& best_labels() const { return best_labels_; }

 private:
  std::vector<Vertex> max_adjacency_order() const {
    std::vector<Vertex> order;
    std::vector<Weight> attach(n_, 0);
    std::vector<char> placed(n_, 0);
    for (int step = 0; step < n_; ++step) {
      Vertex pick = -1;
      for (Vertex v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        if (pick < 0 || attach[v] > attach[pick]) pick = v;
      }
      placed[pick] = 1;
      order.push_back(pick);
      for (const Neighbor& nb : g_.neighbors(pick)) attach[nb.v] += nb.w;
    }
    return order;
  }

  Weight remaining_lower_bound(int pos) const {
    Weight bound = 0;
    for (int i = pos; i < n_; ++i) {
      const Vertex v = order_[i];
      const Weight* row = &to_label_[static_cast<std::size_t>(v) * k_];
      bound += to_assigned_[v] - *std::max_element(row, row + k_);
    }
    return bound;
  }

  void assign(Vertex v, int l, int sign) {
    for (const Neighbor& nb : g_.neighbors(v)) {
      if (label_[nb.v] >= 0) continue;
      to_label_[static_cast<std::size_t>(nb.v) * k_ + l] += sign * nb.w;
      to_assigned_[nb.v] += sign * nb.w;
    }
  }

  void recurse(int pos, int used, Weight cost) {
    if (pos == n_) {
      if (used == k_ && cost < best_) {
        best_ = cost;
        best_labels_ = label_;
        found_ = true;
      }
      return;
    }
    if (cost + remaining_lower_bound(pos) >= best_) return;
    const Vertex v = order_[pos];
    const int remaining = n_ - pos - 1;
    const int max_label = std::min(used, k_ - 1);
    for (int l = 0; l <= max_label; ++l) {
      const int used_after = l == used ? used + 1 : used;
      if (remaining < k_ - used_after) continue;
      const Weight add =
          to_assigned_[v] - to_label_[static_cast<std::size_t>(v) * k_ + l];
      if (cost + add >= best_) continue;
      label_[v] = l;
      assign(v, l, +1);
      recurse(pos + 1, used_after, cost + add);
      assign(v, l, -1);
      label_[v] = -1;
    }
  }

  const Graph& g_;
  int n_;
  int k_;
  Weight best_;
  bool found_ = false;
  std::vector<Vertex> order_;
  std::vector<int> label_;
  std::vector<Weight> to_label_;
  std::vector<Weight> to_assigned_;
  std::vector<int> best_labels_;
};

}  // namespace

KCut brute_force_min_kcut(const Graph& g, int k, int n_limit) {
  check_k(g, k);
  require(g.num_vertices() <= n_limit, ErrorKind::kSizeLimit,
          "graph has " + std::to_string(g.num_vertices()) +
              " vertices; brute-force oracle limit is " +
              std::to_string(n_limit));
  return PartitionEnumerator(g, k).run(g);
}

KCut branch_and_bound_min_kcut(const Graph& g, int k,
                               std::optional<KCut> incumbent) {
  check_k(g, k);
  if (!incumbent) incumbent = sv_2approx(g, k);
  BranchAndBound search(g, k, incumbent->value);
  if (!search.run()) return *incumbent;
  return make_kcut(g, search.best_labels(), k);
}

std::optional<KCut> component_kcut(const Graph& g, int k) {
  VertexPartition comps = connected_components(g);
  if (static_cast<int>(comps.size()) < k) return std::nullopt;
  std::vector<int> labels(g.num_vertices(), k - 1);
  for (int c = 0; c + 1 < k; ++c) {
    for (Vertex v : comps.blocks[c]) labels[v] = c;
  }
  return make_kcut(g, std::move(labels), k);
}

KCut exact_min_kcut(const Graph& g, int k, int n_limit,
                    std::optional<KCut> incumbent) {
  check_k(g, k);
  if (auto zero = component_kcut(g, k)) return *zero;
  if (g.num_vertices() <= n_limit) return brute_force_min_kcut(g, k, n_limit);
  return branch_and_bound_min_kcut(g, k, std::move(incumbent));
}

Weight island_cut_value(const Graph& g, std::span<const Vertex> islands) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : islands) in[v] = 1;
  Weight total = 0;
  for (const Edge& e : g.edges()) {
    if (in[e.u] || in[e.v]) total += e.w;
  }
  return total;
}

IslandSolution brute_force_r_island(const Graph& g, int r, int n_limit) {
  const int n = g.num_vertices();
  require(r >= 1 && r <= n - 1, ErrorKind::kDomain,
          "island count must lie in [1, n-1]");
  require(n <= n_limit, ErrorKind::kSizeLimit,
          "graph exceeds the island oracle limit");
  std::vector<Vertex> subset(r);
  std::iota(subset.begin(), subset.end(), 0);
  IslandSolution best{kInfinity, {}};
  while (true) {
    const Weight value = island_cut_value(g, subset);
    if (value < best.value) best = {value, subset};
    // Next combination in lexicographic order.
    int i = r - 1;
    while (i >= 0 && subset[i] == n - r + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < r; ++j) subset[j] = subset[j - 1] + 1;
  }
  return best;
}

KCut stoer_wagner_mincut(const Graph& g) {
  const int n = g.num_vertices();
  require(n >= 2, ErrorKind::kDomain, "minimum cut needs at least 2 vertices");
  if (auto zero = component_kcut(g, 2)) return *zero;

  std::vector<std::vector<Weight>> w(n, std::vector<Weight>(n, 0));
  for (const Edge& e : g.edges()) {
    w[e.u][e.v] = e.w;
    w[e.v][e.u] = e.w;
  }
  std::vector<std::vector<Vertex>> members(n);
  for (Vertex v = 0; v < n; ++v) members[v] = {v};
  std::vector<Vertex> active(n);
  std::iota(active.begin(), active.end(), 0);

  Weight best = kInfinity;
  std::vector<Vertex> best_side;
  std::vector<Weight> attach(n);
  std::vector<char> added(n);
  while (active.size() > 1) {
    for (Vertex v : active) {
      attach[v] = 0;
      added[v] = 0;
    }
    Vertex prev = -1;
    Vertex last = -1;
    for (std::size_t step = 0; step < active.size(); ++step) {
      Vertex pick = -1;
      for (Vertex v : active) {
        if (!added[v] && (pick < 0 || attach[v] > attach[pick])) pick = v;
      }
      if (pick < 0) break;
      added[pick] = 1;
      prev = last;
      last = pick;
      for (Vertex v : active) {
        if (!added[v]) attach[v] += w[pick][v];
      }
    }
    if (attach[last] < best) {
      best = attach[last];
      best_side = members[last];
    }
    members[prev].insert(members[prev].end(), members[last].begin(),
                         members[last].end());
    for (Vertex v : active) {
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    w[prev][prev] = 0;
    active.erase(std::find(active.begin(), active.end(), last));
  }

  std::vector<int> labels(n, 0);
  for (Vertex v : best_side) labels[v] = 1;
  return make_kcut(g, std::move(labels), 2);
}

KCut sv_2approx(const Graph& g, int k) {
  check_k(g, k);
  struct Split {
    Weight value = kInfinity;
    std::vector<Vertex> side;  // Vertices (original ids) split off.
  };
  std::vector<std::vector<Vertex>> parts(1);
  parts[0].resize(g.num_vertices());
  std::iota(parts[0].begin(), parts[0].end(), 0);
  std::vector<std::optional<Split>> cache(1);

  while (static_cast<int>(parts.size()) < k) {
    std::size_t chosen = parts.size();
    for (std::size_t p = 0; p < parts.size(); ++p) {
      if (parts[p].size() < 2) continue;
      if (!cache[p]) {
        InducedSubgraph sub = induced_subgraph(g, parts[p]);
        KCut cut = stoer_wagner_mincut(sub.graph);
        Split split{cut.value, {}};
        for (std::size_t i = 0; i < cut.labels.size(); ++i) {
          if (cut.labels[i] == 1) split.side.push_back(sub.original_id[i]);
        }
        cache[p] = std::move(split);
      }
      if (chosen == parts.size() || cache[p]->value < cache[chosen]->value) {
        chosen = p;
      }
    }
    require(chosen < parts.size(), ErrorKind::kInvariant,
            "no part left to split");
    std::vector<Vertex> side = std::move(cache[chosen]->side);
    std::vector<char> moved(g.num_vertices(), 0);
    for (Vertex v : side) moved[v] = 1;
    std::vector<Vertex> rest;
    for (Vertex v : parts[chosen]) {
      if (!moved[v]) rest.push_back(v);
    }
    parts[chosen] = std::move(rest);
    cache[chosen].reset();
    parts.push_back(std::move(side));
    cache.emplace_back();
  }

  std::vector<int> labels(g.num_vertices());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (Vertex v : parts[p]) labels[v] = static_cast<int>(p);
  }
  return make_kcut(g, std::move(labels), k);
}

}  // namespace kcut
