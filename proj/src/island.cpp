#include "kcut/island.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "kcut/error.hpp"

namespace kcut {
namespace {

constexpr Weight kInfinity = std::numeric_limits<Weight>::max();

std::vector<Vertex> bits_to_vertices(std::uint64_t mask) {
  std::vector<Vertex> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

IslandSolution solve_small(const Graph& g, int r) {
  const int n = g.num_vertices();
  IslandSolution best{kInfinity, {}};
  if (r == 1) {
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) < best.value) best = {g.degree(v), {v}};
    }
    return best;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const Weight value = g.degree(u) + g.degree(v) - g.weight_between(u, v);
      if (value < best.value) best = {value, {u, v}};
    }
  }
  return best;
}

struct Guess {
  ParameterGuess params;
  std::array<int, 3> classes{};
  Weight value = 0;
};

class TriangleSearch {
 public:
  TriangleSearch(const Graph& padded, int part_size,
                 const MatmulOptions& matmul_options)
      : g_(padded), matmul_options_(matmul_options) {
    const int n = padded.num_vertices();
    adj_.assign(n, 0);
    for (const Edge& e : padded.edges()) {
      adj_[e.u] |= std::uint64_t{1} << e.v;
      adj_[e.v] |= std::uint64_t{1} << e.u;
    }
    enumerate_subsets(n, part_size);
  }

  const std::vector<SubsetProfile>& subsets() const { return subsets_; }
  std::size_t num_classes() const { return classes_.size(); }

  Weight pairwise(std::uint64_t s, std::uint64_t t) const {
    Weight w = 0;
    for (Vertex u : bits_to_vertices(s)) w += std::popcount(adj_[u] & t);
    return w;
  }

  std::vector<Guess> feasible_guesses(int part_size) const {
    const Weight max_pair = static_cast<Weight>(part_size) * part_size;
    std::vector<Guess> out;
    const int c = static_cast<int>(classes_.size());
    for (int c1 = 0; c1 < c; ++c1) {
      for (int c2 = c1; c2 < c; ++c2) {
        for (int c3 = c2; c3 < c; ++c3) {
          // Same-class positions need distinct subsets.
          const std::size_t need1 = 1 + (c2 == c1) + (c3 == c1);
          if (classes_[c1].members.size() < need1) continue;
          if (c2 != c1 && c3 == c2 && classes_[c2].members.size() < 2) {
            continue;
          }
          const std::array<int, 3> ids{c1, c2, c3};
          ParameterGuess base;
          for (int i = 0; i < 3; ++i) {
            base.internal[i] = classes_[ids[i]].internal;
            base.outgoing[i] = classes_[ids[i]].outgoing;
          }
          for (Weight p12 = 0; p12 <= max_pair; ++p12) {
            for (Weight p23 = 0; p23 <= max_pair; ++p23) {
              for (Weight p31 = 0; p31 <= max_pair; ++p31) {
                if (p12 + p31 > base.outgoing[0] ||
                    p12 + p23 > base.outgoing[1] ||
                    p23 + p31 > base.outgoing[2]) {
                  continue;
                }
                Guess guess{base, ids, 0};
                guess.params.pairwise = {p12, p23, p31};
                guess.value = guess.params.implied_value();
                out.push_back(guess);
              }
            }
          }
        }
      }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Guess& a, const Guess& b) {
                       return a.value < b.value;
                     });
    return out;
  }

  // Triangle detection for one guess. Returns the lexicographically
  // smallest union S1 u S2 u S3 over all matching triangles, or 0.
  std::uint64_t detect(const Guess& guess) {
    const auto& f1 = classes_[guess.classes[0]].members;
    const auto& f2 = classes_[guess.classes[1]].members;
    const auto& f3 = classes_[guess.classes[2]].members;
    const IntMatrix a12 = adjacency(guess.classes[0], guess.classes[1],
                                    guess.params.pairwise[0]);
    const IntMatrix a23 = adjacency(guess.classes[1], guess.classes[2],
                                    guess.params.pairwise[1]);
    const IntMatrix a31 = adjacency(guess.classes[2], guess.classes[0],
                                    guess.params.pairwise[2]);
    const IntMatrix paths = matmul(a12, a23, matmul_options_);

    std::uint64_t best = 0;
    std::vector<Vertex> best_sorted;
    for (std::size_t i = 0; i < f1.size(); ++i) {
      for (std::size_t j = 0; j < f3.size(); ++j) {
        if (paths(i, j) == 0 || a31(j, i) == 0) continue;
        // Witness recovery through the middle class.
        for (std::size_t m = 0; m < f2.size(); ++m) {
          if (a12(i, m) == 0 || a23(m, j) == 0) continue;
          const std::uint64_t united = subsets_[f1[i]].subset |
                                       subsets_[f2[m]].subset |
                                       subsets_[f3[j]].subset;
          std::vector<Vertex> sorted = bits_to_vertices(united);
          if (best == 0 || sorted < best_sorted) {
            best = united;
            best_sorted = std::move(sorted);
          }
        }
      }
    }
    return best;
  }

 private:
  struct ProfileClass {
    Weight internal = 0;
    Weight outgoing = 0;
    std::vector<int> members;  // Indices into subsets_, ascending.
  };

  void enumerate_subsets(int n, int part_size) {
    std::vector<int> pick(part_size);
    std::iota(pick.begin(), pick.end(), 0);
    std::map<std::pair<Weight, Weight>, std::vector<int>> grouped;
    while (true) {
      std::uint64_t mask = 0;
      for (int v : pick) mask |= std::uint64_t{1} << v;
      SubsetProfile profile{mask, 0, 0};
      for (int v : pick) {
        profile.internal += std::popcount(adj_[v] & mask);
        profile.outgoing += std::popcount(adj_[v] & ~mask);
      }
      profile.internal /= 2;
      grouped[{profile.internal, profile.outgoing}].push_back(
          static_cast<int>(subsets_.size()));
      subsets_.push_back(profile);

      int i = part_size - 1;
      while (i >= 0 && pick[i] == n - part_size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < part_size; ++j) pick[j] = pick[j - 1] + 1;
    }
    for (auto& [key, members] : grouped) {
      classes_.push_back({key.first, key.second, std::move(members)});
    }
  }

  // Pairwise weights between two classes, -1 where the subsets overlap.
  const std::vector<Weight>& pair_weights(int ca, int cb) {
    auto [it, inserted] = pair_cache_.try_emplace({ca, cb});
    if (inserted) {
      const auto& fa = classes_[ca].members;
      const auto& fb = classes_[cb].members;
      it->second.resize(fa.size() * fb.size());
      for (std::size_t i = 0; i < fa.size(); ++i) {
        for (std::size_t j = 0; j < fb.size(); ++j) {
          const std::uint64_t s = subsets_[fa[i]].subset;
          const std::uint64_t t = subsets_[fb[j]].subset;
          it->second[i * fb.size() + j] = (s & t) ? -1 : pairwise(s, t);
        }
      }
    }
    return it->second;
  }

  IntMatrix adjacency(int ca, int cb, Weight target) {
    const std::vector<Weight>& w = pair_weights(ca, cb);
    const std::size_t rows = classes_[ca].members.size();
    const std::size_t cols = classes_[cb].members.size();
    IntMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        out(i, j) = w[i * cols + j] == target ? 1 : 0;
      }
    }
    return out;
  }

  const Graph& g_;
  MatmulOptions matmul_options_;
  std::vector<std::uint64_t> adj_;
  std::vector<SubsetProfile> subsets_;
  std::vector<ProfileClass> classes_;
  std::map<std::pair<int, int>, std::vector<Weight>> pair_cache_;
};

double binomial2(double t) { return t * (t - 1) / 2; }

}  // namespace

Weight ParameterGuess::implied_value() const {
  const auto& w = internal;
  const auto& out = outgoing;
  const Weight w12 = pairwise[0];
  const Weight w23 = pairwise[1];
  const Weight w31 = pairwise[2];
  return w[0] + w[1] + w[2] + w12 + w23 + w31 + (out[0] - w12 - w31) +
         (out[1] - w12 - w23) + (out[2] - w23 - w31);
}

IslandSolution solve_r_island(const Graph& g, int r, IslandSearchStats* stats,
                              const MatmulOptions& matmul_options) {
  const int n = g.num_vertices();
  require(g.is_simple(), ErrorKind::kInvalidArgument,
          "island discovery needs a simple graph");
  require(r >= 1 && r <= n - 1, ErrorKind::kDomain,
          "island count must lie in [1, n-1]");
  IslandSearchStats local;
  IslandSearchStats& st = stats ? *stats : local;
  st = {};
  st.padded_r = r;
  if (r <= 2) return solve_small(g, r);

  const int dummies = (3 - r % 3) % 3;
  const int padded_r = r + dummies;
  const int padded_n = n + dummies;
  const int part_size = padded_r / 3;
  require(padded_n <= 64, ErrorKind::kSizeLimit,
          "island discovery supports at most 64 vertices after padding");
  st.padded_r = padded_r;
  st.dummies = dummies;
  st.parameter_space_bound =
      std::pow(binomial2(part_size) + 1, 3) *
      std::pow(static_cast<double>(part_size) * padded_n + 1, 3) *
      std::pow(static_cast<double>(part_size) * part_size + 1, 3);

  // Dummy vertices n..padded_n-1 are isolated.
  const Graph padded = Graph::from_edges(
      padded_n, std::vector<Edge>(g.edges().begin(), g.edges().end()));
  TriangleSearch search(padded, part_size, matmul_options);
  st.subsets = static_cast<std::int64_t>(search.subsets().size());
  st.profile_classes = static_cast<std::int64_t>(search.num_classes());

  const std::vector<Guess> guesses = search.feasible_guesses(part_size);
  st.guesses = static_cast<std::int64_t>(guesses.size());
  require(static_cast<double>(st.guesses) <= st.parameter_space_bound,
          ErrorKind::kInvariant, "parameter enumeration exceeded its bound");

  Weight best_value = kInfinity;
  std::vector<Vertex> best_set;
  for (const Guess& guess : guesses) {
    if (guess.value > best_value) break;
    ++st.triangle_searches;
    const std::uint64_t found = search.detect(guess);
    if (found == 0) continue;
    std::vector<Vertex> islands = bits_to_vertices(found);
    require(island_cut_value(padded, islands) == guess.value,
            ErrorKind::kInvariant,
            "parameter guess value disagrees with the recomputed cut");
    if (guess.value < best_value || islands < best_set) {
      best_value = guess.value;
      best_set = std::move(islands);
    }
  }
  require(best_value != kInfinity, ErrorKind::kInvariant,
          "no island triangle found");

  // Real islands beyond r can be dropped: the value is monotone in the set,
  // and the optimum over r-subsets already equals best_value.
  std::vector<Vertex> real;
  for (Vertex v : best_set) {
    if (v < n) real.push_back(v);
  }
  real.resize(r);
  IslandSolution out{island_cut_value(g, real), std::move(real)};
  require(out.value == best_value, ErrorKind::kInvariant,
          "padding changed the island value");
  return out;
}

std::optional<KCut> extend_border(const Graph& g, const KCut& border_cut,
                                  int i, ExtendStats* stats) {
  require(i >= 0, ErrorKind::kInvalidArgument, "island count is negative");
  if (i == 0) return border_cut;

  const std::vector<std::vector<Vertex>> parts = border_cut.components();
  std::vector<int> hosts;
  int capacity = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].size() >= 2) {
      hosts.push_back(static_cast<int>(p));
      capacity += static_cast<int>(parts[p].size()) - 1;
    }
  }
  if (capacity < i) return std::nullopt;

  std::vector<InducedSubgraph> subgraphs;
  for (int p : hosts) subgraphs.push_back(induced_subgraph(g, parts[p]));
  // solutions[h][j]: best j-island solution inside host h.
  std::vector<std::vector<std::optional<IslandSolution>>> solutions(
      hosts.size());
  auto solution = [&](std::size_t h, int j) -> const IslandSolution& {
    auto& row = solutions[h];
    if (row.size() <= static_cast<std::size_t>(j)) row.resize(j + 1);
    if (!row[j]) {
      row[j] = solve_r_island(subgraphs[h].graph, j);
      if (stats) ++stats->island_solves;
    }
    return *row[j];
  };

  std::vector<int> split(hosts.size(), 0);
  std::vector<int> best_split;
  Weight best_value = kInfinity;
  // Depth-first over compositions of i, first host taking the most.
  auto recurse = [&](auto& self, std::size_t h, int left, Weight acc) -> void {
    if (h == hosts.size()) {
      if (left != 0) return;
      if (stats) ++stats->compositions;
      if (acc < best_value) {
        best_value = acc;
        best_split = split;
      }
      return;
    }
    const int cap = static_cast<int>(parts[hosts[h]].size()) - 1;
    for (int j = std::min(cap, left); j >= 0; --j) {
      split[h] = j;
      const Weight add = j == 0 ? 0 : solution(h, j).value;
      self(self, h + 1, left - j, acc + add);
    }
    split[h] = 0;
  };
  recurse(recurse, 0, i, 0);
  if (best_split.empty()) return std::nullopt;

  std::vector<int> labels = border_cut.labels;
  int next = border_cut.k;
  for (std::size_t h = 0; h < hosts.size(); ++h) {
    if (best_split[h] == 0) continue;
    for (Vertex local : solution(h, best_split[h]).islands) {
      labels[subgraphs[h].original_id[local]] = next++;
    }
  }
  KCut out = make_kcut(g, std::move(labels), next);
  require(out.value == border_cut.value + best_value, ErrorKind::kInvariant,
          "extended cut value drifted from border plus island values");
  return out;
}

}  // namespace kcut
