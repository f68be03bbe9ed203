// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every expected value comes from an exhaustive or exact
// oracle run on the same instance.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kcut/bench.hpp"
#include "kcut/border_finder.hpp"
#include "kcut/generators.hpp"
#include "kcut/island.hpp"
#include "kcut/kt_partition.hpp"
#include "kcut/matrix.hpp"
#include "kcut/oracle.hpp"
#include "kcut/pipeline.hpp"
#include "kcut/sparsifier.hpp"

using namespace kcut;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Weight crossing(const Graph& g, const std::vector<int>& labels) {
  Weight total = 0;
  for (const Edge& e : g.edges())
    if (labels[e.u] != labels[e.v]) total += e.w;
  return total;
}

std::set<std::pair<Vertex, Vertex>> crossing_set(
    const Graph& g, const std::vector<int>& labels) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges())
    if (labels[e.u] != labels[e.v]) out.insert({e.u, e.v});
  return out;
}

// Every surjective labeling V -> {0..k-1} by base-k counting.
void for_each_labeling(int n, int k,
                       const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> labels(n, 0);
  while (true) {
    std::vector<char> used(k, 0);
    int distinct = 0;
    for (int l : labels)
      if (!used[l]) used[l] = 1, ++distinct;
    if (distinct == k) f(labels);
    int i = 0;
    while (i < n && ++labels[i] == k) labels[i++] = 0;
    if (i == n) return;
  }
}

double binom2(int n) { return n * (n - 1) / 2.0; }

// Upper end of the 95% Wilson score interval.
double wilson_upper(int successes, int trials) {
  const double z = 1.96;
  const double p = static_cast<double>(successes) / trials;
  const double denom = 1 + z * z / trials;
  const double centre = p + z * z / (2.0 * trials);
  const double spread =
      z * std::sqrt(p * (1 - p) / trials + z * z / (4.0 * trials * trials));
  return (centre + spread) / denom;
}

// 1. Pipeline vs brute force on 200 seeded G(n, p) instances.
Outcome oracle_equivalence() {
  const double densities[] = {0.3, 0.5, 0.8};
  int sparsify_ok = 0, exact_ok = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 6 + i % 7;
    const double p = densities[(i / 7) % 3];
    const int k = 2 + (i / 21) % 3;
    Graph g = gnp_graph(n, p, 5000 + i);
    const Weight want = brute_force_min_kcut(g, k).value;

    PipelineConfig cfg;
    cfg.seed = i;
    cfg.trial_cap = 100000;
    cfg.force_branch = Branch::kSparsify;
    SolveReport s = min_kcut(g, k, cfg);
    sparsify_ok += s.value == want && cut_value(g, s.cut) == want;

    cfg.force_branch = Branch::kExact;
    SolveReport e = min_kcut(g, k, cfg);
    exact_ok += e.value == want && cut_value(g, e.cut) == want;
  }
  return {sparsify_ok >= 198 && exact_ok == 200,
          "sparsify " + std::to_string(sparsify_ok) + "/200 (need 198), exact " +
              std::to_string(exact_ok) + "/200"};
}

// 2. Sparsifier keeps every small k-cut's crossing set.
Outcome ni_preservation() {
  int graphs_ok = 0;
  long long cuts_checked = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 5 + i % 6;
    const double p = 0.3 + 0.1 * (i % 6);
    Graph g = gnp_graph(n, p, 7000 + i);
    bool ok = true;
    for (int s : {2, 3}) {
      Graph h = ni_sparsify(g, s);
      ok = ok && static_cast<int>(h.num_edges()) <= s * n;
      for (const Edge& e : h.edges())
        ok = ok && g.weight_between(e.u, e.v) == 1;
      for (int k : {2, 3}) {
        for_each_labeling(n, k, [&](const std::vector<int>& labels) {
          if (crossing(g, labels) > s) return;
          ++cuts_checked;
          ok = ok && crossing_set(g, labels) == crossing_set(h, labels);
        });
      }
    }
    graphs_ok += ok;
  }
  return {graphs_ok == 100, std::to_string(graphs_ok) + "/100 graphs, " +
                                std::to_string(cuts_checked) +
                                " small cuts compared"};
}

// 3. A fixed minimum 2-cut survives contraction to tau vertices at least as
// often as C(tau,2)/C(n,2).
Outcome contraction_survival() {
  struct Case {
    std::string name;
    Graph graph;
    int split;  // vertices below `split` form one side of the fixed cut
  };
  std::vector<Case> cases{{"C16", cycle_graph(16), 8},
                          {"two K5 + bridge", cliques_bridge_graph(5, 2, 1), 5}};
  const int trials = 10000;
  Outcome out;
  for (const Case& c : cases) {
    const int n = c.graph.num_vertices();
    for (int tau : {2, 4}) {
      int survived = 0;
      for (int t = 0; t < trials; ++t) {
        Rng rng(90000 + t);
        Contraction con = contract_random(c.graph, tau, rng);
        const auto& sv = con.map.super_vertex;
        bool keeps = true;
        for (Edge e : c.graph.edges()) {
          const bool crosses = (e.u < c.split) != (e.v < c.split);
          if (crosses && sv[e.u] == sv[e.v]) keeps = false;
        }
        survived += keeps;
      }
      const double bound = binom2(tau) / binom2(n);
      const double upper = wilson_upper(survived, trials);
      const bool ok = upper >= bound;
      out.pass = out.pass && ok;
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s%s tau=%d %.4f (bound %.4f)",
                    out.detail.empty() ? "" : "; ", c.name.c_str(), tau,
                    static_cast<double>(survived) / trials, bound);
      out.detail += buf;
    }
  }
  return out;
}

// 4. Island solver matches exhaustive search for r = 1..5.
Outcome island_equivalence() {
  int ok = 0, total = 0, matmul_runs = 0, strassen_runs = 0;
  for (int i = 0; i < 50; ++i) {
    const int n = 6 + i % 7;
    Graph g = gnp_graph(n, 0.25 + 0.1 * (i % 6), 11000 + i);
    for (int r = 1; r <= 5 && r < n; ++r) {
      IslandSearchStats stats;
      // Every tenth graph takes the Strassen product inside triangle search.
      MatmulOptions mm;
      if (i % 10 == 0) mm.strassen_threshold = 1;
      IslandSolution got = solve_r_island(g, r, &stats, mm);
      IslandSolution want = brute_force_r_island(g, r);
      ++total;
      ok += got.value == want.value && got.islands == want.islands;
      if (r == 3 && stats.triangle_searches > 0) {
        ++matmul_runs;
        strassen_runs += i % 10 == 0;
      }
    }
  }
  return {ok == total && matmul_runs == 50 && strassen_runs == 5,
          std::to_string(ok) + "/" + std::to_string(total) +
              " match; r=3 triangle search ran on " +
              std::to_string(matmul_runs) + "/50 graphs (" +
              std::to_string(strassen_runs) + " via Strassen)"};
}

// 5. Some border of the oracle's minimum k-cut agrees with the partition
// and is small enough; the partition is small enough too.
Outcome kt_property() {
  int ok = 0, with_islands = 0, nontrivial_q = 0;
  std::string worst;
  for (int i = 0; i < 20; ++i) {
    const int k = 2 + i % 2;
    const int size = k == 2 ? 12 + (i / 2) % 7 : 8 + (i / 2) % 5;
    const int islands = 1 + (i / 4) % 2;
    PlantedInstance inst =
        planted_graph(k, size, 0.85, 0.02, islands, 13000 + i);
    const Graph& g = inst.graph;
    const int n = g.num_vertices();
    const KCut min_cut = branch_and_bound_min_kcut(g, k);
    const Weight lambda_k = min_cut.value;
    const Weight lambda_bar = sv_2approx(g, k).value;
    KTResult kt = kt_partition(g, k, lambda_bar);

    const double log_n = std::log2(n);
    const double q_bound = 64.0 * k * log_n * log_n * n / lambda_bar;
    bool good = kt.report.q <= q_bound;
    auto border = find_agreeing_border(g, min_cut, kt.partition);
    if (!border) {
      good = false;
    } else {
      const double limit = lambda_k - (1 - 2 / log_n) *
                                          static_cast<double>(border->islands.size()) *
                                          lambda_k / k;
      good = good && border->base_cut.value <= limit + 1e-9 &&
             agrees_with_partition(border->base_cut, kt.partition) &&
             crossing(g, border->base_cut.labels) == border->base_cut.value;
      with_islands += !border->islands.empty();
    }
    nontrivial_q += kt.report.q < n;
    ok += good;
    if (!good && worst.empty()) worst = " first failure: instance " + std::to_string(i);
  }
  return {ok == 20, std::to_string(ok) + "/20 planted instances (" +
                        std::to_string(with_islands) +
                        " borders with islands, " +
                        std::to_string(nontrivial_q) + " with q < n)" + worst};
}

// Independent brute-force gamma-expander check of a block.
bool is_expander(const Graph& g, const std::vector<Vertex>& block, Ratio gamma) {
  InducedSubgraph sub = induced_subgraph(g, block);
  const int b = sub.graph.num_vertices();
  if (b <= 1 || sub.graph.total_weight() == 0) return true;
  for (std::uint32_t mask = 1; mask + 1 < (1u << b); ++mask) {
    Weight boundary = 0, vol_in = 0, vol_out = 0;
    for (Vertex v = 0; v < b; ++v) {
      const bool in = mask >> v & 1;
      (in ? vol_in : vol_out) += sub.graph.degree(v);
      for (const Neighbor& nb : sub.graph.neighbors(v))
        if (in && !(mask >> nb.v & 1)) boundary += nb.w;
    }
    const Weight vol = std::min(vol_in, vol_out);
    if (vol > 0 && boundary * gamma.den < gamma.num * vol) return false;
  }
  return true;
}

// 6. Stage postconditions on the small and planted suites.
Outcome stage_postconditions() {
  int runs = 0, ok = 0, blocks = 0;
  for (const char* suite : {"small", "planted"}) {
    for (const BenchCase& c : bench_suite(suite, 7)) {
      if (component_kcut(c.graph, c.k)) continue;
      const Weight lambda_bar = sv_2approx(c.graph, c.k).value;
      KTResult kt = kt_partition(c.graph, c.k, lambda_bar);
      const Graph& h = kt.regularized.graph;
      bool good = kt.report.checks.all();
      const Ratio gamma = kt.report.params.gamma;
      for (const auto& block : kt.decomposition.partition.blocks) {
        if (static_cast<int>(block.size()) > kExactExpanderLimit) continue;
        ++blocks;
        good = good && is_expander(h, block, gamma);
      }
      const double m = static_cast<double>(h.total_weight());
      const double budget =
          m > 1 ? 10.0 * gamma.value() * m * std::log2(m) : 0.0;
      good = good && kt.decomposition.inter_block_weight <= budget + 1e-9;
      for (const auto& core : kt.state.cores)
        good = good && (core.empty() || static_cast<int>(core.size()) > c.k);

      PipelineConfig cfg;
      cfg.force_branch = Branch::kSparsify;
      SolveReport r = min_kcut(c.graph, c.k, cfg);
      good = good && (!r.partition || r.partition->checks.all());
      ++runs;
      ok += good;
    }
  }
  return {ok == runs, std::to_string(ok) + "/" + std::to_string(runs) +
                          " runs, " + std::to_string(blocks) +
                          " small blocks certified"};
}

// 7. Greedy splitting stays within 2(1 - 1/k) of optimal.
Outcome approximation() {
  int ok = 0, total = 0;
  for (const BenchCase& c : bench_suite("small", 7)) {
    for (int k = 2; k <= 4; ++k) {
      const Weight opt = brute_force_min_kcut(c.graph, k).value;
      KCut approx = sv_2approx(c.graph, k);
      ++total;
      ok += approx.value * k <= 2 * (k - 1) * opt &&
            crossing(c.graph, approx.labels) == approx.value;
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total)};
}

// 8. Strassen and the classical product agree entrywise.
Outcome matmul_equivalence() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> dim(1, 200);
  std::uniform_int_distribution<int> entry(-1000, 1000);
  int ok = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t r = dim(rng), m = dim(rng), c = dim(rng);
    IntMatrix a(r, m), b(m, c);
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < m; ++y) a(x, y) = entry(rng);
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < c; ++y) b(x, y) = entry(rng);
    MatmulOptions opts{16};
    ok += matmul(a, b, opts) == matmul_cubic(a, b);
  }
  return {ok == 100, std::to_string(ok) + "/100"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "end-to-end oracle equivalence", 600, oracle_equivalence},
      {2, "sparsifier cut preservation", 120, ni_preservation},
      {3, "contraction survival", 60, contraction_survival},
      {4, "island solver equivalence", 300, island_equivalence},
      {5, "partition border property", 300, kt_property},
      {6, "stage postconditions", 0, stage_postconditions},
      {7, "approximation guarantee", 0, approximation},
      {8, "matmul equivalence", 60, matmul_equivalence},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.pass = false;
      o.detail += " (over time limit)";
    }
    all = all && o.pass;
    std::printf("%s criterion %d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL",
                c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
