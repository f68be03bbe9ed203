#include <gtest/gtest.h>

#include "kcut/generators.hpp"
#include "kcut/json.hpp"
#include "kcut/oracle.hpp"
#include "kcut/pipeline.hpp"
#include "test_util.hpp"

namespace kcut {
namespace {

TEST(Branch, Parse) {
  EXPECT_EQ(parse_branch("exact"), Branch::kExact);
  EXPECT_EQ(parse_branch("sparsify"), Branch::kSparsify);
  EXPECT_FALSE(parse_branch("other").has_value());
  EXPECT_EQ(to_string(Branch::kSparsify), "sparsify");
}

TEST(MinKCut, Disconnected) {
  Graph g = testing::make_graph(6, {{0, 1}, {2, 3}, {4, 5}});
  SolveReport r = min_kcut(g, 3);
  EXPECT_EQ(r.value, 0);
  EXPECT_EQ(r.method, "components");
}

TEST(MinKCut, CycleExactBranch) {
  for (std::uint64_t seed : {0u, 7u, 99u}) {
    PipelineConfig cfg;
    cfg.seed = seed;
    SolveReport r = min_kcut(cycle_graph(6), 3, cfg);
    EXPECT_EQ(r.value, 3);
    EXPECT_EQ(r.branch, Branch::kExact);
  }
}

TEST(MinKCut, ForcedSparsify) {
  PipelineConfig cfg;
  cfg.force_branch = Branch::kSparsify;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Graph g = gnp_graph(8 + seed % 4, 0.5, seed);
    for (int k = 2; k <= 3; ++k) {
      cfg.seed = seed;
      SolveReport r = min_kcut(g, k, cfg);
      EXPECT_EQ(r.value, brute_force_min_kcut(g, k).value);
      EXPECT_EQ(cut_value(g, r.cut), r.value);
      if (r.method != "components") {
        ASSERT_TRUE(r.partition.has_value());
        EXPECT_TRUE(r.partition->checks.all());
      }
    }
  }
}

TEST(MinKCut, PlantedIsland) {
  // Three K8 clusters, five inter-cluster edges and one island of degree 2.
  std::vector<Edge> edges;
  for (int c = 0; c < 3; ++c)
    for (Vertex u = 0; u < 8; ++u)
      for (Vertex v = u + 1; v < 8; ++v)
        edges.push_back({c * 8 + u, c * 8 + v, 1});
  for (Edge e : std::vector<Edge>{{0, 8}, {1, 9}, {10, 16}, {2, 17}, {3, 18}})
    edges.push_back(e);
  edges.push_back({24, 4});
  edges.push_back({24, 5});
  Graph g = Graph::from_edges(25, edges);
  PipelineConfig cfg;
  cfg.seed = 42;
  SolveReport r = min_kcut(g, 4, cfg);
  EXPECT_EQ(r.value, branch_and_bound_min_kcut(g, 4).value);
  cfg.force_branch = Branch::kSparsify;
  SolveReport s = min_kcut(g, 4, cfg);
  EXPECT_EQ(s.value, r.value);
}

TEST(MinKCut, Deterministic) {
  Graph g = gnp_graph(11, 0.5, 3);
  PipelineConfig cfg;
  cfg.seed = 5;
  cfg.force_branch = Branch::kSparsify;
  nlohmann::json a = to_json(min_kcut(g, 3, cfg));
  nlohmann::json b = to_json(min_kcut(g, 3, cfg));
  a["stats"].erase("stage_ms");
  b["stats"].erase("stage_ms");
  EXPECT_EQ(a, b);
}

TEST(MinKCut, ReportSchema) {
  SolveReport r = min_kcut(cycle_graph(6), 3);
  nlohmann::json j = to_json(r);
  for (const char* key :
       {"k", "value", "components", "method", "branch", "seed", "stats"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["components"].size(), 3u);
  EXPECT_EQ(j["components"][0][0], 0);
}

}  // namespace
}  // namespace kcut
