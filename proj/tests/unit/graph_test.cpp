#include <gtest/gtest.h>

#include "kcut/error.hpp"
#include "kcut/generators.hpp"
#include "kcut/graph.hpp"
#include "test_util.hpp"

namespace kcut {
namespace {

using testing::complete_graph;
using testing::make_graph;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kInvariant;
}

TEST(ParseGraph, Path) {
  Graph g = parse_graph("3 2\n0 1\n1 2");
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.total_weight(), 2);
  EXPECT_TRUE(g.is_simple());
}

TEST(ParseGraph, ParallelEdgesMerge) {
  Graph g = parse_graph("2 2\n0 1\n0 1");
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.weight_between(0, 1), 2);
  EXPECT_FALSE(g.is_simple());
}

TEST(ParseGraph, SelfLoopNamesLine) {
  try {
    parse_graph("2 1\n0 0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("self-loop at line 2"),
              std::string::npos);
  }
}

TEST(ParseGraph, CommentsAndBlankLines) {
  Graph g = parse_graph("# header\n3 1\n\n# edge\n0 2\n");
  EXPECT_EQ(g.weight_between(0, 2), 1);
}

TEST(ParseGraph, Malformed) {
  EXPECT_EQ(kind_of([] { parse_graph("3 1\n0 5"); }), ErrorKind::kParse);
  EXPECT_EQ(kind_of([] { parse_graph("3 2\n0 1"); }), ErrorKind::kParse);
  EXPECT_EQ(kind_of([] { parse_graph("x"); }), ErrorKind::kParse);
  EXPECT_EQ(kind_of([] { read_graph_file("/nonexistent/g.txt"); }),
            ErrorKind::kIo);
}

TEST(ParseGraph, RoundTrip) {
  Graph g = gnp_graph(9, 0.5, 3);
  EXPECT_EQ(parse_graph(format_graph(g)), g);
}

TEST(CutValue, Examples) {
  Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(cut_value(p3, make_kcut(p3, {0, 1, 1}, 2)), 1);
  Graph k4 = complete_graph(4);
  EXPECT_EQ(cut_value(k4, make_kcut(k4, {0, 1, 1, 1}, 2)), 3);
  Graph c6 = cycle_graph(6);
  KCut cut = make_kcut(c6, {0, 0, 1, 1, 2, 2}, 3);
  EXPECT_EQ(cut_value(c6, cut), 3);
  EXPECT_EQ(cut.value, testing::crossing(c6, {0, 0, 1, 1, 2, 2}));
}

TEST(CutValue, RejectsEmptyPart) {
  Graph c6 = cycle_graph(6);
  EXPECT_EQ(kind_of([&] { make_kcut(c6, {0, 0, 0, 1, 1, 1}, 3); }),
            ErrorKind::kInvalidArgument);
}

TEST(KCut, CanonicalComponents) {
  Graph c6 = cycle_graph(6);
  KCut cut = make_kcut(c6, {2, 2, 0, 0, 1, 1}, 3);
  EXPECT_EQ(cut.labels, (std::vector<int>{0, 0, 1, 1, 2, 2}));
  EXPECT_EQ(cut.components(),
            (std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}, {4, 5}}));
}

TEST(Contract, IdentityPartition) {
  Graph g = gnp_graph(7, 0.6, 11);
  VertexPartition p;
  for (Vertex v = 0; v < 7; ++v) p.blocks.push_back({v});
  EXPECT_EQ(contract(g, p).graph, g);
}

TEST(Contract, CycleHalves) {
  Graph c4 = cycle_graph(4);
  Contraction c = contract(c4, VertexPartition{{{0, 1}, {2, 3}}});
  EXPECT_EQ(c.graph.num_vertices(), 2);
  EXPECT_EQ(c.graph.weight_between(0, 1), 2);
  EXPECT_EQ(c.graph.num_edges(), 1u);
}

TEST(Contract, CliqueBlocks) {
  Graph k4 = complete_graph(4);
  Contraction c = contract(k4, VertexPartition{{{0, 1}, {2}, {3}}});
  EXPECT_EQ(c.graph.weight_between(0, 1), 2);
  EXPECT_EQ(c.graph.weight_between(0, 2), 2);
  EXPECT_EQ(c.graph.weight_between(1, 2), 1);
  EXPECT_EQ(c.map.super_vertex, (std::vector<Vertex>{0, 0, 1, 2}));
}

TEST(Contract, LiftPreservesValue) {
  Graph g = gnp_graph(10, 0.5, 5);
  VertexPartition p{{{0, 3}, {1}, {2, 4, 5}, {6, 7, 8, 9}}};
  Contraction c = contract(g, p);
  KCut small = make_kcut(c.graph, {0, 1, 1, 2}, 3);
  KCut lifted = lift_cut(g, c.map, small);
  EXPECT_EQ(lifted.value, small.value);
  EXPECT_EQ(cut_value(g, lifted), small.value);
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(cycle_graph(5)).size(), 1u);
  Graph two = make_graph(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(connected_components(two).size(), 2u);
  Graph empty = make_graph(3, {});
  EXPECT_EQ(connected_components(empty).size(), 3u);
  Graph mixed = make_graph(5, {{3, 1}, {0, 4}});
  EXPECT_EQ(connected_components(mixed).blocks,
            (std::vector<std::vector<Vertex>>{{0, 4}, {1, 3}, {2}}));
}

TEST(Induced, Relabels) {
  Graph g = complete_graph(5);
  std::vector<Vertex> keep{4, 1, 2};
  InducedSubgraph sub = induced_subgraph(g, keep);
  EXPECT_EQ(sub.graph.num_vertices(), 3);
  EXPECT_EQ(sub.graph.num_edges(), 3u);
  EXPECT_EQ(sub.original_id, keep);
}

TEST(Conductance, Examples) {
  Graph k4 = complete_graph(4);
  std::vector<Vertex> s0{0};
  Conductance c = conductance(k4, s0);
  EXPECT_EQ(c.boundary, 3);
  EXPECT_EQ(c.volume, 3);
  EXPECT_DOUBLE_EQ(c.to_double(), 1.0);

  Graph c6 = cycle_graph(6);
  std::vector<Vertex> arc{0, 1, 2};
  EXPECT_EQ(conductance(c6, arc), (Conductance{2, 6}));

  Graph k5s = cliques_bridge_graph(5, 2, 1);
  std::vector<Vertex> left{0, 1, 2, 3, 4};
  Conductance b = conductance(k5s, left);
  EXPECT_EQ(b.boundary, 1);
  EXPECT_EQ(b.volume, 21);
  EXPECT_TRUE(conductance_below(b, 3, 10));
  EXPECT_FALSE(conductance_below(b, 1, 21));
}

TEST(Conductance, Domain) {
  Graph k4 = complete_graph(4);
  std::vector<Vertex> all{0, 1, 2, 3};
  std::vector<Vertex> none;
  EXPECT_EQ(kind_of([&] { conductance(k4, all); }), ErrorKind::kDomain);
  EXPECT_EQ(kind_of([&] { conductance(k4, none); }), ErrorKind::kDomain);
}

TEST(Generators, Deterministic) {
  EXPECT_EQ(gnp_graph(12, 0.4, 9), gnp_graph(12, 0.4, 9));
  EXPECT_EQ(cycle_graph(6).num_edges(), 6u);
  Graph k5s = cliques_bridge_graph(5, 2, 1);
  EXPECT_EQ(k5s.num_edges(), 21u);
  EXPECT_EQ(k5s.weight_between(0, 5), 1);
  PlantedInstance a = planted_graph(3, 8, 0.9, 0.02, 1, 1);
  PlantedInstance b = planted_graph(3, 8, 0.9, 0.02, 1, 1);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.islands, (std::vector<Vertex>{24}));
  EXPECT_EQ(a.cluster_of[24], -1);
  EXPECT_EQ(a.graph.degree(24), 2);
}

TEST(Generators, InvalidParams) {
  EXPECT_EQ(kind_of([] { gnp_graph(5, 1.5, 0); }),
            ErrorKind::kInvalidArgument);
  EXPECT_EQ(kind_of([] { cycle_graph(2); }), ErrorKind::kInvalidArgument);
  GenParams params;
  params.kind = "mystery";
  EXPECT_EQ(kind_of([&] { gen_instance(params, 0); }),
            ErrorKind::kInvalidArgument);
}

}  // namespace
}  // namespace kcut
