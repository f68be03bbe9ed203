#ifndef KCUT_GRAPH_HPP
#define KCUT_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kcut {

using Vertex = std::int32_t;
using Weight = std::int64_t;

struct Edge {
  Vertex u;
  Vertex v;
  Weight w = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex v;
  Weight w;
};

/// Undirected graph with integer edge weights on vertices 0..n-1.
///
/// Parallel pairs are stored merged as one weighted entry, so a multigraph is
/// just a graph with some weight >= 2. Edges are kept sorted by (u, v) with
/// u < v, and adjacency lists are sorted by neighbor id; all iteration is in
/// that order. Instances are immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph, merging repeated pairs by weight summation. Throws
  /// kInvalidArgument on self-loops, non-positive weights or out-of-range
  /// endpoints, and kInvariant on weight overflow.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int num_vertices() const { return n_; }
  /// Number of distinct vertex pairs carrying weight.
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  /// Sum of all edge weights (m for a simple graph).
  Weight total_weight() const { return total_weight_; }
  /// True iff every stored weight is 1.
  bool is_simple() const { return simple_; }

  Weight degree(Vertex v) const { return degree_[v]; }
  std::span<const Neighbor> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  /// Weight between u and v, 0 when not adjacent.
  Weight weight_between(Vertex u, Vertex v) const;
  /// Minimum weighted degree; 0 for the empty graph.
  Weight min_degree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::vector<Weight> degree_;
  Weight total_weight_ = 0;
  bool simple_ = true;
};

/// Parses the edge-list dialect: header "n m", then m lines "u v [w]".
/// Blank lines and lines starting with '#' are ignored. Errors name the
/// offending 1-based line number.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
/// Writes the edge-list dialect; weights are omitted when 1.
std::string format_graph(const Graph& g);

/// Assignment of every vertex to one of k labeled, nonempty parts.
struct KCut {
  int k = 0;
  std::vector<int> labels;
  Weight value = 0;

  /// Parts as sorted vertex lists, ordered by smallest member.
  std::vector<std::vector<Vertex>> components() const;
};

/// Validates `labels` (every part 0..k-1 used) and computes the cut value.
/// The labels are stored in canonical form.
KCut make_kcut(const class Graph& g, std::vector<int> labels, int k);

/// Total weight of edges whose endpoints carry different labels. Throws
/// kInvalidArgument when a part is empty or the labels do not fit g.
Weight cut_value(const Graph& g, const KCut& cut);

/// Relabels parts in order of first occurrence (restricted growth string),
/// so two labelings of the same unlabeled partition compare equal.
std::vector<int> canonical_labels(std::span<const int> labels);

/// Disjoint nonempty vertex blocks covering 0..n-1.
struct VertexPartition {
  std::vector<std::vector<Vertex>> blocks;

  std::size_t size() const { return blocks.size(); }
  /// Throws kInvalidArgument unless the blocks partition 0..n-1.
  void validate(int n) const;
  /// Per-vertex block index.
  std::vector<int> block_of(int n) const;
  /// Sorts each block and orders blocks by smallest member.
  void normalize();
};

/// Original vertex -> super-vertex id in a contracted graph.
struct ContractionMap {
  std::vector<Vertex> super_vertex;
  int num_super = 0;
};

struct Contraction {
  Graph graph;
  ContractionMap map;
};

/// Contracts each block into one super-vertex (block i becomes vertex i),
/// summing parallel weights and dropping intra-block edges.
Contraction contract(const Graph& g, const VertexPartition& p);

/// Pulls a cut of a contracted graph back to the original vertices.
KCut lift_cut(const Graph& original, const ContractionMap& map,
              const KCut& contracted_cut);

/// Components ordered by smallest member, each block sorted.
VertexPartition connected_components(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// original_id[i] is the vertex of the parent graph that became i.
  std::vector<Vertex> original_id;
};

/// Subgraph induced by `vertices`; local ids follow the order given.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// |boundary(S)| / min(vol(S), vol(V \ S)), kept as an exact fraction.
struct Conductance {
  Weight boundary = 0;
  Weight volume = 0;

  /// A side of zero volume has no finite conductance.
  bool infinite() const { return volume == 0; }
  double to_double() const;

  friend std::strong_ordering operator<=>(const Conductance& a,
                                          const Conductance& b);
  friend bool operator==(const Conductance& a, const Conductance& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

/// Throws kDomain when S is empty, covers V, or g has no edges.
Conductance conductance(const Graph& g, std::span<const Vertex> s);

/// Conductance of S against a rational threshold num/den.
bool conductance_below(const Conductance& c, Weight num, Weight den);

}  // namespace kcut

#endif  // KCUT_GRAPH_HPP
