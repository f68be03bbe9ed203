#include "kcut/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "kcut/error.hpp"

namespace kcut {
namespace {

Weight checked_add(Weight a, Weight b) {
  Weight out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    fail(ErrorKind::kInvariant, "edge weight overflow");
  }
  return out;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                 line[pos] == '\r')) {
      ++pos;
    }
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
           line[end] != '\r') {
      ++end;
    }
    if (end > pos) fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

bool parse_int(std::string_view field, std::int64_t& out) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  fail(ErrorKind::kParse, what + " at line " + std::to_string(line_no));
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  require(n >= 0, ErrorKind::kInvalidArgument, "negative vertex count");
  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (const Edge& e : edges) {
    require(e.u >= 0 && e.u < n && e.v >= 0 && e.v < n,
            ErrorKind::kInvalidArgument, "edge endpoint out of range");
    require(e.u != e.v, ErrorKind::kInvalidArgument, "self-loop");
    require(e.w >= 1, ErrorKind::kInvalidArgument, "non-positive edge weight");
    sorted.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.w});
  }
  std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });

  Graph g;
  g.n_ = n;
  for (const Edge& e : sorted) {
    if (!g.edges_.empty() && g.edges_.back().u == e.u &&
        g.edges_.back().v == e.v) {
      g.edges_.back().w = checked_add(g.edges_.back().w, e.w);
    } else {
      g.edges_.push_back(e);
    }
  }

  g.degree_.assign(n, 0);
  std::vector<std::size_t> count(n, 0);
  for (const Edge& e : g.edges_) {
    g.total_weight_ = checked_add(g.total_weight_, e.w);
    g.degree_[e.u] = checked_add(g.degree_[e.u], e.w);
    g.degree_[e.v] = checked_add(g.degree_[e.v], e.w);
    ++count[e.u];
    ++count[e.v];
    if (e.w != 1) g.simple_ = false;
  }
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + count[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) g.adjacency_[fill[e.u]++] = {e.v, e.w};
  for (const Edge& e : g.edges_) g.adjacency_[fill[e.v]++] = {e.u, e.w};
  for (int v = 0; v < n; ++v) {
    std::sort(g.adjacency_.begin() + g.offsets_[v],
              g.adjacency_.begin() + g.offsets_[v + 1],
              [](const Neighbor& a, const Neighbor& b) { return a.v < b.v; });
  }
  return g;
}

Weight Graph::weight_between(Vertex u, Vertex v) const {
  auto list = neighbors(u);
  auto it = std::lower_bound(
      list.begin(), list.end(), v,
      [](const Neighbor& a, Vertex target) { return a.v < target; });
  return (it != list.end() && it->v == v) ? it->w : 0;
}

Weight Graph::min_degree() const {
  if (n_ == 0) return 0;
  return *std::min_element(degree_.begin(), degree_.end());
}

Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t seen = 0;
  std::vector<Edge> edges;

  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      if (fields.size() != 2 || !parse_int(fields[0], n) ||
          !parse_int(fields[1], m) || n < 0 || m < 0) {
        parse_fail(line_no, "malformed header");
      }
      if (n > std::numeric_limits<Vertex>::max()) {
        parse_fail(line_no, "vertex count too large");
      }
      have_header = true;
    } else {
      if (seen == m) parse_fail(line_no, "more edge lines than declared");
      std::int64_t u = 0;
      std::int64_t v = 0;
      std::int64_t w = 1;
      if ((fields.size() != 2 && fields.size() != 3) ||
          !parse_int(fields[0], u) || !parse_int(fields[1], v) ||
          (fields.size() == 3 && !parse_int(fields[2], w))) {
        parse_fail(line_no, "malformed edge line");
      }
      if (w <= 0) parse_fail(line_no, "non-positive weight");
      if (u < 0 || v < 0 || u >= n || v >= n) {
        parse_fail(line_no, "vertex id out of range");
      }
      if (u == v) parse_fail(line_no, "self-loop");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
      ++seen;
    }
    if (end == text.size()) break;
  }
  if (!have_header) fail(ErrorKind::kParse, "missing header line");
  if (seen != m) {
    fail(ErrorKind::kParse, "expected " + std::to_string(m) +
                                " edge lines, found " + std::to_string(seen));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kIo, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (e.w != 1) out << ' ' << e.w;
    out << '\n';
  }
  return out.str();
}

std::vector<int> canonical_labels(std::span<const int> labels) {
  std::vector<int> remap;
  std::vector<int> out(labels.size());
  int next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int l = labels[i];
    if (l >= static_cast<int>(remap.size())) remap.resize(l + 1, -1);
    if (remap[l] < 0) remap[l] = next++;
    out[i] = remap[l];
  }
  return out;
}

std::vector<std::vector<Vertex>> KCut::components() const {
  std::vector<std::vector<Vertex>> parts(k);
  for (std::size_t v = 0; v < labels.size(); ++v) {
    parts[labels[v]].push_back(static_cast<Vertex>(v));
  }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.empty() || b.empty()) return !a.empty() && b.empty();
    return a.front() < b.front();
  });
  return parts;
}

Weight cut_value(const Graph& g, const KCut& cut) {
  require(static_cast<int>(cut.labels.size()) == g.num_vertices(),
          ErrorKind::kInvalidArgument, "cut labels do not match graph size");
  require(cut.k >= 1, ErrorKind::kInvalidArgument, "cut needs k >= 1");
  std::vector<char> used(cut.k, 0);
  for (int l : cut.labels) {
    require(l >= 0 && l < cut.k, ErrorKind::kInvalidArgument,
            "cut label out of range");
    used[l] = 1;
  }
  require(std::all_of(used.begin(), used.end(), [](char c) { return c; }),
          ErrorKind::kInvalidArgument, "invalid cut: empty part");
  Weight total = 0;
  for (const Edge& e : g.edges()) {
    if (cut.labels[e.u] != cut.labels[e.v]) total += e.w;
  }
  return total;
}

KCut make_kcut(const Graph& g, std::vector<int> labels, int k) {
  KCut cut;
  cut.k = k;
  cut.labels = std::move(labels);
  cut.value = cut_value(g, cut);
  cut.labels = canonical_labels(cut.labels);
  return cut;
}

void VertexPartition::validate(int n) const {
  std::vector<char> seen(n, 0);
  std::size_t covered = 0;
  for (const auto& block : blocks) {
    require(!block.empty(), ErrorKind::kInvalidArgument,
            "partition has an empty block");
    for (Vertex v : block) {
      require(v >= 0 && v < n, ErrorKind::kInvalidArgument,
              "partition vertex out of range");
      require(!seen[v], ErrorKind::kInvalidArgument,
              "partition blocks overlap");
      seen[v] = 1;
      ++covered;
    }
  }
  require(covered == static_cast<std::size_t>(n), ErrorKind::kInvalidArgument,
          "partition does not cover all vertices");
}

std::vector<int> VertexPartition::block_of(int n) const {
  std::vector<int> out(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Vertex v : blocks[b]) out[v] = static_cast<int>(b);
  }
  return out;
}

void VertexPartition::normalize() {
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    return a.front() < b.front();
  });
}

Contraction contract(const Graph& g, const VertexPartition& p) {
  p.validate(g.num_vertices());
  Contraction out;
  out.map.num_super = static_cast<int>(p.size());
  out.map.super_vertex.assign(g.num_vertices(), 0);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    for (Vertex v : p.blocks[b]) {
      out.map.super_vertex[v] = static_cast<Vertex>(b);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Vertex a = out.map.super_vertex[e.u];
    Vertex b = out.map.super_vertex[e.v];
    if (a != b) edges.push_back({a, b, e.w});
  }
  out.graph = Graph::from_edges(out.map.num_super, edges);
  return out;
}

KCut lift_cut(const Graph& original, const ContractionMap& map,
              const KCut& contracted_cut) {
  require(static_cast<int>(contracted_cut.labels.size()) == map.num_super,
          ErrorKind::kInvalidArgument, "cut does not match contraction");
  std::vector<int> labels(original.num_vertices());
  for (int v = 0; v < original.num_vertices(); ++v) {
    labels[v] = contracted_cut.labels[map.super_vertex[v]];
  }
  return make_kcut(original, std::move(labels), contracted_cut.k);
}

VertexPartition connected_components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  VertexPartition out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.blocks.size());
    out.blocks.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out.blocks[id].push_back(v);
      for (const Neighbor& nb : g.neighbors(v)) {
        if (comp[nb.v] < 0) {
          comp[nb.v] = id;
          stack.push_back(nb.v);
        }
      }
    }
    std::sort(out.blocks[id].begin(), out.blocks[id].end());
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g,
                                 std::span<const Vertex> vertices) {
  std::vector<int> local(g.num_vertices(), -1);
  InducedSubgraph out;
  out.original_id.assign(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    require(local[vertices[i]] < 0, ErrorKind::kInvalidArgument,
            "duplicate vertex in induced subgraph");
    local[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      edges.push_back({local[e.u], local[e.v], e.w});
    }
  }
  out.graph = Graph::from_edges(static_cast<int>(vertices.size()), edges);
  return out;
}

double Conductance::to_double() const {
  if (infinite()) return std::numeric_limits<double>::infinity();
  return static_cast<double>(boundary) / static_cast<double>(volume);
}

std::strong_ordering operator<=>(const Conductance& a, const Conductance& b) {
  if (a.infinite() || b.infinite()) {
    return static_cast<int>(a.infinite()) <=> static_cast<int>(b.infinite());
  }
  // Desk-scale volumes keep these products far from overflow.
  __int128 lhs = static_cast<__int128>(a.boundary) * b.volume;
  __int128 rhs = static_cast<__int128>(b.boundary) * a.volume;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Conductance conductance(const Graph& g, std::span<const Vertex> s) {
  const int n = g.num_vertices();
  require(g.total_weight() > 0, ErrorKind::kDomain,
          "conductance needs at least one edge");
  std::vector<char> in(n, 0);
  std::size_t count = 0;
  for (Vertex v : s) {
    require(v >= 0 && v < n, ErrorKind::kDomain, "vertex out of range");
    if (!in[v]) ++count;
    in[v] = 1;
  }
  require(count > 0 && count < static_cast<std::size_t>(n),
          ErrorKind::kDomain, "conductance needs a nonempty proper subset");
  Weight boundary = 0;
  Weight vol_in = 0;
  for (const Edge& e : g.edges()) {
    if (in[e.u] != in[e.v]) boundary += e.w;
  }
  for (int v = 0; v < n; ++v) {
    if (in[v]) vol_in += g.degree(v);
  }
  const Weight vol_out = 2 * g.total_weight() - vol_in;
  return {boundary, std::min(vol_in, vol_out)};
}

bool conductance_below(const Conductance& c, Weight num, Weight den) {
  if (c.infinite()) return false;
  return static_cast<__int128>(c.boundary) * den <
         static_cast<__int128>(num) * c.volume;
}

}  // namespace kcut
