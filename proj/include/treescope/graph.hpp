#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace treescope {

using vertex_t = std::int32_t;
using Edge = std::pair<vertex_t, vertex_t>;

inline constexpr std::int32_t kUnreachable = std::numeric_limits<std::int32_t>::max();

/// Domain failure (bad input, violated precondition). The CLI maps it to exit 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Immutable undirected simple graph in CSR layout.
///
/// Vertices are contiguous 0-based indices. Every vertex carries the external
/// label it was read with, so reports can be written in input terms.
/// Neighbor lists are sorted; the structure is symmetric and loop-free.
class Graph {
 public:
  Graph() = default;

  /// Builds from an arbitrary edge list. Self-loops and repeated edges are
  /// dropped; the counts are available through the out-parameters.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {},
                          std::size_t* self_loops = nullptr,
                          std::size_t* duplicates = nullptr);

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept { return targets_.size() / 2; }
  bool empty() const noexcept { return labels_.empty(); }

  std::span<const vertex_t> neighbors(vertex_t v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(vertex_t v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;
  double average_degree() const;

  bool has_edge(vertex_t u, vertex_t v) const;

  /// Position of the arc u->v in the CSR target array, usable as a dense arc id
  /// in [0, 2m). Requires has_edge(u, v).
  std::size_t arc_index(vertex_t u, vertex_t v) const;

  const std::string& label(vertex_t v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<vertex_t> find(const std::string& label) const;

  bool is_valid_vertex(vertex_t v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < num_vertices();
  }

  /// Every undirected edge once, as (u, v) with u < v.
  std::vector<Edge> edges() const;

  /// Subgraph induced on `vertices`, renumbered in the given order. Labels follow.
  Graph induced_subgraph(std::span<const vertex_t> vertices) const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<vertex_t> targets_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, vertex_t> index_;
};

/// Membership over internal vertex indices with an explicit member list.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : mask_(n, 0) {}
  VertexSet(std::size_t n, std::span<const vertex_t> members);

  void insert(vertex_t v);
  bool contains(vertex_t v) const {
    return v >= 0 && static_cast<std::size_t>(v) < mask_.size() && mask_[v];
  }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::size_t universe() const noexcept { return mask_.size(); }
  std::span<const vertex_t> members() const noexcept { return members_; }

 private:
  std::vector<char> mask_;
  std::vector<vertex_t> members_;
};

struct EdgeListLoad {
  Graph graph;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
  std::size_t dropped() const noexcept { return self_loops_dropped + duplicates_dropped; }
};

/// Whitespace-separated "u v" lines; '#' and '%' start comment lines.
/// Vertices are numbered in order of first appearance.
EdgeListLoad load_edge_list(std::istream& in);
/// PACE ".gr": "c" comments, a "p tw n m" header and 1-based edge lines.
EdgeListLoad load_pace_graph(std::istream& in);
/// Chooses the reader by extension (".gr" is PACE, anything else an edge list).
EdgeListLoad load_graph_file(const std::string& path);

void save_edge_list(const Graph& g, std::ostream& out);
void save_pace_graph(const Graph& g, std::ostream& out);

/// Connected component id per vertex, numbered in order of smallest member.
std::vector<vertex_t> connected_components(const Graph& g, std::size_t* count = nullptr);
bool is_connected(const Graph& g);

/// Largest component; ties go to the component with the smallest vertex index.
/// Internal order within the component follows the original indices.
Graph giant_component(const Graph& g);

std::vector<std::int32_t> bfs_distances(const Graph& g, vertex_t source);

std::int32_t eccentricity(const Graph& g, vertex_t v);

/// Exact all-sources diameter. With `sample_sources` > 0 and fewer sources than
/// vertices, only that many seeded BFS roots are used (a lower bound).
std::int32_t diameter(const Graph& g, std::size_t sample_sources = 0, std::uint64_t seed = 0);

double local_clustering(const Graph& g, vertex_t v);
double average_clustering(const Graph& g);

/// Number of edges with exactly one endpoint in `s`.
std::size_t cut_size(const Graph& g, const VertexSet& s);
std::size_t volume(const Graph& g, const VertexSet& s);

/// cut(S, S^c) / min(vol(S), vol(S^c)).
double conductance(const Graph& g, const VertexSet& s);

}  // namespace treescope
