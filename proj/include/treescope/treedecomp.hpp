#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "treescope/graph.hpp"
#include "treescope/kcore.hpp"
#include "treescope/ordering.hpp"

namespace treescope {

/// G plus the fill edges induced by eliminating along `ordering`.
///
/// `higher[v]` is the neighborhood of v among later-eliminated vertices in the
/// filled graph, sorted by vertex id. The ordering is a perfect elimination
/// ordering of base + fill by construction.
struct Triangulation {
  EliminationOrdering ordering;
  std::vector<std::vector<vertex_t>> higher;
  std::vector<Edge> fill_edges;

  std::size_t fill_count() const noexcept { return fill_edges.size(); }
  /// Size of the largest clique of the filled graph: 1 + max |higher[v]|.
  std::size_t max_clique() const;
  /// Width of the ordering: max |higher[v]|.
  std::size_t width() const;
};

/// Symbolic elimination along the elimination tree; O(n + m + fill).
Triangulation triangulate(const Graph& g, const EliminationOrdering& pi);

/// Whether `pi` eliminates g without creating any fill edge.
bool is_perfect_elimination_ordering(const Graph& g, const EliminationOrdering& pi);

struct TreeDecomposition {
  std::vector<std::vector<vertex_t>> bags;  // sorted vertex ids
  std::vector<std::pair<std::int32_t, std::int32_t>> tree;  // edges between bag indices
  std::int32_t root = 0;
  std::string source_heuristic;

  std::size_t num_bags() const noexcept { return bags.size(); }
  std::size_t max_cardinality() const;
  /// max cardinality - 1 (and 0 for an empty decomposition).
  std::size_t width() const;
  std::vector<std::vector<std::int32_t>> tree_adjacency() const;
  /// bags_of(n)[v] lists the bags containing v in increasing order.
  std::vector<std::vector<std::int32_t>> bags_of(std::size_t n) const;
};

TreeDecomposition gavril_td(const Graph& g, const EliminationOrdering& pi);
TreeDecomposition gavril_td(const Triangulation& tri);

enum class TdViolation { none, bad_vertex, not_a_tree, vertex_uncovered, edge_uncovered, disconnected_occurrence };

std::string to_string(TdViolation v);

/// Outcome of checking the three decomposition properties plus tree shape.
/// On failure, the witness fields identify the first violation found.
struct ValidationReport {
  TdViolation violation = TdViolation::none;
  std::string message;
  vertex_t vertex = -1;              // uncovered / disconnected-occurrence vertex
  Edge edge{-1, -1};                 // uncovered edge
  std::int32_t bag_a = -1, bag_b = -1;  // bags witnessing a disconnected occurrence

  bool valid() const noexcept { return violation == TdViolation::none; }
};

ValidationReport validate_td(const Graph& g, const TreeDecomposition& td);

struct BagStats {
  std::size_t cardinality = 0;
  double density = 1.0;
  std::int32_t eccentricity = 0;
  double avg_core = 0.0;
};

struct TDStats {
  std::size_t n_bags = 0;
  std::int32_t td_diameter = 0;
  std::size_t width_max = 0;
  double width_median = 0.0;
  std::size_t cardinality_max = 0;
  double cardinality_median = 0.0;
  double density_median = 0.0;
  std::vector<BagStats> bags;
};

/// Per-bag cardinality, induced-edge density (1.0 for singletons), tree
/// eccentricity and mean core number, plus summary medians. Throws on an
/// invalid decomposition.
TDStats td_stats(const Graph& g, const TreeDecomposition& td, const CoreDecomposition& cores);

/// Eccentricity of every bag in the decomposition tree.
std::vector<std::int32_t> tree_eccentricities(const TreeDecomposition& td);

/// max over bags of the largest graph distance between two bag members.
std::int32_t td_length(const Graph& g, const TreeDecomposition& td);

double median(std::vector<double> values);

/// PACE ".td": "s td <bags> <max-card> <n>", "b <id> v..." (1-based), tree edges "i j".
/// Lines starting with 'c' are comments.
void export_td(const TreeDecomposition& td, std::size_t n, std::ostream& out);
TreeDecomposition import_td(std::istream& in, std::size_t* n_out = nullptr);

/// GraphViz rendering; bags labeled with member labels, colored by density.
void export_td_dot(const Graph& g, const TreeDecomposition& td, std::ostream& out);

}  // namespace treescope
