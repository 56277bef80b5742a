#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "treescope/graph.hpp"
#include "treescope/ordering.hpp"

namespace treescope {

struct MetricProfile {
  double delta = 0.0;  // multiple of 1/2
  std::int32_t diameter = 0;
  std::size_t n = 0;
};

inline constexpr std::size_t kDeltaCap = 300;

/// Four-point Gromov hyperbolicity by enumerating every quadruple.
/// O(n^4) time, O(n^2) memory. Throws when n > cap unless `force` is set.
MetricProfile delta_exact(const Graph& g, std::size_t cap = kDeltaCap, bool force = false, std::size_t threads = 1);

struct GeodesicCycleCheck {
  std::vector<vertex_t> cycle;
  bool is_cycle = false;
  bool is_geodesic = false;
  std::size_t length = 0;
};

/// `cycle` lists distinct vertices; the closing edge back to the first is implied.
GeodesicCycleCheck check_geodesic_cycle(const Graph& g, const std::vector<vertex_t>& cycle);

inline constexpr std::size_t kGeodesicCycleCap = 14;

/// Longest geodesic cycle by exhaustive search; 0 for forests.
std::size_t longest_geodesic_cycle_bruteforce(const Graph& g);

/// Boundary of the unit cell with top-left corner (row, col) in the k-subdivided
/// n x n grid: a cycle of 4(k+1) vertices. For n = 2 this is the outer face.
std::vector<vertex_t> grid_subdivision_cell(const Graph& g, std::size_t n, std::size_t row = 0, std::size_t col = 0);

struct HeuristicLength {
  std::string heuristic;
  std::int32_t td_length = 0;
  std::size_t width = 0;
};

struct Theorem3Report {
  std::size_t n = 0, k = 0;
  std::size_t vertices = 0;
  MetricProfile metric;
  double delta_formula = 0.0;  // (n-1)(k+1) - 1
  bool delta_matches_formula = false;
  std::size_t tw = 0;          // exact
  std::size_t tw_analytic = 0;  // n
  std::size_t nu = 0;          // 4(k+1)
  GeodesicCycleCheck nu_cycle;  // the 4-cell around the grid's corner
  std::size_t nu_bruteforce = 0;  // 0 when the graph is too large to search
  bool nu_bruteforce_run = false;
  std::size_t tl_analytic = 0;  // n(k+1)
  std::vector<HeuristicLength> lengths;
  std::int32_t tl_min = 0;
  std::size_t upper_bound = 0;  // (tw + 1) * nu
  bool chain_holds = false;
};

/// Builds the k-subdivided n x n grid and checks
///   delta <= td_length(TD_h) <= (tw + 1) * nu
/// for every requested heuristic h.
Theorem3Report verify_theorem3(std::size_t n, std::size_t k, const std::vector<Heuristic>& heuristics,
                               std::uint64_t seed = 0, std::size_t oracle_cap = 18, std::size_t threads = 1);

}  // namespace treescope
