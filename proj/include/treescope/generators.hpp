#pragma once

#include <cstdint>
#include <string>

#include "treescope/graph.hpp"

namespace treescope {

enum class Family { er, chung_lu, binary_tree, grid, cycle, clique, grid_subdivision };

Family parse_family(const std::string& name);
std::string to_string(Family family);

/// Parameters for one generated graph. Unused fields are ignored by a family.
struct GenSpec {
  Family family = Family::grid;
  std::size_t n = 0;          // er, chung_lu, cycle, clique; grid side for grid_subdivision
  double p = 0.0;             // er
  double gamma = 3.0;         // chung_lu
  double avg_degree = 2.5;    // chung_lu target mean expected degree
  std::size_t rows = 0;       // grid
  std::size_t cols = 0;       // grid
  std::size_t depth = 0;      // binary_tree
  std::size_t k = 0;          // grid_subdivision interior vertices per edge
  std::uint64_t seed = 0;
};

/// Validates the spec and dispatches to the family constructor.
Graph generate(const GenSpec& spec);

/// G(n, p). Pairs are tested in lexicographic order against an exact 64-bit
/// threshold; above kDenseSamplingLimit vertices geometric skipping is used.
Graph gen_er(std::size_t n, double p, std::uint64_t seed);

/// Chung-Lu expected-degree graph with weights w_i ∝ (i+1)^(-1/(gamma-1)),
/// scaled so the mean weight equals `avg_degree`; pair (i, j) appears with
/// probability min(1, w_i w_j / sum(w)).
Graph gen_chung_lu(std::size_t n, double gamma, std::uint64_t seed, double avg_degree = 2.5);

Graph gen_grid(std::size_t rows, std::size_t cols);
Graph gen_cycle(std::size_t n);
Graph gen_clique(std::size_t n);
/// Perfect binary tree with 2^(depth+1) - 1 vertices; children of i are 2i+1, 2i+2.
Graph gen_binary_tree(std::size_t depth);
/// n x n grid with every edge replaced by a path through k new vertices.
/// Grid vertices keep indices r*n + c; subdivision vertices follow.
Graph gen_grid_subdivision(std::size_t n, std::size_t k);

inline constexpr std::size_t kDenseSamplingLimit = 20000;

}  // namespace treescope
