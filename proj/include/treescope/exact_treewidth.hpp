#pragma once

#include <cstddef>

#include "treescope/graph.hpp"

namespace treescope {

/// Exact treewidth for small graphs.
///
/// Safe reductions (simplicial and almost-simplicial elimination against a
/// running lower bound) shrink the graph first; the remaining kernel is
/// solved by the O*(2^k) subset recurrence
///   TW(S) = min_{v in S} max(TW(S - v), |Q(S - v, v)|),
/// where Q(S, v) are the vertices outside S + v reachable from v through S.
/// Throws Error when the kernel exceeds `kernel_cap` vertices.
std::size_t brute_force_treewidth(const Graph& g, std::size_t kernel_cap = 18);

/// Subset recurrence only, no reductions. Requires n <= kernel_cap.
std::size_t treewidth_subset_dp(const Graph& g, std::size_t kernel_cap = 18);

}  // namespace treescope
