#pragma once

#include <cstdint>
#include <vector>

#include "treescope/graph.hpp"

namespace treescope {

struct CoreDecomposition {
  std::vector<std::int32_t> core;
  std::int32_t k_min = 0;
  std::int32_t k_max = 0;
};

/// Batagelj-Zaversnik peeling with a bucket queue, O(n + m).
CoreDecomposition k_core(const Graph& g);

}  // namespace treescope
