#include "treescope/kcore.hpp"

#include <algorithm>

namespace treescope {

CoreDecomposition k_core(const Graph& g) {
  const std::size_t n = g.num_vertices();
  CoreDecomposition out;
  if (n == 0) return out;

  const std::size_t max_deg = g.max_degree();
  std::vector<std::int32_t> deg(n);
  std::vector<std::size_t> bin(max_deg + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = static_cast<std::int32_t>(g.degree(static_cast<vertex_t>(v)));
    ++bin[deg[v]];
  }
  // bin[d] becomes the start offset of degree-d vertices in `order`.
  std::size_t start = 0;
  for (auto& b : bin) {
    std::size_t count = b;
    b = start;
    start += count;
  }
  std::vector<vertex_t> order(n);
  std::vector<std::size_t> pos(n);
  for (std::size_t v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    order[pos[v]] = static_cast<vertex_t>(v);
  }
  for (std::size_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    vertex_t v = order[i];
    for (vertex_t u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        // Swap u with the first vertex of its bucket, then shrink the bucket.
        const std::int32_t du = deg[u];
        const std::size_t pu = pos[u];
        const std::size_t pw = bin[du];
        const vertex_t w = order[pw];
        if (u != w) {
          order[pu] = w;
          pos[w] = pu;
          order[pw] = u;
          pos[u] = pw;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }

  out.core = std::move(deg);
  auto [lo, hi] = std::minmax_element(out.core.begin(), out.core.end());
  out.k_min = *lo;
  out.k_max = *hi;
  return out;
}

}  // namespace treescope
