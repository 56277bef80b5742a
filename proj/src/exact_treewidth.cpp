#include "treescope/exact_treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace treescope {

namespace {

constexpr std::size_t kReductionLimit = 4096;

using Mask = std::uint32_t;

std::size_t subset_dp(const std::vector<Mask>& adj) {
  const std::size_t k = adj.size();
  if (k == 0) return 0;
  const Mask full = k == 32 ? ~Mask{0} : (Mask{1} << k) - 1;
  std::vector<std::int8_t> tw(static_cast<std::size_t>(full) + 1, 0);
  tw[0] = -1;
  for (Mask s = 1; s <= full && s != 0; ++s) {
    std::int8_t best = 127;
    for (Mask rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const Mask without = s & ~(Mask{1} << v);
      // Vertices outside `without` reachable from v through `without`.
      Mask frontier = adj[v];
      Mask expanded = 0;
      Mask inside = frontier & without;
      while (inside & ~expanded) {
        const Mask fresh = inside & ~expanded;
        expanded |= fresh;
        for (Mask f = fresh; f; f &= f - 1) frontier |= adj[std::countr_zero(f)];
        inside = frontier & without;
      }
      const Mask q = frontier & ~without & ~(Mask{1} << v);
      const auto cost = static_cast<std::int8_t>(std::max<int>(tw[without], std::popcount(q)));
      best = std::min(best, cost);
    }
    tw[s] = best;
    if (s == full) break;
  }
  return static_cast<std::size_t>(std::max<int>(tw[full], 0));
}

}  // namespace

std::size_t treewidth_subset_dp(const Graph& g, std::size_t kernel_cap) {
  const std::size_t n = g.num_vertices();
  if (n > kernel_cap || n > 30) {
    throw Error("exact treewidth: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(kernel_cap));
  }
  std::vector<Mask> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return subset_dp(adj);
}

std::size_t brute_force_treewidth(const Graph& g, std::size_t kernel_cap) {
  const std::size_t n = g.num_vertices();
  if (n > kReductionLimit) throw Error("exact treewidth: graph too large");

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<char> alive(n, 1);
  std::size_t left = n;

  // Any cycle forces width >= 2, any edge width >= 1.
  std::size_t components = 0;
  connected_components(g, &components);
  std::size_t low = g.num_edges() > 0 ? 1 : 0;
  if (g.num_edges() + components > n) low = 2;

  auto nbrs = [&](std::size_t v) {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < n; ++u) {
      if (alive[u] && adj[v][u]) out.push_back(u);
    }
    return out;
  };
  auto is_clique = [&](const std::vector<std::size_t>& set, std::size_t skip) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i == skip) continue;
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        if (j != skip && !adj[set[i]][set[j]]) return false;
      }
    }
    return true;
  };
  auto eliminate = [&](std::size_t v, const std::vector<std::size_t>& nb) {
    for (std::size_t a : nb) {
      for (std::size_t b : nb) {
        if (a != b) adj[a][b] = 1;
      }
    }
    alive[v] = 0;
    --left;
  };

  bool changed = true;
  while (changed && left > 0) {
    changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      const auto nb = nbrs(v);
      if (is_clique(nb, nb.size())) {
        low = std::max(low, nb.size());
        eliminate(v, nb);
        changed = true;
        continue;
      }
      if (nb.size() <= low) {
        for (std::size_t skip = 0; skip < nb.size(); ++skip) {
          if (is_clique(nb, skip)) {
            eliminate(v, nb);
            changed = true;
            break;
          }
        }
      }
    }
  }

  if (left == 0) return low;
  if (left > kernel_cap || left > 30) {
    throw Error("exact treewidth: reduced kernel has " + std::to_string(left) + " vertices, cap is " +
                std::to_string(kernel_cap));
  }
  std::vector<std::size_t> index(n, 0), kernel;
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v]) {
      index[v] = kernel.size();
      kernel.push_back(v);
    }
  }
  std::vector<Mask> masks(kernel.size(), 0);
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    for (std::size_t j = 0; j < kernel.size(); ++j) {
      if (i != j && adj[kernel[i]][kernel[j]]) masks[i] |= Mask{1} << j;
    }
  }
  return std::max(low, subset_dp(masks));
}

}  // namespace treescope
