#include "treescope/treedecomp.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace treescope {

std::size_t Triangulation::max_clique() const { return higher.empty() ? 0 : width() + 1; }

std::size_t Triangulation::width() const {
  std::size_t best = 0;
  for (const auto& h : higher) best = std::max(best, h.size());
  return best;
}

Triangulation triangulate(const Graph& g, const EliminationOrdering& pi) {
  const std::size_t n = g.num_vertices();
  if (!is_permutation(pi, n)) throw Error("triangulate: ordering is not a permutation of the vertex set");
  const auto pos = pi.positions();

  Triangulation tri;
  tri.ordering = pi;
  tri.higher.resize(n);
  std::vector<std::vector<vertex_t>> children(n);
  std::vector<std::size_t> mark(n, static_cast<std::size_t>(-1));

  // Higher neighborhood of v = its later original neighbors plus, for every
  // elimination-tree child c, higher(c) minus v. The parent of v is the
  // earliest-eliminated member of higher(v).
  for (std::size_t i = 0; i < n; ++i) {
    const vertex_t v = pi.order[i];
    auto& h = tri.higher[v];
    mark[v] = i;
    for (vertex_t u : g.neighbors(v)) {
      if (pos[u] > i && mark[u] != i) {
        mark[u] = i;
        h.push_back(u);
      }
    }
    for (vertex_t c : children[v]) {
      for (vertex_t u : tri.higher[c]) {
        if (mark[u] != i) {
          mark[u] = i;
          h.push_back(u);
        }
      }
    }
    children[v].clear();
    children[v].shrink_to_fit();
    std::sort(h.begin(), h.end());
    if (!h.empty()) {
      const vertex_t parent = *std::min_element(h.begin(), h.end(), [&](vertex_t a, vertex_t b) { return pos[a] < pos[b]; });
      children[parent].push_back(v);
    }
    for (vertex_t u : h) {
      if (!g.has_edge(v, u)) tri.fill_edges.emplace_back(std::min(v, u), std::max(v, u));
    }
  }
  return tri;
}

bool is_perfect_elimination_ordering(const Graph& g, const EliminationOrdering& pi) {
  return triangulate(g, pi).fill_count() == 0;
}

// ---------------------------------------------------------------------------

std::size_t TreeDecomposition::max_cardinality() const {
  std::size_t best = 0;
  for (const auto& b : bags) best = std::max(best, b.size());
  return best;
}

std::size_t TreeDecomposition::width() const {
  const std::size_t c = max_cardinality();
  return c == 0 ? 0 : c - 1;
}

std::vector<std::vector<std::int32_t>> TreeDecomposition::tree_adjacency() const {
  std::vector<std::vector<std::int32_t>> adj(bags.size());
  for (auto [a, b] : tree) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::vector<std::vector<std::int32_t>> TreeDecomposition::bags_of(std::size_t n) const {
  std::vector<std::vector<std::int32_t>> out(n);
  for (std::size_t b = 0; b < bags.size(); ++b) {
    for (vertex_t v : bags[b]) {
      if (v >= 0 && static_cast<std::size_t>(v) < n) out[v].push_back(static_cast<std::int32_t>(b));
    }
  }
  return out;
}

TreeDecomposition gavril_td(const Graph& g, const EliminationOrdering& pi) {
  auto td = gavril_td(triangulate(g, pi));
  return td;
}

TreeDecomposition gavril_td(const Triangulation& tri) {
  const auto& order = tri.ordering.order;
  const std::size_t n = order.size();
  TreeDecomposition td;
  td.source_heuristic = tri.ordering.heuristic;
  if (n == 0) return td;
  const auto pos = tri.ordering.positions();

  std::vector<std::int32_t> bag_of(n, -1);
  td.bags.push_back({order[n - 1]});
  bag_of[order[n - 1]] = 0;
  td.root = 0;

  for (std::size_t i = n - 1; i-- > 0;) {
    const vertex_t v = order[i];
    const auto& higher = tri.higher[v];
    if (higher.empty()) {
      // Only reachable for disconnected input: hang a fresh bag off the root.
      td.bags.push_back({v});
      bag_of[v] = static_cast<std::int32_t>(td.bags.size() - 1);
      td.tree.emplace_back(bag_of[v], td.root);
      continue;
    }
    // The lowest-ordered member of the higher neighborhood decides the attachment.
    const vertex_t m = *std::min_element(higher.begin(), higher.end(), [&](vertex_t a, vertex_t b) { return pos[a] < pos[b]; });
    const std::int32_t target = bag_of[m];
    auto& bag = td.bags[target];
    assert(std::includes(bag.begin(), bag.end(), higher.begin(), higher.end()));
    if (higher.size() == bag.size()) {
      bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
      bag_of[v] = target;
    } else {
      std::vector<vertex_t> fresh = higher;
      fresh.insert(std::upper_bound(fresh.begin(), fresh.end(), v), v);
      td.bags.push_back(std::move(fresh));
      bag_of[v] = static_cast<std::int32_t>(td.bags.size() - 1);
      td.tree.emplace_back(bag_of[v], target);
    }
  }
  return td;
}

// ---------------------------------------------------------------------------

std::string to_string(TdViolation v) {
  switch (v) {
    case TdViolation::none: return "none";
    case TdViolation::bad_vertex: return "bad_vertex";
    case TdViolation::not_a_tree: return "not_a_tree";
    case TdViolation::vertex_uncovered: return "vertex_uncovered";
    case TdViolation::edge_uncovered: return "edge_uncovered";
    case TdViolation::disconnected_occurrence: return "disconnected_occurrence";
  }
  return "unknown";
}

ValidationReport validate_td(const Graph& g, const TreeDecomposition& td) {
  ValidationReport report;
  const std::size_t n = g.num_vertices();
  const std::size_t nb = td.bags.size();
  auto fail = [&](TdViolation kind, std::string message) {
    report.violation = kind;
    report.message = std::move(message);
    return report;
  };

  for (std::size_t b = 0; b < nb; ++b) {
    for (vertex_t v : td.bags[b]) {
      if (!g.is_valid_vertex(v)) {
        report.vertex = v;
        report.bag_a = static_cast<std::int32_t>(b);
        return fail(TdViolation::bad_vertex, "bag " + std::to_string(b) + " holds unknown vertex " + std::to_string(v));
      }
    }
  }

  // Tree shape: |I| - 1 edges, all in range, connected.
  if (nb > 0) {
    if (td.tree.size() != nb - 1) {
      return fail(TdViolation::not_a_tree, "tree has " + std::to_string(td.tree.size()) + " edges for " +
                                               std::to_string(nb) + " bags");
    }
    for (auto [a, b] : td.tree) {
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= nb || static_cast<std::size_t>(b) >= nb || a == b) {
        report.bag_a = a;
        report.bag_b = b;
        return fail(TdViolation::not_a_tree, "invalid tree edge " + std::to_string(a) + "-" + std::to_string(b));
      }
    }
    auto adj = td.tree_adjacency();
    std::vector<char> seen(nb, 0);
    std::vector<std::int32_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      auto a = stack.back();
      stack.pop_back();
      for (auto b : adj[a]) {
        if (!seen[b]) {
          seen[b] = 1;
          ++reached;
          stack.push_back(b);
        }
      }
    }
    if (reached != nb) return fail(TdViolation::not_a_tree, "decomposition tree is disconnected");
  } else if (!td.tree.empty()) {
    return fail(TdViolation::not_a_tree, "tree edges without bags");
  }

  // Property 1: every vertex occurs.
  std::vector<std::int32_t> occurrences(n, 0);
  for (const auto& bag : td.bags) {
    for (vertex_t v : bag) ++occurrences[v];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (occurrences[v] == 0) {
      report.vertex = static_cast<vertex_t>(v);
      return fail(TdViolation::vertex_uncovered, "vertex " + g.label(static_cast<vertex_t>(v)) + " is in no bag");
    }
  }

  // Property 2: every edge inside some bag.
  std::vector<char> covered(2 * g.num_edges(), 0);
  std::vector<std::int32_t> in_bag(n, -1);
  for (std::size_t b = 0; b < nb; ++b) {
    for (vertex_t v : td.bags[b]) in_bag[v] = static_cast<std::int32_t>(b);
    for (vertex_t u : td.bags[b]) {
      for (vertex_t w : g.neighbors(u)) {
        if (in_bag[w] == static_cast<std::int32_t>(b)) covered[g.arc_index(u, w)] = 1;
      }
    }
  }
  for (auto [u, w] : g.edges()) {
    if (!covered[g.arc_index(u, w)]) {
      report.edge = {u, w};
      return fail(TdViolation::edge_uncovered,
                  "edge (" + g.label(u) + ", " + g.label(w) + ") is not contained in any bag");
    }
  }

  // Property 3: the bags holding v span a connected subtree, i.e. there are
  // exactly occurrences[v] - 1 tree edges whose both ends hold v.
  std::vector<std::int32_t> inner(n, 0);
  for (auto [a, b] : td.tree) {
    const auto& x = td.bags[a];
    const auto& y = td.bags[b];
    std::vector<vertex_t> common;
    std::vector<vertex_t> xs(x), ys(y);
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(common));
    for (vertex_t v : common) ++inner[v];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (occurrences[v] - inner[v] == 1) continue;
    // Witness: a bag holding v that is unreachable from the first one via v-bags.
    auto holders = td.bags_of(n)[v];
    auto adj = td.tree_adjacency();
    std::vector<char> holds(nb, 0), seen(nb, 0);
    for (auto b : holders) holds[b] = 1;
    std::vector<std::int32_t> stack{holders.front()};
    seen[holders.front()] = 1;
    while (!stack.empty()) {
      auto a = stack.back();
      stack.pop_back();
      for (auto b : adj[a]) {
        if (holds[b] && !seen[b]) {
          seen[b] = 1;
          stack.push_back(b);
        }
      }
    }
    report.vertex = static_cast<vertex_t>(v);
    report.bag_a = holders.front();
    for (auto b : holders) {
      if (!seen[b]) {
        report.bag_b = b;
        break;
      }
    }
    return fail(TdViolation::disconnected_occurrence,
                "bags holding vertex " + g.label(static_cast<vertex_t>(v)) + " are not connected (bags " +
                    std::to_string(report.bag_a) + " and " + std::to_string(report.bag_b) + ")");
  }
  return report;
}

// ---------------------------------------------------------------------------

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

namespace {

std::vector<std::int32_t> tree_bfs(const std::vector<std::vector<std::int32_t>>& adj, std::int32_t root) {
  std::vector<std::int32_t> dist(adj.size(), -1);
  std::vector<std::int32_t> queue{root};
  dist[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto a = queue[head];
    for (auto b : adj[a]) {
      if (dist[b] < 0) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    }
  }
  return dist;
}

std::int32_t argmax(const std::vector<std::int32_t>& v) {
  return static_cast<std::int32_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

}  // namespace

std::vector<std::int32_t> tree_eccentricities(const TreeDecomposition& td) {
  if (td.bags.empty()) return {};
  const auto adj = td.tree_adjacency();
  // In a tree every eccentricity is attained at an end of a diameter path.
  const auto from_root = tree_bfs(adj, td.root);
  const auto from_a = tree_bfs(adj, argmax(from_root));
  const auto from_b = tree_bfs(adj, argmax(from_a));
  std::vector<std::int32_t> ecc(td.bags.size());
  for (std::size_t i = 0; i < ecc.size(); ++i) ecc[i] = std::max(from_a[i], from_b[i]);
  return ecc;
}

TDStats td_stats(const Graph& g, const TreeDecomposition& td, const CoreDecomposition& cores) {
  auto report = validate_td(g, td);
  if (!report.valid()) throw Error("td_stats: invalid tree decomposition: " + report.message);
  if (cores.core.size() != g.num_vertices()) throw Error("td_stats: core decomposition does not match graph");

  TDStats stats;
  stats.n_bags = td.bags.size();
  stats.bags.resize(td.bags.size());
  const auto ecc = tree_eccentricities(td);
  std::vector<std::int32_t> in_bag(g.num_vertices(), -1);
  std::vector<double> widths, cards, densities;
  widths.reserve(td.bags.size());
  for (std::size_t b = 0; b < td.bags.size(); ++b) {
    const auto& bag = td.bags[b];
    auto& s = stats.bags[b];
    s.cardinality = bag.size();
    s.eccentricity = ecc[b];
    std::size_t twice_edges = 0;
    double core_sum = 0.0;
    for (vertex_t v : bag) in_bag[v] = static_cast<std::int32_t>(b);
    for (vertex_t u : bag) {
      core_sum += cores.core[u];
      for (vertex_t w : g.neighbors(u)) twice_edges += in_bag[w] == static_cast<std::int32_t>(b);
    }
    const double k = static_cast<double>(bag.size());
    s.density = bag.size() <= 1 ? 1.0 : static_cast<double>(twice_edges) / (k * (k - 1.0));
    s.avg_core = bag.empty() ? 0.0 : core_sum / k;
    stats.cardinality_max = std::max(stats.cardinality_max, bag.size());
    stats.td_diameter = std::max(stats.td_diameter, s.eccentricity);
    widths.push_back(k - 1.0);
    cards.push_back(k);
    densities.push_back(s.density);
  }
  stats.width_max = stats.cardinality_max == 0 ? 0 : stats.cardinality_max - 1;
  stats.width_median = median(std::move(widths));
  stats.cardinality_median = median(std::move(cards));
  stats.density_median = median(std::move(densities));
  return stats;
}

std::int32_t td_length(const Graph& g, const TreeDecomposition& td) {
  auto report = validate_td(g, td);
  if (!report.valid()) throw Error("td_length: invalid tree decomposition: " + report.message);
  if (!is_connected(g)) throw Error("td_length requires a connected graph; take giant_component first");
  const std::size_t n = g.num_vertices();
  const auto holders = td.bags_of(n);
  std::int32_t best = 0;
  for (std::size_t v = 0; v < n; ++v) {
    bool needed = false;
    for (auto b : holders[v]) needed |= td.bags[b].size() > 1;
    if (!needed) continue;
    const auto dist = bfs_distances(g, static_cast<vertex_t>(v));
    for (auto b : holders[v]) {
      for (vertex_t u : td.bags[b]) best = std::max(best, dist[u]);
    }
  }
  return best;
}

}  // namespace treescope
