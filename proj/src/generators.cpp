#include "treescope/generators.hpp"

#include <cmath>
#include <vector>

#include "treescope/rng.hpp"

namespace treescope {

Family parse_family(const std::string& name) {
  if (name == "er") return Family::er;
  if (name == "chung_lu" || name == "pl") return Family::chung_lu;
  if (name == "binary_tree") return Family::binary_tree;
  if (name == "grid") return Family::grid;
  if (name == "cycle") return Family::cycle;
  if (name == "clique") return Family::clique;
  if (name == "grid_subdivision") return Family::grid_subdivision;
  throw Error("unknown graph family '" + name + "'");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::er: return "er";
    case Family::chung_lu: return "chung_lu";
    case Family::binary_tree: return "binary_tree";
    case Family::grid: return "grid";
    case Family::cycle: return "cycle";
    case Family::clique: return "clique";
    case Family::grid_subdivision: return "grid_subdivision";
  }
  return "unknown";
}

Graph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::er:
      if (spec.n < 1) throw Error("er: n must be >= 1");
      if (!(spec.p > 0.0 && spec.p <= 1.0)) throw Error("er: p must lie in (0, 1]");
      return gen_er(spec.n, spec.p, spec.seed);
    case Family::chung_lu:
      if (spec.n < 1) throw Error("chung_lu: n must be >= 1");
      if (!(spec.gamma > 2.0)) throw Error("chung_lu: gamma must exceed 2");
      if (!(spec.avg_degree > 0.0)) throw Error("chung_lu: average degree must be positive");
      return gen_chung_lu(spec.n, spec.gamma, spec.seed, spec.avg_degree);
    case Family::binary_tree:
      if (spec.depth > 24) throw Error("binary_tree: depth too large");
      return gen_binary_tree(spec.depth);
    case Family::grid:
      if (spec.rows < 1 || spec.cols < 1) throw Error("grid: rows and cols must be >= 1");
      return gen_grid(spec.rows, spec.cols);
    case Family::cycle:
      if (spec.n < 3) throw Error("cycle: n must be >= 3");
      return gen_cycle(spec.n);
    case Family::clique:
      if (spec.n < 1) throw Error("clique: n must be >= 1");
      return gen_clique(spec.n);
    case Family::grid_subdivision:
      if (spec.n < 2) throw Error("grid_subdivision: n must be >= 2");
      return gen_grid_subdivision(spec.n, spec.k);
  }
  throw Error("unhandled family");
}

namespace {

// p * 2^64 as an integer threshold; next() < threshold has probability p
// up to 2^-64, with no floating-point comparison involved.
std::uint64_t probability_threshold(double p) {
  return static_cast<std::uint64_t>(std::ldexp(p, 64));
}

}  // namespace

Graph gen_er(std::size_t n, double p, std::uint64_t seed) {
  Rng rng = Rng::stream(seed, "er");
  std::vector<Edge> edges;
  if (p >= 1.0) return gen_clique(n);
  if (n <= kDenseSamplingLimit) {
    const std::uint64_t threshold = probability_threshold(p);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (rng.next() < threshold) edges.emplace_back(static_cast<vertex_t>(u), static_cast<vertex_t>(v));
      }
    }
  } else {
    // Batagelj-Brandes geometric skipping over the lower triangle.
    const double log_q = std::log1p(-p);
    long long v = 1, w = -1;
    const auto nn = static_cast<long long>(n);
    while (v < nn) {
      const double r = rng.uniform();
      w += 1 + static_cast<long long>(std::floor(std::log1p(-r) / log_q));
      while (w >= v && v < nn) {
        w -= v;
        ++v;
      }
      if (v < nn) edges.emplace_back(static_cast<vertex_t>(w), static_cast<vertex_t>(v));
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_chung_lu(std::size_t n, double gamma, std::uint64_t seed, double avg_degree) {
  Rng rng = Rng::stream(seed, "chung_lu");
  std::vector<double> w(n);
  const double exponent = -1.0 / (gamma - 1.0);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::pow(static_cast<double>(i + 1), exponent);
    total += w[i];
  }
  const double scale = avg_degree * static_cast<double>(n) / total;
  total = 0.0;
  for (auto& x : w) {
    x *= scale;
    total += x;
  }

  std::vector<Edge> edges;
  if (n <= kDenseSamplingLimit) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (rng.bernoulli(w[u] * w[v] / total)) {
          edges.emplace_back(static_cast<vertex_t>(u), static_cast<vertex_t>(v));
        }
      }
    }
  } else {
    // Miller-Hagberg skipping; weights are already non-increasing.
    for (std::size_t u = 0; u + 1 < n; ++u) {
      std::size_t v = u + 1;
      double p = std::min(1.0, w[u] * w[v] / total);
      while (v < n && p > 0.0) {
        if (p < 1.0) {
          const double r = rng.uniform();
          v += static_cast<std::size_t>(std::floor(std::log1p(-r) / std::log1p(-p)));
        }
        if (v < n) {
          const double q = std::min(1.0, w[u] * w[v] / total);
          if (rng.uniform() < q / p) edges.emplace_back(static_cast<vertex_t>(u), static_cast<vertex_t>(v));
          p = q;
          ++v;
        }
      }
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_grid(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<vertex_t>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

Graph gen_cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<vertex_t>(i), static_cast<vertex_t>((i + 1) % n));
  }
  return Graph::from_edges(n, edges);
}

Graph gen_clique(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(static_cast<vertex_t>(u), static_cast<vertex_t>(v));
  }
  return Graph::from_edges(n, edges);
}

Graph gen_binary_tree(std::size_t depth) {
  const std::size_t n = (std::size_t{1} << (depth + 1)) - 1;
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(static_cast<vertex_t>((v - 1) / 2), static_cast<vertex_t>(v));
  return Graph::from_edges(n, edges);
}

Graph gen_grid_subdivision(std::size_t n, std::size_t k) {
  const Graph grid = gen_grid(n, n);
  std::vector<Edge> edges;
  auto next = static_cast<vertex_t>(grid.num_vertices());
  for (auto [u, v] : grid.edges()) {
    vertex_t prev = u;
    for (std::size_t i = 0; i < k; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, v);
  }
  return Graph::from_edges(static_cast<std::size_t>(next), edges);
}

}  // namespace treescope
