#include <algorithm>

#include "treescope/ordering.hpp"
#include "treescope/rng.hpp"

namespace treescope {

namespace {

class Dissector {
 public:
  Dissector(const Graph& g, std::uint64_t seed, const NestedDissectionOptions& options)
      : g_(g), rng_(Rng::stream(seed, "nested_dissection")), options_(options),
        owner_(g.num_vertices(), -1), side_(g.num_vertices(), 0), dist_(g.num_vertices(), -1) {}

  std::vector<vertex_t> run() {
    std::vector<vertex_t> all(g_.num_vertices());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<vertex_t>(v);
    order_piece(std::move(all));
    return std::move(out_);
  }

 private:
  void claim(const std::vector<vertex_t>& piece) {
    const int id = next_id_++;
    for (vertex_t v : piece) owner_[v] = id;
    current_ = id;
  }

  bool in_piece(vertex_t v) const { return owner_[v] == current_; }

  std::vector<std::vector<vertex_t>> components(const std::vector<vertex_t>& piece) {
    claim(piece);
    const int id = current_;
    std::vector<std::vector<vertex_t>> comps;
    std::vector<vertex_t> stack;
    const int done = next_id_++;
    for (vertex_t s : piece) {
      if (owner_[s] != id) continue;
      comps.emplace_back();
      owner_[s] = done;
      stack.push_back(s);
      while (!stack.empty()) {
        vertex_t u = stack.back();
        stack.pop_back();
        comps.back().push_back(u);
        for (vertex_t w : g_.neighbors(u)) {
          if (owner_[w] == id) {
            owner_[w] = done;
            stack.push_back(w);
          }
        }
      }
    }
    return comps;
  }

  // BFS inside the current piece; returns visit order and fills dist_.
  std::vector<vertex_t> bfs(vertex_t root, const std::vector<vertex_t>& piece) {
    for (vertex_t v : piece) dist_[v] = -1;
    std::vector<vertex_t> order{root};
    order.reserve(piece.size());
    dist_[root] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      vertex_t u = order[head];
      for (vertex_t w : g_.neighbors(u)) {
        if (in_piece(w) && dist_[w] < 0) {
          dist_[w] = dist_[u] + 1;
          order.push_back(w);
        }
      }
    }
    return order;
  }

  void order_leaf(const std::vector<vertex_t>& piece) {
    const Graph sub = g_.induced_subgraph(piece);
    const auto local = order_mindeg(sub, rng_.next());
    for (vertex_t v : local.order) out_.push_back(piece[v]);
  }

  void order_piece(std::vector<vertex_t> piece) {
    if (piece.size() <= std::max<std::size_t>(options_.leaf_threshold, 1)) {
      order_leaf(piece);
      return;
    }
    auto comps = components(piece);
    if (comps.size() > 1) {
      for (auto& c : comps) order_piece(std::move(c));
      return;
    }

    claim(piece);
    // Pseudo-peripheral root by repeated farthest-vertex sweeps.
    vertex_t root = piece[rng_.below(piece.size())];
    std::vector<vertex_t> order = bfs(root, piece);
    for (int sweep = 0; sweep < 4; ++sweep) {
      const vertex_t far = order.back();
      const int ecc = dist_[far];
      auto next = bfs(far, piece);
      if (dist_[next.back()] <= ecc) {
        order = std::move(next);
        break;
      }
      order = std::move(next);
    }

    const std::size_t total = piece.size();
    const auto lo = static_cast<std::size_t>(std::max(1.0, (0.5 - options_.balance) * static_cast<double>(total)));
    const auto hi = static_cast<std::size_t>(
        std::min(static_cast<double>(total - 1), (0.5 + options_.balance) * static_cast<double>(total)));
    std::size_t size_a = total / 2;
    for (std::size_t i = 0; i < total; ++i) side_[order[i]] = i < size_a ? 0 : 1;

    // One hill-climbing pass of boundary swaps that strictly reduce the cut.
    for (vertex_t v : order) {
      int same = 0, other = 0;
      for (vertex_t w : g_.neighbors(v)) {
        if (!in_piece(w)) continue;
        (side_[w] == side_[v] ? same : other) += 1;
      }
      if (other <= same) continue;
      const std::size_t new_a = side_[v] == 0 ? size_a - 1 : size_a + 1;
      if (new_a < lo || new_a > hi) continue;
      side_[v] ^= 1;
      size_a = new_a;
    }

    std::vector<vertex_t> boundary_a, boundary_b;
    for (vertex_t v : order) {
      for (vertex_t w : g_.neighbors(v)) {
        if (in_piece(w) && side_[w] != side_[v]) {
          (side_[v] == 0 ? boundary_a : boundary_b).push_back(v);
          break;
        }
      }
    }
    const auto& separator = boundary_a.size() <= boundary_b.size() ? boundary_a : boundary_b;
    std::vector<vertex_t> rest;
    rest.reserve(total - separator.size());
    {
      const int sep_id = next_id_++;
      for (vertex_t v : separator) owner_[v] = sep_id;
      for (vertex_t v : piece) {
        if (owner_[v] != sep_id) rest.push_back(v);
      }
    }
    std::vector<vertex_t> sep_copy = separator;
    auto sub = rest.empty() ? std::vector<std::vector<vertex_t>>{} : components(rest);
    for (auto& c : sub) order_piece(std::move(c));
    out_.insert(out_.end(), sep_copy.begin(), sep_copy.end());
  }

  const Graph& g_;
  Rng rng_;
  NestedDissectionOptions options_;
  std::vector<int> owner_;
  std::vector<char> side_;
  std::vector<int> dist_;
  std::vector<vertex_t> out_;
  int next_id_ = 0;
  int current_ = -1;
};

}  // namespace

EliminationOrdering order_nested_dissection(const Graph& g, std::uint64_t seed, const NestedDissectionOptions& options) {
  if (!(options.balance >= 0.0 && options.balance < 0.5)) throw Error("nested dissection balance must lie in [0, 0.5)");
  EliminationOrdering pi;
  pi.heuristic = "metnnd";
  pi.seed = seed;
  pi.tiebreak = "seeded-root";
  Dissector dissector(g, seed, options);
  pi.order = dissector.run();
  return pi;
}

}  // namespace treescope
