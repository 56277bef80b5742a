#include "treescope/elimination_graph.hpp"

#include <algorithm>
#include <bit>

namespace treescope {

EliminationGraph::EliminationGraph(const Graph& g)
    : n_(g.num_vertices()),
      remaining_(g.num_vertices()),
      edges_(static_cast<std::int64_t>(g.num_edges())),
      dense_(g.num_vertices() <= kDenseLimit),
      alive_(g.num_vertices(), 1),
      degree_(g.num_vertices()) {
  if (dense_) {
    words_ = (n_ + 63) / 64;
    bits_.assign(n_ * words_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      auto* r = row(static_cast<vertex_t>(v));
      for (vertex_t u : g.neighbors(static_cast<vertex_t>(v))) r[u >> 6] |= std::uint64_t{1} << (u & 63);
    }
  } else {
    lists_.resize(n_);
    mark_.assign(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      auto nbrs = g.neighbors(static_cast<vertex_t>(v));
      lists_[v].assign(nbrs.begin(), nbrs.end());
    }
  }
  for (std::size_t v = 0; v < n_; ++v) degree_[v] = g.degree(static_cast<vertex_t>(v));
}

std::uint32_t EliminationGraph::next_stamp() const {
  if (++stamp_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    stamp_ = 1;
  }
  return stamp_;
}

bool EliminationGraph::adjacent(vertex_t u, vertex_t v) const {
  if (dense_) return (row(u)[v >> 6] >> (v & 63)) & 1;
  const auto& a = lists_[u].size() <= lists_[v].size() ? lists_[u] : lists_[v];
  const vertex_t target = &a == &lists_[u] ? v : u;
  return std::find(a.begin(), a.end(), target) != a.end();
}

std::vector<vertex_t> EliminationGraph::neighbors(vertex_t v) const {
  if (!dense_) return lists_[v];
  std::vector<vertex_t> out;
  out.reserve(degree_[v]);
  const auto* r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(static_cast<vertex_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

std::int64_t EliminationGraph::fill_in(vertex_t v) const {
  const auto d = static_cast<std::int64_t>(degree_[v]);
  std::int64_t twice_inner = 0;
  if (dense_) {
    const auto* rv = row(v);
    for (vertex_t u : neighbors(v)) {
      const auto* ru = row(u);
      for (std::size_t w = 0; w < words_; ++w) twice_inner += std::popcount(ru[w] & rv[w]);
    }
  } else {
    const std::uint32_t s = next_stamp();
    for (vertex_t u : lists_[v]) mark_[u] = s;
    for (vertex_t u : lists_[v]) {
      for (vertex_t x : lists_[u]) twice_inner += mark_[x] == s;
    }
  }
  return d * (d - 1) / 2 - twice_inner / 2;
}

std::vector<vertex_t> EliminationGraph::eliminate(vertex_t v) {
  std::vector<vertex_t> nbrs = neighbors(v);
  std::int64_t degree_gain = 0;
  if (dense_) {
    const auto* rv = row(v);
    for (vertex_t u : nbrs) {
      auto* ru = row(u);
      std::size_t deg = 0;
      for (std::size_t w = 0; w < words_; ++w) {
        ru[w] |= rv[w];
      }
      ru[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
      ru[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
      for (std::size_t w = 0; w < words_; ++w) deg += static_cast<std::size_t>(std::popcount(ru[w]));
      degree_gain += static_cast<std::int64_t>(deg) - static_cast<std::int64_t>(degree_[u] - 1);
      degree_[u] = deg;
    }
    std::fill(row(v), row(v) + words_, 0);
  } else {
    for (vertex_t u : nbrs) {
      auto& list = lists_[u];
      auto it = std::find(list.begin(), list.end(), v);
      *it = list.back();
      list.pop_back();
      const std::uint32_t s = next_stamp();
      for (vertex_t x : list) mark_[x] = s;
      const std::size_t before = list.size();
      for (vertex_t x : nbrs) {
        if (x != u && mark_[x] != s) list.push_back(x);
      }
      degree_gain += static_cast<std::int64_t>(list.size() - before);
      degree_[u] = list.size();
    }
    lists_[v].clear();
    lists_[v].shrink_to_fit();
  }
  edges_ += degree_gain / 2 - static_cast<std::int64_t>(nbrs.size());
  degree_[v] = 0;
  alive_[v] = 0;
  --remaining_;
  return nbrs;
}

std::vector<vertex_t> EliminationGraph::remaining_vertices() const {
  std::vector<vertex_t> out;
  out.reserve(remaining_);
  for (std::size_t v = 0; v < n_; ++v) {
    if (alive_[v]) out.push_back(static_cast<vertex_t>(v));
  }
  return out;
}

}  // namespace treescope
