#pragma once

#include <cstdint>
#include <vector>

#include "treescope/graph.hpp"

namespace treescope {

/// Working copy of a graph during vertex elimination.
///
/// Eliminating v turns its remaining neighborhood into a clique and removes v.
/// Up to kDenseLimit vertices, rows are bitsets (elimination costs
/// O(deg * n / 64)); above that, rows are unsorted vectors merged with a
/// marker array. Degrees are exact in both modes.
class EliminationGraph {
 public:
  explicit EliminationGraph(const Graph& g);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t remaining() const noexcept { return remaining_; }
  bool eliminated(vertex_t v) const { return !alive_[v]; }
  std::size_t degree(vertex_t v) const { return degree_[v]; }
  bool adjacent(vertex_t u, vertex_t v) const;

  /// Remaining neighbors of v.
  std::vector<vertex_t> neighbors(vertex_t v) const;

  /// Fill edges eliminating v would add right now.
  std::int64_t fill_in(vertex_t v) const;

  /// Eliminates v; returns its neighborhood at elimination time.
  std::vector<vertex_t> eliminate(vertex_t v);

  /// Remaining vertices are pairwise adjacent (includes 0 or 1 remaining).
  bool remaining_is_clique() const noexcept {
    return 2 * edges_ == static_cast<std::int64_t>(remaining_) * static_cast<std::int64_t>(remaining_ - (remaining_ > 0));
  }

  std::vector<vertex_t> remaining_vertices() const;

  static constexpr std::size_t kDenseLimit = 16384;

 private:
  std::uint32_t next_stamp() const;
  const std::uint64_t* row(vertex_t v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  std::uint64_t* row(vertex_t v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }

  std::size_t n_ = 0;
  std::size_t remaining_ = 0;
  std::int64_t edges_ = 0;
  bool dense_ = false;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<vertex_t>> lists_;
  std::vector<char> alive_;
  std::vector<std::size_t> degree_;
  mutable std::vector<std::uint32_t> mark_;
  mutable std::uint32_t stamp_ = 0;
};

}  // namespace treescope
