#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "treescope/graph.hpp"

namespace treescope {

enum class Heuristic { mindeg, minfill, amd, mcs, lexm, nested_dissection };

/// Accepts "nd" and "metnnd" as aliases for nested dissection.
Heuristic parse_heuristic(const std::string& name);
std::string to_string(Heuristic h);
const std::vector<Heuristic>& all_heuristics();

/// A permutation of the vertices; `order[i]` is eliminated at step i.
struct EliminationOrdering {
  std::vector<vertex_t> order;
  std::string heuristic;
  std::uint64_t seed = 0;
  std::string tiebreak;

  std::size_t size() const noexcept { return order.size(); }
  /// position[v] = step at which v is eliminated.
  std::vector<std::size_t> positions() const;
};

bool is_permutation(const EliminationOrdering& pi, std::size_t n);

struct NestedDissectionOptions {
  std::size_t leaf_threshold = 64;
  double balance = 0.2;
};

/// Greedy minimum degree with exact degrees; ties uniform among the minimum bucket.
EliminationOrdering order_mindeg(const Graph& g, std::uint64_t seed);
/// Greedy minimum fill; fill counts of vertices near each elimination are recomputed.
EliminationOrdering order_minfill(const Graph& g, std::uint64_t seed);
/// Minimum degree keyed on lazily maintained degree upper bounds.
EliminationOrdering order_amd(const Graph& g, std::uint64_t seed);
/// How mcs and lexm choose among vertices sharing the extreme label. The
/// greedy heuristics always draw uniformly among their minima.
enum class TieBreak { lowest_index, seeded };

/// Maximum cardinality search; elimination order is the reverse visit order.
EliminationOrdering order_mcs(const Graph& g, std::uint64_t seed, TieBreak ties = TieBreak::lowest_index);
/// LEX M (Rose, Tarjan, Lueker); yields a minimal triangulation.
EliminationOrdering order_lexm(const Graph& g, std::uint64_t seed, TieBreak ties = TieBreak::lowest_index);
EliminationOrdering order_nested_dissection(const Graph& g, std::uint64_t seed,
                                            const NestedDissectionOptions& options = {});

EliminationOrdering compute_ordering(const Graph& g, Heuristic h, std::uint64_t seed,
                                     TieBreak ties = TieBreak::lowest_index);

/// One vertex label per line in elimination order; '#' lines are comments.
void save_ordering(const Graph& g, const EliminationOrdering& pi, std::ostream& out);
EliminationOrdering load_ordering(const Graph& g, std::istream& in);

}  // namespace treescope
