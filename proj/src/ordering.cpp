#include "treescope/ordering.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "bucket_queue.hpp"
#include "treescope/elimination_graph.hpp"
#include "treescope/rng.hpp"

namespace treescope {

Heuristic parse_heuristic(const std::string& name) {
  if (name == "mindeg") return Heuristic::mindeg;
  if (name == "minfill") return Heuristic::minfill;
  if (name == "amd") return Heuristic::amd;
  if (name == "mcs") return Heuristic::mcs;
  if (name == "lexm") return Heuristic::lexm;
  if (name == "metnnd" || name == "nd" || name == "nnd") return Heuristic::nested_dissection;
  throw Error("unknown heuristic '" + name + "'");
}

std::string to_string(Heuristic h) {
  switch (h) {
    case Heuristic::mindeg: return "mindeg";
    case Heuristic::minfill: return "minfill";
    case Heuristic::amd: return "amd";
    case Heuristic::mcs: return "mcs";
    case Heuristic::lexm: return "lexm";
    case Heuristic::nested_dissection: return "metnnd";
  }
  return "unknown";
}

const std::vector<Heuristic>& all_heuristics() {
  static const std::vector<Heuristic> all{Heuristic::mindeg, Heuristic::minfill, Heuristic::amd,
                                          Heuristic::mcs,    Heuristic::lexm,    Heuristic::nested_dissection};
  return all;
}

std::vector<std::size_t> EliminationOrdering::positions() const {
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  return pos;
}

bool is_permutation(const EliminationOrdering& pi, std::size_t n) {
  if (pi.order.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (vertex_t v : pi.order) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

namespace {

constexpr const char* kRandomTies = "uniform-among-minimum";
constexpr const char* kIndexTies = "lowest-index";

const char* tie_tag(TieBreak ties) { return ties == TieBreak::seeded ? "uniform-among-maximum" : kIndexTies; }

EliminationOrdering make_ordering(const char* name, std::uint64_t seed, const char* tiebreak) {
  EliminationOrdering pi;
  pi.heuristic = name;
  pi.seed = seed;
  pi.tiebreak = tiebreak;
  return pi;
}

// Once the remaining graph is complete every order is equivalent; finish in
// seeded random order instead of paying for the clique eliminations.
bool finish_if_clique(const EliminationGraph& eg, Rng& rng, std::vector<vertex_t>& order) {
  if (!eg.remaining_is_clique()) return false;
  auto rest = eg.remaining_vertices();
  rng.shuffle(std::span<vertex_t>(rest));
  order.insert(order.end(), rest.begin(), rest.end());
  return true;
}

}  // namespace

EliminationOrdering order_mindeg(const Graph& g, std::uint64_t seed) {
  auto pi = make_ordering("mindeg", seed, kRandomTies);
  const std::size_t n = g.num_vertices();
  Rng rng = Rng::stream(seed, "mindeg");
  EliminationGraph eg(g);
  detail::BucketQueue queue(n);
  for (std::size_t v = 0; v < n; ++v) queue.set(static_cast<vertex_t>(v), static_cast<std::int64_t>(eg.degree(static_cast<vertex_t>(v))));
  pi.order.reserve(n);
  while (!queue.empty()) {
    if (finish_if_clique(eg, rng, pi.order)) break;
    const vertex_t v = queue.pop_min(rng);
    pi.order.push_back(v);
    for (vertex_t u : eg.eliminate(v)) queue.set(u, static_cast<std::int64_t>(eg.degree(u)));
  }
  return pi;
}

EliminationOrdering order_minfill(const Graph& g, std::uint64_t seed) {
  auto pi = make_ordering("minfill", seed, kRandomTies);
  const std::size_t n = g.num_vertices();
  Rng rng = Rng::stream(seed, "minfill");
  EliminationGraph eg(g);
  detail::BucketQueue queue(n);
  for (std::size_t v = 0; v < n; ++v) queue.set(static_cast<vertex_t>(v), eg.fill_in(static_cast<vertex_t>(v)));

  std::vector<std::uint32_t> touched(n, 0);
  std::uint32_t stamp = 0;
  std::vector<vertex_t> affected;
  pi.order.reserve(n);
  while (!queue.empty()) {
    if (finish_if_clique(eg, rng, pi.order)) break;
    const vertex_t v = queue.pop_min(rng);
    pi.order.push_back(v);
    const auto nbrs = eg.eliminate(v);
    // Fill of w changes only if w lost v, or gained an edge between two of its neighbors.
    ++stamp;
    affected.clear();
    for (vertex_t u : nbrs) {
      if (touched[u] != stamp) {
        touched[u] = stamp;
        affected.push_back(u);
      }
      for (vertex_t w : eg.neighbors(u)) {
        if (touched[w] != stamp) {
          touched[w] = stamp;
          affected.push_back(w);
        }
      }
    }
    for (vertex_t w : affected) queue.set(w, eg.fill_in(w));
  }
  return pi;
}

EliminationOrdering order_amd(const Graph& g, std::uint64_t seed) {
  auto pi = make_ordering("amd", seed, kRandomTies);
  const std::size_t n = g.num_vertices();
  Rng rng = Rng::stream(seed, "amd");

  // Quotient graph: live variables keep their remaining original neighbors
  // in `adj` and the elements (eliminated cliques) they belong to in `elems`.
  // An element is named after the pivot that formed it.
  enum : char { variable, element, absorbed };
  std::vector<char> state(n, variable);
  std::vector<std::vector<vertex_t>> adj(n), elems(n), members(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto nb = g.neighbors(static_cast<vertex_t>(v));
    adj[v].assign(nb.begin(), nb.end());
  }
  std::vector<std::int64_t> w(n, -1);
  std::vector<std::uint32_t> mark(n, 0), wmark(n, 0);
  std::uint32_t stamp = 0;

  detail::BucketQueue queue(n);
  for (std::size_t v = 0; v < n; ++v) queue.set(static_cast<vertex_t>(v), static_cast<std::int64_t>(g.degree(static_cast<vertex_t>(v))));
  std::vector<std::int64_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = static_cast<std::int64_t>(g.degree(static_cast<vertex_t>(v)));

  pi.order.reserve(n);
  std::size_t remaining = n;
  std::vector<vertex_t> lp;
  while (!queue.empty()) {
    const vertex_t p = queue.pop_min(rng);
    pi.order.push_back(p);
    --remaining;

    // New element: everything p reaches through variables or elements.
    ++stamp;
    mark[p] = stamp;
    lp.clear();
    for (vertex_t j : adj[p]) {
      if (state[j] == variable && mark[j] != stamp) {
        mark[j] = stamp;
        lp.push_back(j);
      }
    }
    for (vertex_t e : elems[p]) {
      if (state[e] != element) continue;
      for (vertex_t j : members[e]) {
        if (state[j] == variable && mark[j] != stamp) {
          mark[j] = stamp;
          lp.push_back(j);
        }
      }
      state[e] = absorbed;
      std::vector<vertex_t>().swap(members[e]);
    }
    state[p] = element;
    std::vector<vertex_t>().swap(adj[p]);
    std::vector<vertex_t>().swap(elems[p]);

    if (lp.size() == remaining) {
      // The rest is one clique.
      for (vertex_t j : lp) queue.remove(j);
      rng.shuffle(std::span<vertex_t>(lp));
      pi.order.insert(pi.order.end(), lp.begin(), lp.end());
      break;
    }

    // Prune: neighbors inside the new element are now reached through it.
    for (vertex_t i : lp) {
      auto& a = adj[i];
      a.erase(std::remove_if(a.begin(), a.end(), [&](vertex_t j) { return state[j] != variable || mark[j] == stamp; }),
              a.end());
      auto& es = elems[i];
      es.erase(std::remove_if(es.begin(), es.end(), [&](vertex_t e) { return state[e] != element; }), es.end());
    }

    // w(e) = |L_e \ L_p| for every older element touching L_p.
    const std::uint32_t wstamp = stamp;
    for (vertex_t i : lp) {
      for (vertex_t e : elems[i]) {
        if (wmark[e] != wstamp) {
          wmark[e] = wstamp;
          w[e] = static_cast<std::int64_t>(members[e].size());
        }
        --w[e];
      }
    }

    const auto lsize = static_cast<std::int64_t>(lp.size());
    const auto cap = static_cast<std::int64_t>(remaining) - 1;
    for (vertex_t i : lp) {
      auto& es = elems[i];
      std::int64_t outside = 0;
      std::size_t keep = 0;
      for (vertex_t e : es) {
        if (w[e] == 0) {
          // Aggressive absorption: e lies inside the new element.
          state[e] = absorbed;
          std::vector<vertex_t>().swap(members[e]);
          continue;
        }
        if (state[e] != element) continue;
        outside += w[e];
        es[keep++] = e;
      }
      es.resize(keep);
      es.push_back(p);
      const auto external = static_cast<std::int64_t>(adj[i].size()) + lsize - 1 + outside;
      degree[i] = std::min({cap, degree[i] + lsize - 1, external});
      queue.set(i, degree[i]);
    }
    members[p] = lp;
  }
  return pi;
}

EliminationOrdering order_mcs(const Graph& g, std::uint64_t seed, TieBreak ties) {
  auto pi = make_ordering("mcs", seed, tie_tag(ties));
  const std::size_t n = g.num_vertices();
  Rng rng = Rng::stream(seed, "mcs");
  detail::BucketQueue queue(n);
  for (std::size_t v = 0; v < n; ++v) queue.set(static_cast<vertex_t>(v), 0);
  std::vector<char> visited(n, 0);
  pi.order.reserve(n);
  while (!queue.empty()) {
    const vertex_t v = ties == TieBreak::seeded ? queue.pop_max(rng) : queue.pop_max_lowest();
    visited[v] = 1;
    pi.order.push_back(v);
    for (vertex_t u : g.neighbors(v)) {
      if (!visited[u]) queue.set(u, queue.key(u) + 1);
    }
  }
  std::reverse(pi.order.begin(), pi.order.end());
  return pi;
}

EliminationOrdering order_lexm(const Graph& g, std::uint64_t seed, TieBreak ties) {
  auto pi = make_ordering("lexm", seed, tie_tag(ties));
  const std::size_t n = g.num_vertices();
  Rng rng = Rng::stream(seed, "lexm");

  // Integer ranks stand in for the lexicographic label lists; `raised` marks
  // the half-step increment applied during one search.
  std::vector<std::size_t> label(n, 0);
  std::size_t distinct = 1;
  std::vector<char> numbered(n, 0), reached(n, 0), raised(n, 0);
  std::vector<std::vector<vertex_t>> reach;
  std::vector<vertex_t> candidates, touched;
  std::vector<std::size_t> key_count;
  std::vector<vertex_t> visit(n);

  for (std::size_t step = n; step-- > 0;) {
    candidates.clear();
    std::size_t best = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (numbered[v]) continue;
      if (candidates.empty() || label[v] > best) {
        best = label[v];
        candidates.assign(1, static_cast<vertex_t>(v));
      } else if (label[v] == best) {
        candidates.push_back(static_cast<vertex_t>(v));
      }
    }
    const vertex_t v = ties == TieBreak::seeded ? candidates[rng.below(candidates.size())] : candidates.front();
    numbered[v] = 1;
    visit[step] = v;

    reach.assign(distinct, {});
    touched.clear();
    reached[v] = 1;
    touched.push_back(v);
    for (vertex_t w : g.neighbors(v)) {
      if (numbered[w]) continue;
      reached[w] = 1;
      raised[w] = 1;
      touched.push_back(w);
      reach[label[w]].push_back(w);
    }
    for (std::size_t j = 0; j < distinct; ++j) {
      while (!reach[j].empty()) {
        const vertex_t w = reach[j].back();
        reach[j].pop_back();
        for (vertex_t z : g.neighbors(w)) {
          if (numbered[z] || reached[z]) continue;
          reached[z] = 1;
          touched.push_back(z);
          if (label[z] > j) {
            reach[label[z]].push_back(z);
            raised[z] = 1;
          } else {
            reach[j].push_back(z);
          }
        }
      }
    }
    for (vertex_t w : touched) reached[w] = 0;

    // Re-rank remaining labels: key 2*label + raised, compressed to 0..k-1.
    key_count.assign(2 * distinct, 0);
    for (std::size_t u = 0; u < n; ++u) {
      if (!numbered[u]) key_count[2 * label[u] + raised[u]] = 1;
    }
    std::size_t next_rank = 0;
    for (auto& c : key_count) {
      const bool present = c != 0;
      c = next_rank;
      next_rank += present;
    }
    for (std::size_t u = 0; u < n; ++u) {
      if (!numbered[u]) label[u] = key_count[2 * label[u] + raised[u]];
      raised[u] = 0;
    }
    distinct = std::max<std::size_t>(next_rank, 1);
  }
  // visit[i] holds the vertex numbered i; elimination runs from number 0 up.
  pi.order = std::move(visit);
  return pi;
}

EliminationOrdering compute_ordering(const Graph& g, Heuristic h, std::uint64_t seed, TieBreak ties) {
  switch (h) {
    case Heuristic::mindeg: return order_mindeg(g, seed);
    case Heuristic::minfill: return order_minfill(g, seed);
    case Heuristic::amd: return order_amd(g, seed);
    case Heuristic::mcs: return order_mcs(g, seed, ties);
    case Heuristic::lexm: return order_lexm(g, seed, ties);
    case Heuristic::nested_dissection: return order_nested_dissection(g, seed);
  }
  throw Error("unhandled heuristic");
}

void save_ordering(const Graph& g, const EliminationOrdering& pi, std::ostream& out) {
  for (vertex_t v : pi.order) out << g.label(v) << '\n';
}

EliminationOrdering load_ordering(const Graph& g, std::istream& in) {
  EliminationOrdering pi;
  pi.heuristic = "file";
  pi.tiebreak = "file";
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    auto token = line.substr(first, last - first + 1);
    auto v = g.find(token);
    if (!v) throw ParseError(line_no, "unknown vertex '" + token + "'");
    pi.order.push_back(*v);
  }
  if (!is_permutation(pi, g.num_vertices())) throw Error("ordering is not a permutation of the graph's vertices");
  return pi;
}

}  // namespace treescope
