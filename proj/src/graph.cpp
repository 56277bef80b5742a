#include "treescope/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "treescope/rng.hpp"

namespace treescope {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels,
                        std::size_t* self_loops, std::size_t* duplicates) {
  if (!labels.empty() && labels.size() != n) {
    throw Error("label count does not match vertex count");
  }
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }

  std::size_t loops = 0;
  std::vector<std::size_t> degree(n + 1, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw Error("edge endpoint out of range");
    }
    if (u == v) {
      ++loops;
      continue;
    }
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  std::vector<vertex_t> raw(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    raw[fill[u]++] = v;
    raw[fill[v]++] = u;
  }

  // Sort and deduplicate each list, then compact.
  std::size_t dup_arcs = 0;
  g.targets_.reserve(raw.size());
  std::vector<std::size_t> compact(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    auto unique_end = std::unique(first, last);
    dup_arcs += static_cast<std::size_t>(last - unique_end);
    g.targets_.insert(g.targets_.end(), first, unique_end);
    compact[v + 1] = g.targets_.size();
  }
  g.offsets_ = std::move(compact);
  g.labels_ = std::move(labels);
  g.index_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto [it, inserted] = g.index_.emplace(g.labels_[v], static_cast<vertex_t>(v));
    if (!inserted) throw Error("duplicate vertex label '" + g.labels_[v] + "'");
  }

  if (self_loops) *self_loops = loops;
  if (duplicates) *duplicates = dup_arcs / 2;
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < num_vertices(); ++v) best = std::max(best, degree(static_cast<vertex_t>(v)));
  return best;
}

double Graph::average_degree() const {
  return empty() ? 0.0 : 2.0 * static_cast<double>(num_edges()) / static_cast<double>(num_vertices());
}

bool Graph::has_edge(vertex_t u, vertex_t v) const {
  if (!is_valid_vertex(u) || !is_valid_vertex(v)) return false;
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t Graph::arc_index(vertex_t u, vertex_t v) const {
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  return offsets_[u] + static_cast<std::size_t>(it - nbrs.begin());
}

std::optional<vertex_t> Graph::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (std::size_t u = 0; u < num_vertices(); ++u) {
    for (vertex_t v : neighbors(static_cast<vertex_t>(u))) {
      if (static_cast<vertex_t>(u) < v) out.emplace_back(static_cast<vertex_t>(u), v);
    }
  }
  return out;
}

Graph Graph::induced_subgraph(std::span<const vertex_t> vertices) const {
  std::vector<vertex_t> remap(num_vertices(), -1);
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    remap[vertices[i]] = static_cast<vertex_t>(i);
    labels.push_back(labels_[vertices[i]]);
  }
  std::vector<Edge> sub;
  for (vertex_t u : vertices) {
    for (vertex_t v : neighbors(u)) {
      if (remap[v] >= 0 && u < v) sub.emplace_back(remap[u], remap[v]);
    }
  }
  return from_edges(vertices.size(), sub, std::move(labels));
}

VertexSet::VertexSet(std::size_t n, std::span<const vertex_t> members) : mask_(n, 0) {
  for (vertex_t v : members) insert(v);
}

void VertexSet::insert(vertex_t v) {
  if (v < 0 || static_cast<std::size_t>(v) >= mask_.size()) throw Error("vertex outside set universe");
  if (!mask_[v]) {
    mask_[v] = 1;
    members_.push_back(v);
  }
}

// ---------------------------------------------------------------------------
// I/O

namespace {

struct LabelTable {
  std::unordered_map<std::string, vertex_t> index;
  std::vector<std::string> labels;

  vertex_t intern(const std::string& token) {
    auto [it, inserted] = index.emplace(token, static_cast<vertex_t>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  }
};

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

EdgeListLoad load_edge_list(std::istream& in) {
  LabelTable table;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    auto first = line.find_first_not_of(" \t");
    if (line[first] == '#' || line[first] == '%') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b)) throw ParseError(line_no, "expected two vertex tokens");
    // A third numeric column (weights/timestamps in some dumps) is ignored.
    if (fields >> extra) {
      std::size_t used = 0;
      try {
        (void)std::stod(extra, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      std::string more;
      if (used != extra.size() || (fields >> more)) throw ParseError(line_no, "expected two vertex tokens");
    }
    vertex_t u = table.intern(a);
    vertex_t v = table.intern(b);
    edges.emplace_back(u, v);
  }
  if (table.labels.empty()) throw Error("empty graph: no edges found");
  EdgeListLoad out;
  const std::size_t n = table.labels.size();
  out.graph = Graph::from_edges(n, edges, std::move(table.labels),
                                &out.self_loops_dropped, &out.duplicates_dropped);
  return out;
}

EdgeListLoad load_pace_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    std::istringstream fields(line);
    std::string head;
    fields >> head;
    if (head == "c") continue;
    if (head == "p") {
      std::string kind;
      long long m = 0;
      if (!(fields >> kind >> n >> m) || kind != "tw" || n < 0 || m < 0) {
        throw ParseError(line_no, "malformed 'p tw n m' header");
      }
      continue;
    }
    if (n < 0) throw ParseError(line_no, "edge before 'p tw' header");
    long long u = 0, v = 0;
    std::istringstream edge_fields(line);
    if (!(edge_fields >> u >> v)) throw ParseError(line_no, "expected two vertex ids");
    if (u < 1 || v < 1 || u > n || v > n) throw ParseError(line_no, "vertex id out of range");
    edges.emplace_back(static_cast<vertex_t>(u - 1), static_cast<vertex_t>(v - 1));
  }
  if (n <= 0) throw Error("empty graph: missing or zero-size 'p tw' header");
  std::vector<std::string> labels;
  for (long long i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  EdgeListLoad out;
  out.graph = Graph::from_edges(static_cast<std::size_t>(n), edges, std::move(labels),
                                &out.self_loops_dropped, &out.duplicates_dropped);
  return out;
}

EdgeListLoad load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".gr") == 0) return load_pace_graph(in);
  return load_edge_list(in);
}

void save_edge_list(const Graph& g, std::ostream& out) {
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

void save_pace_graph(const Graph& g, std::ostream& out) {
  out << "p tw " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << (u + 1) << ' ' << (v + 1) << '\n';
}

// ---------------------------------------------------------------------------
// Traversal and metrics

std::vector<vertex_t> connected_components(const Graph& g, std::size_t* count) {
  const std::size_t n = g.num_vertices();
  std::vector<vertex_t> comp(n, -1);
  std::vector<vertex_t> stack;
  vertex_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(static_cast<vertex_t>(s));
    while (!stack.empty()) {
      vertex_t u = stack.back();
      stack.pop_back();
      for (vertex_t w : g.neighbors(u)) {
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = static_cast<std::size_t>(next);
  return comp;
}

bool is_connected(const Graph& g) {
  std::size_t count = 0;
  connected_components(g, &count);
  return count <= 1;
}

Graph giant_component(const Graph& g) {
  std::size_t count = 0;
  auto comp = connected_components(g, &count);
  if (count <= 1) return g;
  std::vector<std::size_t> sizes(count, 0);
  for (vertex_t c : comp) ++sizes[c];
  // Components are numbered by smallest member, so the first maximum wins ties.
  auto best = static_cast<vertex_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<vertex_t> keep;
  keep.reserve(sizes[best]);
  for (std::size_t v = 0; v < comp.size(); ++v) {
    if (comp[v] == best) keep.push_back(static_cast<vertex_t>(v));
  }
  return g.induced_subgraph(keep);
}

std::vector<std::int32_t> bfs_distances(const Graph& g, vertex_t source) {
  if (!g.is_valid_vertex(source)) throw Error("invalid vertex id " + std::to_string(source));
  std::vector<std::int32_t> dist(g.num_vertices(), kUnreachable);
  std::vector<vertex_t> queue;
  queue.reserve(g.num_vertices());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    vertex_t u = queue[head];
    for (vertex_t w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

namespace {

void require_connected(const Graph& g, const char* what) {
  if (g.empty()) throw Error(std::string(what) + ": empty graph");
  if (!is_connected(g)) {
    throw Error(std::string(what) + " requires a connected graph; take giant_component first");
  }
}

}  // namespace

std::int32_t eccentricity(const Graph& g, vertex_t v) {
  require_connected(g, "eccentricity");
  auto dist = bfs_distances(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

std::int32_t diameter(const Graph& g, std::size_t sample_sources, std::uint64_t seed) {
  require_connected(g, "diameter");
  const std::size_t n = g.num_vertices();
  std::vector<vertex_t> sources(n);
  std::iota(sources.begin(), sources.end(), 0);
  if (sample_sources > 0 && sample_sources < n) {
    Rng rng = Rng::stream(seed, "diameter");
    rng.shuffle(std::span<vertex_t>(sources));
    sources.resize(sample_sources);
  }
  std::int32_t best = 0;
  for (vertex_t s : sources) {
    auto dist = bfs_distances(g, s);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

double local_clustering(const Graph& g, vertex_t v) {
  auto nbrs = g.neighbors(v);
  const std::size_t d = nbrs.size();
  if (d < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t i = 0; i < d; ++i) {
    auto other = g.neighbors(nbrs[i]);
    // Count neighbors of nbrs[i] that are also neighbors of v and come later.
    auto a = nbrs.begin() + static_cast<std::ptrdiff_t>(i + 1);
    auto b = std::lower_bound(other.begin(), other.end(), *a);
    while (a != nbrs.end() && b != other.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++links;
        ++a;
        ++b;
      }
    }
  }
  return 2.0 * static_cast<double>(links) / (static_cast<double>(d) * static_cast<double>(d - 1));
}

double average_clustering(const Graph& g) {
  if (g.empty()) return 0.0;
  double total = 0.0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) total += local_clustering(g, static_cast<vertex_t>(v));
  return total / static_cast<double>(g.num_vertices());
}

std::size_t cut_size(const Graph& g, const VertexSet& s) {
  std::size_t cut = 0;
  for (vertex_t u : s.members()) {
    for (vertex_t w : g.neighbors(u)) {
      if (!s.contains(w)) ++cut;
    }
  }
  return cut;
}

std::size_t volume(const Graph& g, const VertexSet& s) {
  std::size_t vol = 0;
  for (vertex_t u : s.members()) vol += g.degree(u);
  return vol;
}

double conductance(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw Error("conductance of an empty set is undefined");
  if (s.size() >= g.num_vertices()) throw Error("conductance of the full vertex set is undefined");
  const std::size_t vol_s = volume(g, s);
  const std::size_t vol_rest = 2 * g.num_edges() - vol_s;
  const std::size_t denom = std::min(vol_s, vol_rest);
  if (denom == 0) throw Error("conductance undefined: one side has zero volume");
  return static_cast<double>(cut_size(g, s)) / static_cast<double>(denom);
}

}  // namespace treescope
