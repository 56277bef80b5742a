#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "treescope/analysis.hpp"
#include "treescope/parallel.hpp"
#include "treescope/rng.hpp"

namespace treescope {

PprResult ppr_push(const Graph& g, vertex_t seed, double alpha, double epsilon, bool track_mass) {
  if (!g.is_valid_vertex(seed)) throw Error("ppr: invalid seed vertex " + std::to_string(seed));
  if (g.degree(seed) == 0) throw Error("ppr: seed vertex " + g.label(seed) + " is isolated");
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error("ppr: alpha must lie in (0, 1)");
  if (!(epsilon > 0.0)) throw Error("ppr: epsilon must be positive");

  const std::size_t n = g.num_vertices();
  PprResult out;
  out.ppr.assign(n, 0.0);
  out.residual.assign(n, 0.0);
  std::vector<char> queued(n, 0), touched(n, 0);
  std::vector<vertex_t> queue{seed}, touched_list{seed};
  out.residual[seed] = 1.0;
  queued[seed] = 1;
  touched[seed] = 1;

  auto over = [&](vertex_t u) { return out.residual[u] >= epsilon * static_cast<double>(g.degree(u)); };

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const vertex_t u = queue[head];
    queued[u] = 0;
    if (!over(u)) continue;
    const double r = out.residual[u];
    const double d = static_cast<double>(g.degree(u));
    out.ppr[u] += alpha * r;
    out.residual[u] = (1.0 - alpha) * r / 2.0;
    const double share = (1.0 - alpha) * r / (2.0 * d);
    for (vertex_t w : g.neighbors(u)) {
      out.residual[w] += share;
      if (!touched[w]) {
        touched[w] = 1;
        touched_list.push_back(w);
      }
      if (!queued[w] && over(w)) {
        queued[w] = 1;
        queue.push_back(w);
      }
    }
    if (!queued[u] && over(u)) {
      queued[u] = 1;
      queue.push_back(u);
    }
    ++out.pushes;
    if (track_mass) {
      double total = 0.0;
      for (vertex_t v : touched_list) total += out.ppr[v] + out.residual[v];
      out.max_mass_error = std::max(out.max_mass_error, std::abs(total - 1.0));
    }
    // Periodically compact the processed prefix so the queue stays small.
    if (head > 4096 && head * 2 > queue.size()) {
      queue.erase(queue.begin(), queue.begin() + static_cast<std::ptrdiff_t>(head + 1));
      head = static_cast<std::size_t>(-1);
    }
  }
  for (vertex_t v : touched_list) {
    if (out.ppr[v] > 0.0) out.support.push_back(v);
  }
  return out;
}

SweepResult sweep_cut(const Graph& g, std::vector<vertex_t> order) {
  SweepResult out;
  const std::size_t n = g.num_vertices();
  const std::size_t total_volume = 2 * g.num_edges();
  std::vector<char> in_set(n, 0);
  std::size_t vol = 0;
  long long cut = 0;
  double best = std::numeric_limits<double>::infinity();
  const std::size_t limit = std::min(order.size(), n / 2);
  out.conductance.assign(order.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 0; i < limit; ++i) {
    const vertex_t u = order[i];
    in_set[u] = 1;
    vol += g.degree(u);
    long long inside = 0;
    for (vertex_t w : g.neighbors(u)) inside += in_set[w];
    cut += static_cast<long long>(g.degree(u)) - 2 * inside;
    const std::size_t denom = std::min(vol, total_volume - vol);
    if (denom == 0) continue;
    const double phi = static_cast<double>(cut) / static_cast<double>(denom);
    out.conductance[i] = phi;
    if (phi < best) {
      best = phi;
      out.best = i;
      out.found = true;
    }
  }
  out.order = std::move(order);
  return out;
}

NCPPoint ppr_cluster(const Graph& g, vertex_t seed_vertex, double alpha, double epsilon) {
  auto pr = ppr_push(g, seed_vertex, alpha, epsilon);
  std::vector<vertex_t> order = pr.support;
  std::sort(order.begin(), order.end(), [&](vertex_t a, vertex_t b) {
    const double sa = pr.ppr[a] / static_cast<double>(g.degree(a));
    const double sb = pr.ppr[b] / static_cast<double>(g.degree(b));
    return sa != sb ? sa > sb : a < b;
  });
  auto sweep = sweep_cut(g, std::move(order));

  NCPPoint point;
  point.seed_vertex = seed_vertex;
  point.alpha = alpha;
  point.epsilon = epsilon;
  if (!sweep.found) {
    // Support never reached a valid prefix (e.g. n = 2): the seed alone.
    point.members = {seed_vertex};
    point.size = 1;
    point.conductance = 1.0;
    return point;
  }
  point.members.assign(sweep.order.begin(), sweep.order.begin() + static_cast<std::ptrdiff_t>(sweep.best + 1));
  std::sort(point.members.begin(), point.members.end());
  point.size = point.members.size();
  point.conductance = sweep.conductance[sweep.best];
  return point;
}

std::size_t ncp_bin(std::size_t size) {
  if (size <= 1) return 0;
  return static_cast<std::size_t>(std::floor(10.0 * std::log10(static_cast<double>(size)) + 1e-9));
}

std::vector<NCPPoint> ncp(const Graph& g, const NcpOptions& options) {
  std::vector<vertex_t> seeds = options.seeds;
  if (seeds.empty()) {
    std::vector<vertex_t> all(g.num_vertices());
    std::iota(all.begin(), all.end(), 0);
    Rng rng = Rng::stream(options.seed, "ncp");
    rng.shuffle(std::span<vertex_t>(all));
    all.resize(std::min(all.size(), options.max_seeds));
    std::sort(all.begin(), all.end());
    seeds = std::move(all);
  }
  seeds.erase(std::remove_if(seeds.begin(), seeds.end(), [&](vertex_t v) { return g.degree(v) == 0; }), seeds.end());

  struct Task {
    vertex_t seed;
    double alpha;
    double epsilon;
  };
  std::vector<Task> tasks;
  for (vertex_t s : seeds) {
    for (double a : options.alphas) {
      for (double e : options.epsilons) tasks.push_back({s, a, e});
    }
  }
  std::vector<NCPPoint> results(tasks.size());
  parallel_for(tasks.size(), options.threads,
               [&](std::size_t i) { results[i] = ppr_cluster(g, tasks[i].seed, tasks[i].alpha, tasks[i].epsilon); });

  // Deterministic reduction in task order.
  std::map<std::size_t, NCPPoint> envelope;
  for (auto& r : results) {
    auto [it, inserted] = envelope.try_emplace(ncp_bin(r.size), r);
    if (inserted) continue;
    auto& cur = it->second;
    if (r.conductance < cur.conductance || (r.conductance == cur.conductance && r.size < cur.size)) cur = std::move(r);
  }
  std::vector<NCPPoint> out;
  out.reserve(envelope.size());
  for (auto& [bin, point] : envelope) out.push_back(std::move(point));
  return out;
}

}  // namespace treescope
