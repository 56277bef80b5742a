#include <cmath>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "treescope/analysis.hpp"
#include "treescope/generators.hpp"
#include "treescope/kcore.hpp"
#include "treescope/ordering.hpp"
#include "treescope/treedecomp.hpp"

using namespace treescope;

namespace {

// K_5 on 0..4 hanging off a 30-cycle through the edge (4, 5).
Graph clique_with_ring() {
  std::vector<Edge> edges;
  for (vertex_t i = 0; i < 5; ++i) {
    for (vertex_t j = i + 1; j < 5; ++j) edges.emplace_back(i, j);
  }
  for (vertex_t i = 5; i < 34; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(34, 5);
  edges.emplace_back(4, 5);
  return Graph::from_edges(35, edges);
}

// Clique on `core` vertices plus a path of `tail` vertices hanging off vertex 0.
Graph clique_with_tail(std::size_t core, std::size_t tail) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < core; ++i) {
    for (std::size_t j = i + 1; j < core; ++j) edges.emplace_back(static_cast<vertex_t>(i), static_cast<vertex_t>(j));
  }
  vertex_t prev = 0;
  for (std::size_t t = 0; t < tail; ++t) {
    const auto v = static_cast<vertex_t>(core + t);
    edges.emplace_back(prev, v);
    prev = v;
  }
  return Graph::from_edges(core + tail, edges);
}

}  // namespace

TEST_CASE("ppr push conserves mass") {
  Graph g = giant_component(oracle::random_graph(300, 0.02, 3));
  for (double alpha : {0.01, 0.1, 0.5}) {
    for (double eps : {1e-3, 1e-5}) {
      auto r = ppr_push(g, 0, alpha, eps, true);
      CHECK(r.max_mass_error <= 1e-9);
      double total = 0;
      for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        total += r.ppr[v] + r.residual[v];
        CHECK(r.residual[v] < eps * static_cast<double>(g.degree(static_cast<vertex_t>(v))) + 1e-15);
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("ppr support holds positive mass only") {
  Graph g = gen_grid(6, 6);
  auto r = ppr_push(g, 14, 0.1, 1e-4);
  for (vertex_t v : r.support) CHECK(r.ppr[v] > 0.0);
  std::size_t positive = 0;
  for (double p : r.ppr) positive += p > 0.0;
  CHECK(positive == r.support.size());
  CHECK_THROWS_AS(ppr_push(g, 99, 0.1, 1e-4), Error);
}

TEST_CASE("sweep picks the minimum-conductance prefix") {
  Graph g = giant_component(oracle::random_graph(120, 0.04, 6));
  auto r = ppr_push(g, 0, 0.05, 1e-5);
  auto sweep = sweep_cut(g, r.support);
  REQUIRE(sweep.found);
  double best = 2.0;
  for (std::size_t i = 0; i < sweep.order.size(); ++i) {
    if (std::isnan(sweep.conductance[i])) continue;
    std::vector<vertex_t> prefix(sweep.order.begin(), sweep.order.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    CHECK(sweep.conductance[i] == doctest::Approx(oracle::conductance_of(g, prefix)));
    best = std::min(best, sweep.conductance[i]);
  }
  CHECK(sweep.conductance[sweep.best] == best);
}

TEST_CASE("clique with a ring") {
  Graph g = clique_with_ring();
  auto p = ppr_cluster(g, 0, 0.1, 1e-6);
  CHECK(p.size == 5);
  CHECK(p.conductance == doctest::Approx(1.0 / 21.0));
}

TEST_CASE("two cliques joined by an edge") {
  Graph g = oracle::two_cliques(10);
  auto points = ncp(g);
  const auto bin = ncp_bin(10);
  auto it = std::find_if(points.begin(), points.end(), [&](const NCPPoint& p) { return ncp_bin(p.size) == bin; });
  REQUIRE(it != points.end());
  CHECK(it->size == 10);
  CHECK(it->conductance == doctest::Approx(1.0 / 91.0));

  auto td = gavril_td(g, order_mindeg(g, 0));
  std::vector<NCPPoint> chosen{*it};
  auto rows = localize(td, chosen, g.num_vertices());
  CHECK(rows[0].bag_count <= 2);
  CHECK(rows[0].bag_count == oracle::bags_touching(td, it->members));
  CHECK(rows[0].localized);
}

TEST_CASE("tree whisker is spread over many bags") {
  Graph g = clique_with_tail(12, 8);
  auto td = gavril_td(g, order_mindeg(g, 0));
  std::vector<vertex_t> whisker;
  for (vertex_t v = 12; v < 20; ++v) whisker.push_back(v);
  NCPPoint p;
  p.members = whisker;
  p.size = whisker.size();
  p.conductance = conductance(g, VertexSet(20, whisker));
  auto rows = localize(td, std::vector<NCPPoint>{p}, 20);
  CHECK(rows[0].bag_count >= 7);
  CHECK_FALSE(rows[0].localized);
}

TEST_CASE("localization agrees with the brute-force count") {
  Graph g = giant_component(oracle::random_graph(200, 0.02, 12));
  auto td = gavril_td(g, order_amd(g, 0));
  NcpOptions opt;
  opt.max_seeds = 30;
  opt.epsilons = {1e-3, 1e-4};
  auto points = ncp(g, opt);
  auto rows = localize(td, points, g.num_vertices());
  REQUIRE(rows.size() == points.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].bag_count == oracle::bags_touching(td, points[i].members));
    CHECK(rows[i].threshold == points[i].members.size());
    CHECK(rows[i].localized == (rows[i].bag_count < rows[i].threshold));
  }
}

TEST_CASE("ncp bins and thread independence") {
  CHECK(ncp_bin(1) == 0);
  CHECK(ncp_bin(10) == 10);
  CHECK(ncp_bin(100) == 20);
  CHECK(ncp_bin(99) == 19);

  Graph g = giant_component(gen_er(1500, 1.6 / 1500, 4));
  NcpOptions opt;
  opt.max_seeds = 40;
  opt.epsilons = {1e-3, 1e-4};
  auto one = ncp(g, opt);
  opt.threads = 4;
  auto four = ncp(g, opt);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].members == four[i].members);
    CHECK(one[i].conductance == four[i].conductance);
    CHECK(one[i].seed_vertex == four[i].seed_vertex);
  }
  for (std::size_t i = 1; i < one.size(); ++i) CHECK(ncp_bin(one[i - 1].size) < ncp_bin(one[i].size));
}

TEST_CASE("spearman") {
  const std::vector<double> x{1, 2, 3, 4, 5};
  const std::vector<double> up{2, 4, 6, 8, 100};
  const std::vector<double> down{5, 4, 3, 2, 1};
  const std::vector<double> flat{7, 7, 7, 7, 7};
  CHECK(spearman(x, up) == doctest::Approx(1.0));
  CHECK(spearman(x, down) == doctest::Approx(-1.0));
  CHECK(spearman(x, flat) == 0.0);
  // Ties take average ranks: y ranks 1.5, 1.5, 3, 4, 5.
  const std::vector<double> tied{1, 1, 2, 3, 4};
  CHECK(spearman(x, tied) == doctest::Approx(0.9746794344808963));
}

TEST_CASE("bag profiles") {
  Graph g = giant_component(oracle::random_graph(150, 0.03, 2));
  auto cores = k_core(g);
  auto td = gavril_td(g, order_mindeg(g, 0));
  auto prof = bag_profiles(g, td, cores);
  REQUIRE_FALSE(prof.cardinality.empty());
  std::size_t total = 0;
  for (std::size_t i = 0; i < prof.cardinality.size(); ++i) {
    total += prof.cardinality[i].count;
    if (i > 0) CHECK(prof.cardinality[i - 1].cardinality < prof.cardinality[i].cardinality);
  }
  CHECK(total == td.num_bags());
  CHECK(prof.cardinality.back().cumulative_fraction == doctest::Approx(1.0));
  for (const auto& d : prof.density) {
    CHECK(d.mean_density >= 0.0);
    CHECK(d.mean_density <= 1.0);
  }
  std::size_t bags = 0;
  for (const auto& c : prof.core_by_eccentricity) bags += c.bags;
  CHECK(bags == td.num_bags());
}

TEST_CASE("community table") {
  Graph g = oracle::two_cliques(4);
  std::istringstream in("# node\tlabel\n0\ta\n1\ta\n7\tb\nghost\ta\n");
  std::size_t skipped = 0;
  auto table = CommunityTable::load_tsv(in, g, &skipped);
  CHECK(skipped == 1);
  auto a = table.label_id("a");
  REQUIRE(a);
  CHECK(table.count(*a) == 2);
  CHECK(table.fraction(*a) == doctest::Approx(0.25));
  CHECK_FALSE(table.label_id("zzz"));
}

TEST_CASE("frequent bag classifier") {
  SUBCASE("planted clique whisker") {
    Graph base = oracle::random_connected_graph(120, 0.03, 4);
    auto edges = base.edges();
    for (vertex_t i = 120; i < 128; ++i) {
      for (vertex_t j = i + 1; j < 128; ++j) edges.emplace_back(i, j);
    }
    edges.emplace_back(5, 120);
    Graph g = Graph::from_edges(128, edges);
    CommunityTable table(128);
    for (vertex_t v = 120; v < 128; ++v) table.assign(v, "planted");
    auto td = gavril_td(g, order_amd(g, 0));
    auto r = frequent_bag_classifier(g, td, table, "planted");
    CHECK(r.recall == doctest::Approx(1.0));
    CHECK(r.precision >= 0.8);
    CHECK(r.global_fraction == doctest::Approx(8.0 / 128.0));
  }
  SUBCASE("every vertex labeled: nothing is above the global fraction") {
    Graph g = gen_grid(4, 4);
    CommunityTable table(16);
    for (vertex_t v = 0; v < 16; ++v) table.assign(v, "all");
    auto r = frequent_bag_classifier(g, gavril_td(g, order_mcs(g, 0)), table, "all");
    CHECK(r.frequent_bags == 0);
    CHECK(r.recall == 0.0);
  }
  SUBCASE("single labeled vertex") {
    Graph g = gen_cycle(12);
    CommunityTable table(12);
    table.assign(3, "one");
    auto r = frequent_bag_classifier(g, gavril_td(g, order_mindeg(g, 0)), table, "one");
    CHECK(r.recall == doctest::Approx(1.0));
    CHECK(r.frequent_bags >= 1);
  }
  SUBCASE("unknown label") {
    Graph g = gen_cycle(5);
    CommunityTable table(5);
    CHECK_THROWS_AS(frequent_bag_classifier(g, gavril_td(g, order_mindeg(g, 0)), table, "x"), Error);
  }
}
