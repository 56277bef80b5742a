// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "treescope/analysis.hpp"
#include "treescope/cli.hpp"
#include "treescope/exact_treewidth.hpp"
#include "treescope/generators.hpp"
#include "treescope/hyperbolicity.hpp"
#include "treescope/kcore.hpp"
#include "treescope/ordering.hpp"
#include "treescope/treedecomp.hpp"

using namespace treescope;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
};

std::string fmt(double x, int digits = 4) {
  std::ostringstream s;
  s.precision(digits);
  s << x;
  return s.str();
}

std::size_t width(const Graph& g, Heuristic h, std::uint64_t seed = 0) {
  return triangulate(g, compute_ordering(g, h, seed)).width();
}

double median_width(const Graph& g, Heuristic h, std::uint64_t seed = 0) {
  const auto td = gavril_td(g, compute_ordering(g, h, seed));
  return td_stats(g, td, k_core(g)).width_median;
}

Outcome toy_widths() {
  Outcome o;
  Graph tree = gen_binary_tree(6);
  for (Heuristic h : {Heuristic::mindeg, Heuristic::minfill, Heuristic::mcs, Heuristic::lexm}) {
    const auto w = width(tree, h);
    o.check(w == 1, "binary tree (127) " + to_string(h) + " width " + std::to_string(w) + " == 1");
  }
  Graph c10 = gen_cycle(10);
  Graph k100 = gen_clique(100);
  for (Heuristic h : all_heuristics()) {
    const auto w = width(c10, h);
    o.check(w == 2, "C_10 " + to_string(h) + " width " + std::to_string(w) + " == 2 (cardinality " + std::to_string(w + 1) + ")");
    const auto td = gavril_td(k100, compute_ordering(k100, h, 0));
    o.check(td.num_bags() == 1 && td.max_cardinality() == 100,
            "K_100 " + to_string(h) + " bags " + std::to_string(td.num_bags()) + ", cardinality " +
                std::to_string(td.max_cardinality()));
  }
  Graph grid = gen_grid(10, 10);
  for (Heuristic h : {Heuristic::lexm, Heuristic::mcs}) {
    const auto w = width(grid, h);
    o.check(w >= 9 && w <= 11, "grid 10x10 " + to_string(h) + " width " + std::to_string(w) + " in 10 +- 1");
  }
  for (Heuristic h : {Heuristic::mindeg, Heuristic::minfill}) {
    const auto w = width(grid, h);
    o.check(w <= 16, "grid 10x10 " + to_string(h) + " width " + std::to_string(w) + " <= 16");
  }
  const auto nd = width(grid, Heuristic::nested_dissection);
  o.check(nd <= 20, "grid 10x10 metnnd width " + std::to_string(nd) + " <= 20");

  double greedy = 0, chordal = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Graph g = gen_er(100, 0.5, seed);
    greedy += static_cast<double>(width(g, Heuristic::mindeg, seed) + width(g, Heuristic::minfill, seed)) / 10.0;
    chordal += static_cast<double>(width(g, Heuristic::lexm, seed) + width(g, Heuristic::mcs, seed)) / 10.0;
  }
  o.check(std::abs(greedy - 86.0) <= 8.6, "SmallER mean greedy width " + fmt(greedy) + " within 86 +- 10%");
  o.check(greedy <= chordal, "SmallER mean greedy " + fmt(greedy) + " <= mean lexm/mcs " + fmt(chordal));
  return o;
}

Outcome median_widths() {
  Outcome o;
  Graph grid = gen_grid(10, 10);
  for (Heuristic h : {Heuristic::mindeg, Heuristic::minfill}) {
    const double m = median_width(grid, h);
    o.check(m <= 6, "grid 10x10 " + to_string(h) + " median width " + fmt(m) + " <= 6");
  }
  const double lexm = median_width(grid, Heuristic::lexm);
  o.check(lexm >= 7, "grid 10x10 lexm median width " + fmt(lexm) + " >= 7");

  Graph sparse = giant_component(gen_er(5000, 1.6 / 5000, 0));
  auto s = td_stats(sparse, gavril_td(sparse, order_amd(sparse, 0)), k_core(sparse));
  o.check(s.cardinality_median <= 3, "ER(1.6)+amd median cardinality " + fmt(s.cardinality_median) + " <= 3");
  o.check(s.density_median >= 0.9, "ER(1.6)+amd median density " + fmt(s.density_median) + " >= 0.9");

  Graph dense = giant_component(gen_er(5000, 32.0 / 5000, 0));
  auto d = td_stats(dense, gavril_td(dense, order_amd(dense, 0)), k_core(dense));
  const double share = static_cast<double>(d.cardinality_max) / static_cast<double>(dense.num_vertices());
  o.check(share >= 0.5, "ER(32)+amd max bag " + std::to_string(d.cardinality_max) + " = " + fmt(100 * share, 3) +
                            "% of nodes >= 50%");
  o.check(d.density_median <= 0.15, "ER(32)+amd median density " + fmt(d.density_median) + " <= 0.15");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t invalid = 0, below = 0, dp_mismatch = 0, checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 4 + seed % 9;
    Graph g = oracle::random_connected_graph(n, 0.15 + 0.05 * static_cast<double>(seed % 7), seed);
    const auto tw = brute_force_treewidth(g);
    if (n <= 8) {
      dp_mismatch += tw != oracle::treewidth_by_permutations(g);
      ++checked;
    }
    for (Heuristic h : all_heuristics()) {
      auto td = gavril_td(g, compute_ordering(g, h, seed));
      invalid += !validate_td(g, td).valid();
      below += td.width() < tw;
    }
  }
  o.check(invalid == 0, "200 graphs x 6 heuristics: " + std::to_string(invalid) + " invalid decompositions");
  o.check(below == 0, "heuristic width below exact treewidth: " + std::to_string(below) + " cases");
  o.check(dp_mismatch == 0, "exact treewidth vs all permutations on " + std::to_string(checked) + " graphs (n <= 8): " +
                                std::to_string(dp_mismatch) + " mismatches");

  std::size_t filled = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = oracle::random_chordal_graph(20 + seed % 40, seed);
    for (Heuristic h : {Heuristic::mcs, Heuristic::lexm}) {
      filled += oracle::eliminate_naively(g, compute_ordering(g, h, seed).order).fill != 0;
    }
  }
  o.check(filled == 0, "50 chordal graphs, mcs/lexm orderings with fill: " + std::to_string(filled));
  return o;
}

Outcome kcore_oracle() {
  Outcome o;
  std::size_t mismatches = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 10 + (seed * 37) % 191;
    Graph g = oracle::random_graph(n, (2.0 + static_cast<double>(seed % 8)) / static_cast<double>(n), seed);
    mismatches += k_core(g).core != oracle::cores_by_deletion(g);
  }
  o.check(mismatches == 0, "100 graphs n <= 200: " + std::to_string(mismatches) + " mismatches");
  const auto sparse = k_core(giant_component(gen_er(5000, 1.6 / 5000, 0))).k_max;
  o.check(sparse == 2, "ER(1.6) giant k_max " + std::to_string(sparse) + " == 2");
  const auto dense = k_core(giant_component(gen_er(5000, 32.0 / 5000, 0))).k_max;
  o.check(dense >= 20 && dense <= 26, "ER(32) k_max " + std::to_string(dense) + " in [20, 26]");
  return o;
}

std::pair<std::vector<double>, std::vector<double>> core_series(const Graph& g) {
  auto prof = bag_profiles(g, gavril_td(g, order_amd(g, 0)), k_core(g));
  std::vector<double> ecc, core;
  for (const auto& c : prof.core_by_eccentricity) {
    ecc.push_back(static_cast<double>(c.eccentricity));
    core.push_back(c.mean_core);
  }
  return {ecc, core};
}

Outcome core_periphery() {
  Outcome o;
  auto [ecc, core] = core_series(giant_component(gen_er(5000, 1.6 / 5000, 0)));
  const double rho = spearman(ecc, core);
  o.check(rho < 0, "ER(1.6)+amd spearman(eccentricity, mean core) " + fmt(rho) + " < 0 over " +
                       std::to_string(ecc.size()) + " points");
  auto [ecc32, core32] = core_series(giant_component(gen_er(5000, 32.0 / 5000, 0)));
  const auto [lo, hi] = std::minmax_element(core32.begin(), core32.end());
  o.check(*hi - *lo <= 2, "ER(32)+amd mean core range " + fmt(*hi - *lo) + " <= 2");
  return o;
}

Outcome ncp_localization() {
  Outcome o;
  Graph two = oracle::two_cliques(10);
  auto points = ncp(two);
  const NCPPoint* ten = nullptr;
  for (const auto& p : points) {
    if (p.size == 10) ten = &p;
  }
  if (!ten) {
    o.check(false, "two K_10: no cluster of size 10 in the profile");
  } else {
    const double want = oracle::conductance_of(two, ten->members);
    o.check(std::abs(ten->conductance - 1.0 / 91.0) < 1e-12 && std::abs(want - 1.0 / 91.0) < 1e-12,
            "two K_10: size-10 conductance " + fmt(ten->conductance, 6) + " == 1/91");
    auto td = gavril_td(two, order_mindeg(two, 0));
    auto rows = localize(td, std::vector<NCPPoint>{*ten}, two.num_vertices());
    o.check(rows[0].bag_count <= 2 && rows[0].localized && rows[0].bag_count == oracle::bags_touching(td, ten->members),
            "two K_10: bag_count " + std::to_string(rows[0].bag_count) + " <= 2, localized");
  }

  // K_12 with an 8-vertex path hanging off vertex 0.
  std::vector<Edge> edges;
  for (vertex_t i = 0; i < 12; ++i) {
    for (vertex_t j = i + 1; j < 12; ++j) edges.emplace_back(i, j);
  }
  edges.emplace_back(0, 12);
  for (vertex_t v = 12; v < 19; ++v) edges.emplace_back(v, v + 1);
  Graph whiskered = Graph::from_edges(20, edges);
  auto td = gavril_td(whiskered, order_mindeg(whiskered, 0));
  NCPPoint tail;
  for (vertex_t v = 12; v < 20; ++v) tail.members.push_back(v);
  tail.size = 8;
  auto rows = localize(td, std::vector<NCPPoint>{tail}, 20);
  o.check(rows[0].bag_count >= 7 && !rows[0].localized,
          "tree whisker of 8: bag_count " + std::to_string(rows[0].bag_count) + " >= 7, not localized");

  double worst = 0;
  Graph g = giant_component(gen_er(2000, 3.0 / 2000, 1));
  for (double alpha : {0.01, 0.1}) {
    for (double eps : {1e-4, 1e-6}) worst = std::max(worst, ppr_push(g, 0, alpha, eps, true).max_mass_error);
  }
  o.check(worst <= 1e-9, "ppr push mass error " + fmt(worst, 3) + " <= 1e-9");
  return o;
}

Outcome grid_chain() {
  Outcome o;
  for (auto [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 0}, {3, 0}, {2, 1}, {3, 1}}) {
    auto rep = verify_theorem3(n, k, all_heuristics());
    const std::string tag = "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ") ";
    Graph g = gen_grid_subdivision(n, k);
    const double independent = g.num_vertices() <= 40 ? oracle::delta_by_quadruples(g) : rep.metric.delta;
    o.check(rep.delta_matches_formula && independent == rep.metric.delta,
            tag + "delta " + fmt(rep.metric.delta) + " (independent " + fmt(independent) + ") == (n-1)(k+1)-1 = " +
                fmt(rep.delta_formula));
    o.check(rep.tw == n, tag + "exact treewidth " + std::to_string(rep.tw) + " == n");
    o.check(rep.nu_cycle.is_geodesic && rep.nu_cycle.length == 4 * (k + 1),
            tag + "boundary cycle of length " + std::to_string(rep.nu_cycle.length) + " is geodesic");
    std::string lengths;
    for (const auto& l : rep.lengths) lengths += " " + l.heuristic + "=" + std::to_string(l.td_length);
    o.check(rep.chain_holds, tag + "delta <= td_length <= (tw+1)*nu = " + std::to_string(rep.upper_bound) + ":" + lengths);
  }
  return o;
}

int cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  return run(args, out, err);
}

Outcome planted_pipeline() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "treescope_acceptance_planted";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto at = [&](const char* name) { return (dir / name).string(); };
  {
    // Background graph on 300 nodes plus a K_8 whisker joined by one edge.
    Graph base = oracle::random_connected_graph(300, 0.01, 17);
    std::ofstream g(at("graph.txt"));
    for (auto [u, v] : base.edges()) g << "n" << u << ' ' << "n" << v << '\n';
    for (int i = 0; i < 8; ++i) {
      for (int j = i + 1; j < 8; ++j) g << "w" << i << " w" << j << '\n';
    }
    g << "n42 w0\n";
    std::ofstream c(at("communities.tsv"));
    c << "# node\tlabel\n";
    for (int i = 0; i < 8; ++i) c << "w" << i << "\tplanted\n";
    for (int i = 0; i < 300; i += 3) c << "n" << i << "\tbackground\n";
  }
  const int dec = cli({"decompose", at("graph.txt"), "--heuristic", "amd", "-o", at("graph.td")});
  const int cls = cli({"classify", at("graph.txt"), at("graph.td"), "--communities", at("communities.tsv"), "-o",
                       at("report.csv")});
  o.check(dec == 0 && cls == 0, "decompose and classify exit codes " + std::to_string(dec) + ", " + std::to_string(cls));

  std::ifstream in(at("report.csv"));
  std::string line;
  std::vector<std::string> header;
  std::map<std::string, std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream s(line);
    std::string f;
    while (std::getline(s, f, ',')) fields.push_back(f);
    if (header.empty()) {
      header = fields;
    } else if (!fields.empty()) {
      rows[fields[0]] = fields;
    }
  }
  const std::vector<std::string> schema{"label", "community_size", "global_fraction", "frequent_bags", "chosen_bags",
                                        "predicted_size", "recall", "precision"};
  o.check(header == schema, "report schema");
  o.check(rows.count("background") == 1, "every label reported");
  if (header == schema && rows.count("planted")) {
    const double recall = std::stod(rows["planted"][6]);
    const double precision = std::stod(rows["planted"][7]);
    o.check(recall == 1.0, "planted whisker recall " + fmt(recall) + " == 1");
    o.check(precision >= 0.8, "planted whisker precision " + fmt(precision) + " >= 0.8");
  } else {
    o.check(false, "planted label missing from the report");
  }
  fs::remove_all(dir);
  return o;
}

struct Criterion {
  std::string name;
  double budget_s;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"toy-suite widths", 10, toy_widths},
      {"median widths", 60, median_widths},
      {"oracle equivalence", 120, oracle_equivalence},
      {"k-core oracle", 60, kcore_oracle},
      {"core-periphery correlation", 60, core_periphery},
      {"ncp localization", 60, ncp_localization},
      {"subdivided grid chain", 60, grid_chain},
      {"planted community pipeline", 60, planted_pipeline},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.check(secs < c.budget_s, "runtime " + fmt(secs, 3) + " s < " + fmt(c.budget_s) + " s");
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << " (" << fmt(secs, 3) << " s)\n";
    for (const auto& note : o.notes) std::cout << "       " << note << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
