#include "doctest.h"
#include "oracles.hpp"
#include "treescope/exact_treewidth.hpp"
#include "treescope/generators.hpp"
#include "treescope/hyperbolicity.hpp"
#include "treescope/treedecomp.hpp"

using namespace treescope;

TEST_CASE("four-point delta") {
  CHECK(delta_exact(gen_binary_tree(4)).delta == 0.0);
  CHECK(delta_exact(gen_clique(6)).delta == 0.0);
  CHECK(delta_exact(gen_cycle(8)).delta == 2.0);
  // Corners of the 3x3 grid: sums 8, 4, 4.
  CHECK(delta_exact(gen_grid(3, 3)).delta == 2.0);
  CHECK(delta_exact(gen_grid(3, 3)).diameter == 4);

  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Graph g = giant_component(oracle::random_graph(25 + seed, 0.12, seed));
    CHECK(delta_exact(g).delta == oracle::delta_by_quadruples(g));
  }
}

TEST_CASE("delta is thread independent and capped") {
  Graph g = giant_component(oracle::random_graph(60, 0.06, 3));
  CHECK(delta_exact(g, kDeltaCap, false, 1).delta == delta_exact(g, kDeltaCap, false, 4).delta);
  CHECK_THROWS_AS(delta_exact(g, 20), Error);
  CHECK(delta_exact(g, 20, true).n == g.num_vertices());
  CHECK_THROWS_AS(delta_exact(Graph::from_edges(3, std::vector<Edge>{{0, 1}})), Error);
}

TEST_CASE("geodesic cycles") {
  Graph c9 = gen_cycle(9);
  std::vector<vertex_t> all(9);
  std::iota(all.begin(), all.end(), 0);
  auto r = check_geodesic_cycle(c9, all);
  CHECK(r.is_cycle);
  CHECK(r.is_geodesic);
  CHECK(r.length == 9);

  Graph k4 = gen_clique(4);
  auto square = check_geodesic_cycle(k4, {0, 1, 2, 3});
  CHECK(square.is_cycle);
  CHECK_FALSE(square.is_geodesic);
  CHECK(check_geodesic_cycle(k4, {0, 1, 2}).is_geodesic);

  Graph grid = gen_grid(3, 3);
  CHECK(check_geodesic_cycle(grid, {0, 1, 4, 3}).is_geodesic);
  CHECK_FALSE(check_geodesic_cycle(grid, {0, 1, 2, 5, 8, 7, 6, 3}).is_geodesic);
  CHECK_FALSE(check_geodesic_cycle(grid, {0, 1, 2}).is_cycle);

  CHECK_THROWS_AS(check_geodesic_cycle(grid, {0, 1}), Error);
  CHECK_THROWS_AS(check_geodesic_cycle(grid, {0, 1, 0}), Error);
}

TEST_CASE("subdivided cell") {
  Graph g = gen_grid_subdivision(2, 1);
  auto cell = grid_subdivision_cell(g, 2);
  CHECK(cell.size() == 8);
  auto r = check_geodesic_cycle(g, cell);
  CHECK(r.is_geodesic);
  CHECK(r.length == 8);

  Graph g32 = gen_grid_subdivision(3, 2);
  for (std::size_t row = 0; row < 2; ++row) {
    for (std::size_t col = 0; col < 2; ++col) {
      auto c = grid_subdivision_cell(g32, 3, row, col);
      CHECK(c.size() == 12);
      CHECK(check_geodesic_cycle(g32, c).is_geodesic);
    }
  }
}

TEST_CASE("longest geodesic cycle by search") {
  CHECK(longest_geodesic_cycle_bruteforce(gen_binary_tree(2)) == 0);
  CHECK(longest_geodesic_cycle_bruteforce(gen_cycle(10)) == 10);
  CHECK(longest_geodesic_cycle_bruteforce(gen_grid(3, 3)) == 4);
  CHECK(longest_geodesic_cycle_bruteforce(gen_clique(5)) == 3);
  CHECK(longest_geodesic_cycle_bruteforce(gen_grid_subdivision(2, 1)) == 8);
  CHECK_THROWS_AS(longest_geodesic_cycle_bruteforce(gen_grid(5, 5)), Error);
}

TEST_CASE("delta never exceeds tree length") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = giant_component(oracle::random_graph(50, 0.07, seed));
    const double delta = delta_exact(g).delta;
    for (Heuristic h : all_heuristics()) {
      auto td = gavril_td(g, compute_ordering(g, h, seed));
      CHECK(delta <= static_cast<double>(td_length(g, td)));
    }
  }
}

TEST_CASE("subdivided grid chain") {
  for (auto [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 0}, {3, 0}, {2, 1}, {3, 1}}) {
    CAPTURE(n);
    CAPTURE(k);
    auto rep = verify_theorem3(n, k, all_heuristics());
    CHECK(rep.delta_formula == static_cast<double>((n - 1) * (k + 1)) - 1.0);
    CHECK(rep.metric.delta == static_cast<double>((n - 1) * (k + 1)));
    CHECK(rep.tw == n);
    CHECK(rep.tw_analytic == n);
    CHECK(rep.nu == 4 * (k + 1));
    CHECK(rep.nu_cycle.is_geodesic);
    CHECK(rep.nu_cycle.length == rep.nu);
    CHECK(rep.upper_bound == (rep.tw + 1) * rep.nu);
    CHECK(rep.lengths.size() == all_heuristics().size());
    CHECK(rep.chain_holds);
  }
  auto small = verify_theorem3(2, 1, {Heuristic::mindeg});
  CHECK(small.nu_bruteforce_run);
  CHECK(small.nu_bruteforce == 8);
  CHECK_THROWS_AS(verify_theorem3(1, 0, {Heuristic::mindeg}), Error);
}
