#include <cmath>

#include "doctest.h"
#include "treescope/generators.hpp"
#include "treescope/kcore.hpp"
#include "treescope/rng.hpp"

using namespace treescope;

TEST_CASE("rng is a fixed algorithm") {
  // SplitMix64 reference outputs for state 0.
  std::uint64_t state = 0;
  CHECK(splitmix64(state) == 0xe220a8397b1dcdafULL);
  CHECK(splitmix64(state) == 0x6e789e6aa1b965f4ULL);

  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng s1 = Rng::stream(42, "mindeg"), s2 = Rng::stream(42, "minfill");
  CHECK(s1.next() != s2.next());

  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    CHECK(r.below(7) < 7);
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("same seed, same edges") {
  auto a = gen_er(300, 0.05, 9).edges();
  auto b = gen_er(300, 0.05, 9).edges();
  auto c = gen_er(300, 0.05, 10).edges();
  CHECK(a == b);
  CHECK(a != c);
  CHECK(gen_chung_lu(500, 2.5, 3).edges() == gen_chung_lu(500, 2.5, 3).edges());
}

TEST_CASE("er") {
  SUBCASE("p = 1 is a clique") {
    Graph g = gen_er(30, 1.0, 0);
    CHECK(g.num_edges() == 30 * 29 / 2);
  }
  SUBCASE("edge count within 4 sigma of the binomial mean") {
    for (std::size_t n : {200u, 1000u, 30000u}) {
      const double p = 4.0 / static_cast<double>(n);
      const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
      const double mean = pairs * p, sigma = std::sqrt(pairs * p * (1 - p));
      const double m = static_cast<double>(gen_er(n, p, 5).num_edges());
      CHECK(std::abs(m - mean) <= 4 * sigma);
    }
  }
  SUBCASE("ER(32)") {
    Graph g = gen_er(5000, 32.0 / 5000, 0);
    Graph giant = giant_component(g);
    CHECK(giant.num_vertices() == 5000);
    CHECK(giant.average_degree() == doctest::Approx(32.1).epsilon(0.05));
  }
  SUBCASE("ER(1.6) giant component k_max") {
    Graph giant = giant_component(gen_er(5000, 1.6 / 5000, 0));
    CHECK(k_core(giant).k_max == 2);
  }
}

TEST_CASE("chung-lu") {
  SUBCASE("PL(3.0) giant component near 4071") {
    Graph giant = giant_component(gen_chung_lu(5000, 3.0, 0));
    CHECK(giant.num_vertices() >= 3664);
    CHECK(giant.num_vertices() <= 4478);
  }
  SUBCASE("realized average degree tracks the target") {
    for (double gamma : {2.5, 3.0}) {
      Graph g = gen_chung_lu(5000, gamma, 1);
      CHECK(g.average_degree() == doctest::Approx(2.5).epsilon(0.1));
    }
    Graph big = gen_chung_lu(30000, 2.75, 2, 4.0);
    CHECK(big.average_degree() == doctest::Approx(4.0).epsilon(0.1));
  }
  SUBCASE("two vertices give at most one edge") {
    for (std::uint64_t s = 0; s < 10; ++s) CHECK(gen_chung_lu(2, 3.0, s).num_edges() <= 1);
  }
  SUBCASE("gamma outside (2, 4] is rejected") {
    GenSpec spec;
    spec.family = Family::chung_lu;
    spec.n = 100;
    spec.gamma = 2.0;
    CHECK_THROWS_AS(generate(spec), Error);
  }
}

TEST_CASE("deterministic families") {
  Graph grid = gen_grid(10, 10);
  CHECK(grid.num_vertices() == 100);
  CHECK(grid.num_edges() == 180);

  Graph c = gen_cycle(10);
  for (vertex_t v = 0; v < 10; ++v) CHECK(c.degree(v) == 2);

  CHECK(gen_clique(100).num_edges() == 4950);

  Graph tree = gen_binary_tree(6);
  CHECK(tree.num_vertices() == 127);
  CHECK(tree.num_edges() == 126);
  CHECK(is_connected(tree));
}

TEST_CASE("grid subdivision") {
  Graph plain = gen_grid_subdivision(3, 0);
  Graph grid = gen_grid(3, 3);
  CHECK(plain.edges() == grid.edges());

  Graph c8 = gen_grid_subdivision(2, 1);
  CHECK(c8.num_vertices() == 8);
  CHECK(c8.num_edges() == 8);
  for (vertex_t v = 0; v < 8; ++v) CHECK(c8.degree(v) == 2);
  CHECK(is_connected(c8));

  Graph g31 = gen_grid_subdivision(3, 1);
  CHECK(g31.num_vertices() == 21);
  CHECK(g31.num_edges() == 24);
}

TEST_CASE("generate validates parameters") {
  GenSpec spec;
  spec.family = Family::er;
  spec.n = 10;
  spec.p = 1.5;
  CHECK_THROWS_AS(generate(spec), Error);
  spec.family = Family::grid;
  spec.rows = 0;
  spec.cols = 3;
  CHECK_THROWS_AS(generate(spec), Error);
  CHECK(parse_family("pl") == Family::chung_lu);
  CHECK_THROWS_AS(parse_family("smallworld"), Error);
}
