#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nglie/lattice.hpp"

using namespace nglie;

static Lattice lat(std::vector<RatVec> gens, int dim) {
  return Lattice::from_generators(std::move(gens), dim);
}

TEST_CASE("canonical forms") {
  // gens {(1,0),(0,1/2)} -> D=2, rows (2,0),(0,1)
  Lattice l = lat({{rat(1), rat(0)}, {rat(0), rat(1, 2)}}, 2);
  CHECK(l.denom() == 2);
  REQUIRE(l.hnf().size() == 2);
  CHECK(l.hnf()[0] == IntVec{2, 0});
  CHECK(l.hnf()[1] == IntVec{0, 1});

  // gens {(2,0),(3,0)} in dim 2 -> D=1, single row (1,0)
  Lattice g = lat({{rat(2), rat(0)}, {rat(3), rat(0)}}, 2);
  CHECK(g.denom() == 1);
  REQUIRE(g.hnf().size() == 1);
  CHECK(g.hnf()[0] == IntVec{1, 0});
  CHECK(lattice_equal(g, lat({{rat(1), rat(0)}}, 2)));

  // gens {(1,1)} already canonical
  Lattice d = lat({{rat(1), rat(1)}}, 2);
  CHECK(d.denom() == 1);
  REQUIRE(d.hnf().size() == 1);
  CHECK(d.hnf()[0] == IntVec{1, 1});
}

TEST_CASE("membership") {
  Lattice l = lat({{rat(1), rat(0)}, {rat(0), rat(1, 2)}}, 2);
  CHECK(l.contains({rat(3), rat(-5, 2)}));
  CHECK_FALSE(l.contains({rat(1, 2), rat(0)}));
  Lattice zero = lat({}, 2);
  CHECK(zero.contains({rat(0), rat(0)}));
  CHECK_FALSE(zero.contains({rat(1), rat(0)}));
  CHECK_THROWS_AS(l.contains({rat(1)}), std::invalid_argument);
}

TEST_CASE("membership is closed under the group operations") {
  Rng rng(7);
  Lattice l = lat({{rat(1), rat(0), rat(1, 3)}, {rat(0), rat(1, 2), rat(0)},
                   {rat(0), rat(0), rat(5)}},
                  3);
  for (int t = 0; t < 50; t++) {
    RatVec a = vec_zero(3), b = vec_zero(3);
    for (const auto& g : l.generators()) {
      a = vec_add(a, vec_scale(Rat(rng.range(-4, 4)), g));
      b = vec_add(b, vec_scale(Rat(rng.range(-4, 4)), g));
    }
    CHECK(l.contains(a));
    CHECK(l.contains(vec_add(a, b)));
    CHECK(l.contains(vec_neg(a)));
  }
}

TEST_CASE("equality") {
  CHECK(lattice_equal(lat({{rat(1), rat(0)}, {rat(0), rat(1)}}, 2),
                      lat({{rat(1), rat(1)}, {rat(0), rat(1)}}, 2)));
  CHECK_FALSE(lattice_equal(lat({{rat(1), rat(0)}}, 2), lat({{rat(2), rat(0)}}, 2)));
  Lattice l = lat({{rat(1), rat(7, 3)}}, 2);
  CHECK(lattice_equal(l, l));
}

TEST_CASE("canonical form is generator-order independent") {
  Rng rng(11);
  for (int t = 0; t < 30; t++) {
    std::vector<RatVec> gens;
    for (int i = 0; i < 3; i++) {
      RatVec v;
      for (int j = 0; j < 3; j++) {
        long num = rng.range(-5, 5);
        long den = rng.range(1, 3);
        Rat q(num, den);
        q.canonicalize();
        v.push_back(q);
      }
      gens.push_back(v);
    }
    Lattice a = lat(gens, 3);
    // Shuffle and row-recombine: g0 += 2*g1, swap two rows.
    std::vector<RatVec> mixed = gens;
    mixed[0] = vec_add(mixed[0], vec_scale(rat(2), mixed[1]));
    std::swap(mixed[1], mixed[2]);
    mixed.push_back(vec_sub(mixed[0], mixed[2]));
    Lattice b = lat(mixed, 3);
    CHECK(lattice_equal(a, b));
  }
}

TEST_CASE("nondegeneracy") {
  CHECK(lat({{rat(1), rat(0)}, {rat(0), rat(1, 2)}}, 2).nondegenerate());
  CHECK_FALSE(lat({{rat(1), rat(0)}}, 2).nondegenerate());
  CHECK_FALSE(lat({{rat(1), rat(2)}, {rat(2), rat(4)}}, 2).nondegenerate());
}

TEST_CASE("block matrix checks") {
  RatMat ok = {{rat(2), rat(0)}, {rat(0), rat(1)}};
  CHECK_NOTHROW(g_check(ok, 1, 1));
  RatMat topright = {{rat(1), rat(1)}, {rat(0), rat(1)}};
  CHECK_THROWS_AS(g_check(topright, 1, 1), std::invalid_argument);
  RatMat singular = {{rat(0), rat(0)}, {rat(1), rat(1)}};
  CHECK_THROWS_AS(g_check(singular, 1, 1), std::invalid_argument);
}

TEST_CASE("vector action") {
  BlockMatrix g = g_check({{rat(2), rat(0)}, {rat(0), rat(1)}}, 1, 1);
  RatVec image = g_act_vector(g, {rat(1), rat(3)});
  CHECK(image == RatVec{rat(1, 2), rat(3)});
  BlockMatrix id = g_check({{rat(1), rat(0)}, {rat(0), rat(1)}}, 1, 1);
  CHECK(g_act_vector(id, {rat(5), rat(-2)}) == RatVec{rat(5), rat(-2)});
}

static BlockMatrix random_block(Rng& rng, int l2, int l3) {
  int n = l2 + l3;
  while (true) {
    RatMat m(n, RatVec(n, Rat(0)));
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) {
        if (i < l2 && j >= l2) continue;
        m[i][j] = Rat(rng.range(-3, 3));
      }
    try {
      return g_check(m, l2, l3);
    } catch (const std::invalid_argument&) {
      // singular draw; try again
    }
  }
}

TEST_CASE("right action composition law") {
  Rng rng(23);
  for (int t = 0; t < 40; t++) {
    BlockMatrix g = random_block(rng, 1, 2);
    BlockMatrix h = random_block(rng, 1, 2);
    RatVec v = {Rat(rng.range(-5, 5)), Rat(rng.range(-5, 5)), Rat(rng.range(-5, 5))};
    // acting by h then g is the action of the product g*h
    RatVec lhs = g_act_vector(g, g_act_vector(h, v));
    BlockMatrix gh = g_check(mat_mul(g.entries, h.entries), 1, 2);
    RatVec rhs = g_act_vector(gh, v);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("lattice action") {
  BlockMatrix g = g_check({{rat(2), rat(0)}, {rat(0), rat(1)}}, 1, 1);
  Lattice z2 = lat({{rat(1), rat(0)}, {rat(0), rat(1)}}, 2);
  Lattice image = g_act_lattice(g, z2);
  CHECK(lattice_equal(image, lat({{rat(1, 2), rat(0)}, {rat(0), rat(1)}}, 2)));
  BlockMatrix id = g_check({{rat(1), rat(0)}, {rat(0), rat(1)}}, 1, 1);
  CHECK(lattice_equal(g_act_lattice(id, z2), z2));

  Rng rng(5);
  for (int t = 0; t < 20; t++) {
    BlockMatrix r = random_block(rng, 1, 1);
    CHECK(g_act_lattice(r, z2).nondegenerate());
  }
}

TEST_CASE("line intersection") {
  Lattice l = lat({{rat(1), rat(1)}}, 2);
  CHECK(l.meets_line({rat(2), rat(2)}));
  CHECK_FALSE(l.meets_line({rat(1), rat(0)}));
}
