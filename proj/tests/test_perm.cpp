#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "polydual/perm.hpp"

using namespace polydual;

TEST_CASE("identity and involution composition") {
  Perm id = Perm::identity(4);
  Perm t = Perm::from_cycles(4, {{1, 2}});
  CHECK(t.then(t) == id);      // involution squared
  CHECK(id.then(t) == t);      // identity law
  CHECK(t.then(id) == t);
  CHECK(id.is_identity());
  CHECK_FALSE(t.is_identity());
}

TEST_CASE("left-to-right action matches the displayed word rho0 rho2 rho1") {
  // Theorem-family graph with p = 9
  Perm r0 = Perm::from_cycles(9, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
  Perm r1 = Perm::from_cycles(9, {{2, 3}, {4, 5}, {6, 7}, {8, 9}});
  Perm r2 = Perm::from_cycles(9, {{1, 5}, {2, 6}, {3, 4}, {7, 8}});
  Perm w = r0.then(r2).then(r1);
  CHECK(w.cycle_string() == "(1,7,6)(2,4,5,3)(8,9)");
  CHECK(w.order() == 12);  // lcm(3,4,2)
  CHECK(w.power(6).cycle_string() == "(2,5)(3,4)");
  CHECK(w.power(6).order() == 2);
}

TEST_CASE("cycle decomposition is canonical") {
  CHECK(Perm::identity(5).cycles().empty());
  Perm g = Perm::from_cycles(4, {{1, 2}, {3, 4}});
  auto cs = g.cycles();
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == std::vector<int>{1, 2});
  CHECK(cs[1] == std::vector<int>{3, 4});
  CHECK(Perm::identity(3).cycle_string() == "()");
}

TEST_CASE("cycle notation round trip and whitespace-insensitive parsing") {
  Perm g = Perm::parse_cycles(9, "(1,7,6)(2,4,5,3)(8,9)");
  CHECK(g.cycle_string() == "(1,7,6)(2,4,5,3)(8,9)");
  Perm h = Perm::parse_cycles(9, "  ( 1 , 7 ,6) (2,4,5,3)\t(8, 9) ");
  CHECK(g == h);
  CHECK(Perm::parse_cycles(5, "()").is_identity());
  CHECK_THROWS_AS(Perm::parse_cycles(3, "(1,4)"), error);
  CHECK_THROWS_AS(Perm::parse_cycles(3, "(1,2"), error);
  CHECK_THROWS_AS(Perm::parse_cycles(4, "(1,2)(1,3)"), error);
}

TEST_CASE("degree 0 and 1 permutations are legal") {
  Perm a = Perm::identity(0);
  CHECK(a.is_identity());
  CHECK(a.order() == 1);
  Perm b = Perm::identity(1);
  CHECK(b.cycle_string() == "()");
}

TEST_CASE("composition is associative on random triples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int deg = 1 + static_cast<int>(rng() % 12);
    auto rand_perm = [&] {
      std::vector<int32_t> img(deg);
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      return Perm::from_images(std::move(img));
    };
    Perm a = rand_perm(), b = rand_perm(), c = rand_perm();
    CHECK(a.then(b).then(c) == a.then(b.then(c)));
    CHECK(a.then(a.inverse()).is_identity());
  }
}

TEST_CASE("power and order agree") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int deg = 2 + static_cast<int>(rng() % 10);
    std::vector<int32_t> img(deg);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    Perm g = Perm::from_images(std::move(img));
    long long m = g.order();
    CHECK(g.power(m).is_identity());
    for (long long k = 1; k < m && k <= 6; ++k) CHECK_FALSE(g.power(k).is_identity());
  }
}
