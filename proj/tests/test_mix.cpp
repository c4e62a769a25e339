#include <catch2/catch_amalgamated.hpp>

#include "polydual/cpr.hpp"
#include "polydual/mix.hpp"

using namespace polydual;

TEST_CASE("mix basics") {
  Sggi p5 = polygon(5), p7 = polygon(7);
  Sggi m = mix(p5, p7);
  CHECK(m.degree() == 12);
  // diagonal: mixing with itself reproduces the group order
  Sggi d = mix(p5, p5);
  CHECK(d.group().order() == p5.group().order());
  // rank-2 mix: order of rho0 rho1 is lcm of the factors
  CHECK(m.gen(0).then(m.gen(1)).order() == 35);

  try {
    mix(p5, simplex(3));
    FAIL("expected rank_mismatch");
  } catch (const error& e) {
    CHECK(e.code() == errc::rank_mismatch);
  }
}

TEST_CASE("mix covers both factors") {
  Sggi a = to_sggi(family_all_p(7));
  Sggi b = to_sggi(family_all_p(9));
  Sggi m = mix(a, b);
  CHECK(covers(m, a));
  CHECK(covers(m, b));
  unsigned long long mo = m.group().order();
  unsigned long long ao = a.group().order(), bo = b.group().order();
  CHECK(ao * bo % mo == 0);
  CHECK(mo % std::lcm(ao, bo) == 0);
}

TEST_CASE("mix with the edge: group doubles for internally self-dual inputs") {
  Sggi P = to_sggi(family_all_p(7));
  unsigned long long base = P.group().order();
  CHECK(base == 5040);
  Sggi Pe = mix_edge(P, 0);
  CHECK(Pe.group().order() == 2 * base);
  CHECK(schlafli_type(Pe) == std::vector<long long>{14, 7});

  // mixing the edge at the same position again does not grow the group
  Sggi Pee = mix_edge(Pe, 0);
  CHECK(Pee.group().order() == Pe.group().order());

  CHECK_THROWS_AS(mix_edge(P, 1), error);
}

TEST_CASE("int_to_ext: externally self-dual with four times the order") {
  Sggi P = to_sggi(family_all_p(7));
  Sggi E = int_to_ext(P);
  CHECK(E.group().order() == 4 * P.group().order());
  CHECK(schlafli_type(E) == std::vector<long long>{14, 14});
  DualityClass c = classify(E);
  CHECK(c.kind == DualityKind::ExternallySelfDual);

  // even p: the type does not grow (lcm(p,2) = p)
  Sggi P6 = to_sggi(family_even_k(6, 3));
  REQUIRE(classify(P6).internal());
  Sggi E6 = int_to_ext(P6);
  CHECK(schlafli_type(E6) == std::vector<long long>{6, 6});
  CHECK(classify(E6).kind == DualityKind::ExternallySelfDual);

  try {
    int_to_ext(polygon(4));  // externally self-dual input
    FAIL("expected not_internally_self_dual");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_internally_self_dual);
  }
}

TEST_CASE("dual of a mix is the mix of the duals") {
  Sggi a = polygon(5), b = polygon(7);
  Sggi lhs = dual(mix(a, b));
  Sggi rhs = mix(dual(a), dual(b));
  for (int i = 0; i < lhs.rank(); ++i) CHECK(lhs.gen(i) == rhs.gen(i));
}

TEST_CASE("mix internal self-duality through the shared word") {
  Sggi a = to_sggi(family_all_p(7));
  Sggi b = to_sggi(family_all_p(9));
  std::vector<int> w;
  for (int k = 0; k < 6; ++k) {
    w.push_back(0);
    w.push_back(2);
    w.push_back(1);
  }
  REQUIRE(shared_dualizing_word(a, b, w));
  CHECK(mix_internally_self_dual(a, b));
  // and the shared word is dualizing in the mix itself
  CHECK(is_dualizing_word(mix(a, b), w));

  // mix of P with its edge extension covers the externally self-dual P <> e,
  // so it cannot be internally self-dual
  Sggi Pe = mix_edge(a, 0);
  Sggi m = mix(a, Pe);
  if (is_string_c_group(m)) CHECK_FALSE(classify(m).internal());

  // diagonal mix classifies like the factor
  CHECK(mix_internally_self_dual(a, a) == classify(a).internal());
}

TEST_CASE("internally self-dual P gives non-internal P <> e") {
  for (const Sggi& P : {to_sggi(family_all_p(7)), polygon(5), simplex(3)}) {
    REQUIRE(classify(P).internal());
    Sggi Pe = mix_edge(P, 0);
    CHECK_FALSE(classify(Pe).internal());
  }
}
