#include <catch2/catch_amalgamated.hpp>

#include "polydual/constructions.hpp"
#include "polydual/cpr.hpp"
#include "polydual/duality.hpp"
#include "polydual/fpgroup.hpp"

using namespace polydual;

TEST_CASE("coxeter presentations and enumeration") {
  CHECK(todd_coxeter(coxeter({5})).cosets == 10);
  CHECK(todd_coxeter(coxeter({3, 3})).cosets == 24);
  CHECK(todd_coxeter(coxeter({2, 2})).cosets == 8);
  CHECK(todd_coxeter(coxeter({3, 4, 3})).cosets == 1152);
  CHECK_THROWS_AS(coxeter({1, 3}), error);
}

TEST_CASE("dihedral orders up to 50") {
  for (int p = 2; p <= 50; ++p) CHECK(todd_coxeter(coxeter({p})).cosets == 2 * p);
}

TEST_CASE("regular action: relators satisfied, point stabilizer trivial") {
  Presentation pres = add_relator(coxeter({4, 4}), {0, 1, 2, 1, 0, 1, 2, 1, 0, 1, 2, 1});
  CosetAction act = todd_coxeter(pres);
  CHECK(act.cosets == 72);
  // every relator evaluates to the identity
  for (const auto& r : pres.relators)
    CHECK(evaluate_word(act.gens, r, act.cosets).is_identity());
  for (const auto& g : act.gens) CHECK(g.then(g).is_identity());
  // regular: only the identity fixes a point
  Sggi S = check_string(act.gens);
  for (const auto& e : S.group().enumerate().elements()) {
    if (e.is_identity()) continue;
    bool fixes_something_everywhere = true;
    for (int32_t x = 0; x < e.degree() && fixes_something_everywhere; ++x)
      fixes_something_everywhere = (e(x) == x);
    CHECK_FALSE(fixes_something_everywhere);
  }
  CHECK(S.group().order() == 72);
}

TEST_CASE("coset enumeration over a subgroup") {
  // [3,3] over <rho0, rho1>: cosets = 24 / 6 = 4 (the simplex vertices)
  CosetAction act = todd_coxeter(coxeter({3, 3}), {{0}, {1}});
  CHECK(act.cosets == 4);
}

TEST_CASE("torus relator quotients match the coordinate models") {
  for (int s : {3, 4, 5}) {
    std::vector<int> w;
    for (int k = 0; k < s; ++k) {
      w.push_back(0);
      w.push_back(1);
      w.push_back(2);
      w.push_back(1);
    }
    Presentation pres = add_relator(coxeter({4, 4}), w);
    Sggi Q = sggi_from_presentation(pres);
    CHECK(Q.group().order() == 8ull * s * s);
    Sggi T = torus44(s).sggi();
    CHECK(T.group().order() == Q.group().order());
    CHECK(covers(Q, T));
    CHECK(covers(T, Q));
  }
}

TEST_CASE("length-one relators collapse generators (FAP probes)") {
  // torus s=4 has the FAP with respect to its 2-faces: killing rho2 leaves
  // exactly the square's dihedral group of order 8
  std::vector<int> w4;
  for (int k = 0; k < 4; ++k) {
    w4.push_back(0);
    w4.push_back(1);
    w4.push_back(2);
    w4.push_back(1);
  }
  Presentation torus4 = add_relator(coxeter({4, 4}), w4);
  CHECK(check_fap(torus4, 2, 8));

  // m = n adds nothing
  CHECK(check_fap(torus4, 3, 128));

  // the simplex is internally self-dual: killing rho1, rho2 collapses rho0 too
  CHECK_FALSE(check_fap(coxeter({3, 3}), 1, 2));
}

TEST_CASE("comix presentations") {
  Presentation a = coxeter({4, 4});
  CHECK(comix_presentation(a, a).relators.size() == a.relators.size());
  std::vector<int> w3, w5;
  for (int k = 0; k < 3; ++k) w3.insert(w3.end(), {0, 1, 2, 1});
  for (int k = 0; k < 5; ++k) w5.insert(w5.end(), {0, 1, 2, 1});
  Presentation q3 = add_relator(a, w3), q5 = add_relator(a, w5);
  Presentation cm = comix_presentation(q3, q5);
  CHECK(cm.relators.size() == a.relators.size() + 2);
  // the comix of the two torus quotients: order divides both 72 and 200
  CosetAction act = todd_coxeter(cm);
  CHECK(72 % act.cosets == 0);
  CHECK(200 % act.cosets == 0);
  CHECK_THROWS_AS(comix_presentation(coxeter({3}), coxeter({3, 3})), error);
}

TEST_CASE("the dualizing-relation quotient of [inf, inf]") {
  Presentation p = dualizing_quotient_presentation();
  CHECK(p.ngens == 3);
  // one string relator plus the three dualizing relations
  CHECK(p.relators.size() == 4);

  // the group covers every member of the theorem family: each relator
  // evaluates to the identity there
  for (int q : {7, 8, 9, 10, 11, 12}) {
    Sggi P = to_sggi(family_all_p(q));
    for (const auto& r : p.relators) CHECK(P.word(r).is_identity());
  }

  // enumeration diverges: the group is infinite, the cap answers honestly
  try {
    todd_coxeter(p, {}, 20000);
    FAIL("expected cap_exceeded");
  } catch (const error& e) {
    CHECK(e.code() == errc::cap_exceeded);
  }
}

TEST_CASE("a finite certified quotient via the quotient criterion") {
  // [4,4] with the s=3 torus relator covers the coordinate model with
  // isomorphic facet group, certifying the quotient a string C-group
  std::vector<int> w3;
  for (int k = 0; k < 3; ++k) w3.insert(w3.end(), {0, 1, 2, 1});
  Sggi G = sggi_from_presentation(add_relator(coxeter({4, 4}), w3));
  Sggi L = torus44(3).sggi();
  CHECK(covers(G, L));
  CHECK(quotient_criterion(G, L));
}

TEST_CASE("[2,2] is flat, self-dual, and not internally self-dual") {
  Sggi s22 = sggi_from_presentation(coxeter({2, 2}));
  CHECK(is_self_dual(s22));
  CHECK(classify(s22).kind == DualityKind::ExternallySelfDual);
}

TEST_CASE("presentation text round trip") {
  Presentation p = dualizing_quotient_presentation();
  Presentation q = parse_presentation(to_text(p));
  CHECK(p == q);
  CHECK_THROWS_AS(parse_presentation("nope"), error);
  CHECK_THROWS_AS(parse_presentation("gens 2\n0 5\n"), error);
}
