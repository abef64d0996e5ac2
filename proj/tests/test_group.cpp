#include <doctest.h>

#include "gil/catalog.hpp"
#include "gil/error.hpp"
#include "gil/lattice.hpp"
#include "gil/structure.hpp"

using namespace gil;

TEST_CASE("orders of standard groups") {
  CHECK(realize(symmetric(3)).order() == 6);
  CHECK(realize(symmetric(4)).order() == 24);
  CHECK(realize(alternating(4)).order() == 12);
  CHECK(realize(dihedral(10)).order() == 20);
  CHECK(realize(direct_product(cyclic(2), cyclic(2))).order() == 4);
  CHECK(realize(semidirect_cyclic(7, 3, 2)).order() == 21);
  CHECK(realize(projective_linear(5)).order() == 120);
  CHECK_THROWS(semidirect_cyclic(7, 3, 3));
  CHECK_THROWS_AS(realize(symmetric(6), 100), CapExceeded);
}

TEST_CASE("closure, normality and products") {
  const Group s4 = realize(symmetric(4));
  const auto v4 = closure_of_cycles(s4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  const auto a4 = closure_of_cycles(s4, {"(1,2,3)", "(2,3,4)"});
  const auto c2 = closure_of_cycles(s4, {"(1,2)"});
  const auto c2b = closure_of_cycles(s4, {"(1,3)"});
  CHECK(v4.order() == 4);
  CHECK(a4.order() == 12);
  CHECK(is_normal(s4, v4));
  CHECK(is_normal(s4, a4));
  CHECK_FALSE(is_normal(s4, c2));
  CHECK(is_normal(s4, c2, closure_of_cycles(s4, {"(1,2)", "(3,4)"})));
  CHECK(is_product_subgroup(s4, v4, c2));
  CHECK_FALSE(is_product_subgroup(s4, c2, c2b));
  CHECK(set_product_order(c2, c2b) == 4);
  CHECK(intersect(v4, a4) == v4);
  CHECK(trivial_subgroup(s4).order() == 1);
  CHECK(whole_group(s4).order() == 24);
  CHECK(closure_of_cycles(s4, {}).order() == 1);
  CHECK_THROWS(closure_of_cycles(s4, {"(1,5)"}));
}

TEST_CASE("subgroups of another group are rejected") {
  const Group a = realize(symmetric(3));
  const Group b = realize(symmetric(3));
  CHECK_THROWS_AS(intersect(whole_group(a), whole_group(b)), MismatchedParents);
}

TEST_CASE("lattice sizes, classes and Sylow subgroups") {
  const Group s4 = realize(symmetric(4));
  const auto lat = all_subgroups(s4);
  CHECK(lat.size() == 30);
  CHECK(lat.conjugacy_classes().size() == 11);
  CHECK(lat.sylow_index().at(2).size() == 3);
  CHECK(lat.sylow_index().at(3).size() == 4);
  CHECK(lat.order(0) == 1);
  CHECK(lat.order(lat.size() - 1) == 24);
  std::size_t normal = 0;
  for (std::size_t i = 0; i < lat.size(); ++i) normal += lat.is_normal(i);
  CHECK(normal == 4);
  for (std::size_t i = 0; i < lat.size(); ++i) {
    for (ElementIndex x = 0; x < s4.order(); ++x) {
      const auto j = lat.conjugate(x, i);
      CHECK_EQ(lat.class_of(j), lat.class_of(i));
      CHECK(lat[j] == conjugate(s4, lat[i], x));
    }
  }
  CHECK(all_subgroups(realize(alternating(4))).size() == 10);
  CHECK(all_subgroups(realize(dihedral(10))).size() == 22);
  CHECK(all_subgroups(realize(symmetric(5))).size() == 156);
  CHECK(sylow_subgroups(realize(dihedral(10)), 2).size() == 5);
  CHECK(sylow_subgroups(s4, 5).size() == 1);
  CHECK_THROWS(sylow_subgroups(s4, 4));
  CHECK_THROWS_AS(all_subgroups(s4, 10), CapExceeded);
}

TEST_CASE("isomorphism") {
  CHECK(is_isomorphic(realize(dihedral(3)), realize(symmetric(3))));
  CHECK(is_isomorphic(realize(projective_linear(5)), realize(symmetric(5))));
  CHECK(is_isomorphic(realize(direct_product(cyclic(2), cyclic(3))), realize(cyclic(6))));
  CHECK_FALSE(is_isomorphic(realize(cyclic(6)), realize(symmetric(3))));
  CHECK_FALSE(is_isomorphic(realize(cyclic(4)), realize(direct_product(cyclic(2), cyclic(2)))));
  CHECK_FALSE(is_isomorphic(realize(dihedral(4)), realize(cyclic(8))));
  const Group a = realize(dihedral(6)), b = realize(direct_product(symmetric(3), cyclic(2)));
  const auto iso = find_isomorphism(a, b);
  REQUIRE(iso);
  for (ElementIndex x = 0; x < a.order(); ++x) {
    for (ElementIndex y = 0; y < a.order(); ++y) CHECK((*iso)[a.mul(x, y)] == b.mul((*iso)[x], (*iso)[y]));
  }
}
