#include <doctest.h>

#include "gil/error.hpp"
#include "gil/permutation.hpp"

using gil::Permutation;

TEST_CASE("juxtaposed cycles compose left to right") {
  const auto p = Permutation::parse("(1,2)(1,3)");
  CHECK(p[0] == 1);
  CHECK(p[1] == 2);
  CHECK(p[2] == 0);
  CHECK(p == Permutation::parse("(1,2)", 3) * Permutation::parse("(1,3)"));
  CHECK(p.to_cycles() == "(1,2,3)");
}

TEST_CASE("identity and whitespace") {
  CHECK(Permutation::parse("()", 4).is_identity());
  CHECK(Permutation::parse("", 3).is_identity());
  CHECK(Permutation::parse("( 1 2 3 )") == Permutation::parse("(1,2,3)"));
  CHECK(Permutation::parse("()", 4).to_cycles() == "()");
}

TEST_CASE("order and inverse") {
  const auto p = Permutation::parse("(1,2,3)(4,5)");
  CHECK(p.order() == 6);
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.extended(7).degree() == 7);
  CHECK(p.extended(7).to_cycles() == p.to_cycles());
}

TEST_CASE("malformed cycles") {
  CHECK_THROWS_AS(Permutation::parse("(1,2"), gil::ParseError);
  CHECK_THROWS_AS(Permutation::parse("(1,1)"), gil::ParseError);
  CHECK_THROWS_AS(Permutation::parse("(0,1)"), gil::ParseError);
  CHECK_THROWS_AS(Permutation::parse("(1,33)"), gil::ParseError);
  CHECK_THROWS_AS(Permutation::parse("1,2"), gil::ParseError);
  CHECK_THROWS_AS(Permutation::parse("(1,5)", 4), gil::Error);
  try {
    Permutation::parse("(1,2)(3;4)");
    FAIL("no throw");
  } catch (const gil::ParseError& e) {
    CHECK(e.position() == 7);
  }
}
