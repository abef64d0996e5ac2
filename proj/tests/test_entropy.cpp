#include <doctest.h>

#include <random>

#include "gil/catalog.hpp"
#include "gil/entropy.hpp"
#include "gil/error.hpp"
#include "gil/lattice.hpp"

using namespace gil;

TEST_CASE("printed S4 tuples") {
  const Group s4 = builtin_catalog().group("S4");
  for (const auto& [name, id, lhs, rhs] :
       {std::tuple{"s4-dfz1", "dfz1", 128, 96}, std::tuple{"s4-dfz3", "dfz3", 64, 48}}) {
    std::vector<Subgroup> subs;
    for (const auto& g : paper_tuple(name).generators) subs.push_back(closure_of_cycles(s4, g));
    const auto ev = entropy_vector(s4, subs);
    const auto v = evaluate(builtin(id), ev);
    CHECK(v.lhs_product == lhs);
    CHECK(v.rhs_product == rhs);
    CHECK(v.violated());
    CHECK(v.ratio_num == 4);
    CHECK(v.ratio_den == 3);
    CompiledInequality c(builtin(id));
    CHECK(c.compare(ev.orders.data()) == 1);
    CHECK(c.violated(ev.orders.data()));
  }
}

TEST_CASE("entropy vector bookkeeping") {
  const Group s4 = builtin_catalog().group("S4");
  const std::vector<Subgroup> t = {closure_of_cycles(s4, {"(1,2)"}), closure_of_cycles(s4, {"(1,2)", "(3,4)"})};
  const auto ev = entropy_vector(s4, t);
  CHECK(ev.n == 2);
  CHECK(ev.orders[0] == 24);
  CHECK(ev.order_of(1) == 2);
  CHECK(ev.order_of(2) == 4);
  CHECK(ev.order_of(3) == 2);
  CHECK_THROWS(evaluate(builtin("dfz1"), ev));
  const auto tight = evaluate(parse_inequality("H(X1,X2) >= H(X1)"), ev);
  CHECK(tight.holds);
  CHECK(tight.tight());
}

TEST_CASE("gi and valuations") {
  const Group d20 = builtin_catalog().group("D20");
  const auto t = paper_tuple("d20-example");
  const auto g1 = closure_of_cycles(d20, t.generators[0]);
  const auto g2 = closure_of_cycles(d20, t.generators[1]);
  const auto g5 = closure_of_cycles(d20, t.generators[2]);
  const auto whole = whole_group(d20);
  CHECK(gi(d20, g1, g2, whole) == GroupRational::make(5, 1));
  CHECK(gi(d20, g1, g5, whole) == GroupRational::make(5, 2));
  CHECK(valuation(gi(d20, g1, g5, whole), 5) == 1);
  CHECK(valuation(gi(d20, g1, g5, whole), 2) == -1);
  CHECK(valuation(GroupRational::make(1, 1), 3) == 0);
  CHECK_THROWS(valuation(GroupRational::make(5, 2), 4));
  CHECK_THROWS(GroupRational::make(0, 1));
  CHECK(GroupRational::make(6, 4) == GroupRational::make(3, 2));
  CHECK(GroupRational::make(1, 2) < GroupRational::make(2, 3));
  CHECK(gi_from_orders(1, 20, 2, 2) == GroupRational::make(5, 1));
}

TEST_CASE("compiled comparison agrees with evaluate under overflow") {
  // Large coefficients push the products past 128 bits.
  const auto spec = parse_inequality("40 H(X1) + 40 H(X2) >= 41 H(X1,X2)");
  const Group s5 = builtin_catalog().group("S5");
  const auto lat = all_subgroups(s5);
  CompiledInequality c(spec);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, lat.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const std::vector<Subgroup> t = {lat[pick(rng)], lat[pick(rng)]};
    const auto ev = entropy_vector(s5, t);
    const auto v = evaluate(spec, ev);
    const int want = v.lhs_product < v.rhs_product ? -1 : (v.lhs_product == v.rhs_product ? 0 : 1);
    CHECK(c.compare(ev.orders.data()) == want);
  }
}
