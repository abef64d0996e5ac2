#include <doctest.h>

#include "gil/error.hpp"
#include "gil/inequality.hpp"

using namespace gil;

namespace {
VarSet vs(std::initializer_list<int> xs) {
  VarSet s = 0;
  for (int x : xs) s |= var_bit(x);
  return s;
}
}  // namespace

TEST_CASE("expansion of information quantities") {
  const auto mi = parse_inequality("I(X1;X2) <= 0");
  CHECK(mi.n_vars == 2);
  CHECK(mi.coeffs == std::map<VarSet, long long>{{vs({1}), -1}, {vs({2}), -1}, {vs({1, 2}), 1}});
  const auto ci = parse_inequality("I(X1;X2|X3) >= 0");
  CHECK(ci.coeffs ==
        std::map<VarSet, long long>{{vs({1, 3}), 1}, {vs({2, 3}), 1}, {vs({1, 2, 3}), -1}, {vs({3}), -1}});
  const auto h = parse_inequality("H(X1|X2) >= 0");
  CHECK(h.coeffs == std::map<VarSet, long long>{{vs({1, 2}), 1}, {vs({2}), -1}});
  CHECK(parse_inequality("H(X1,X2) - H(X1) - H(X2|X1)").coeffs.empty());
  CHECK(parse_inequality("-H(X1) + 2 H(X1) >= 0").coeffs == std::map<VarSet, long long>{{vs({1}), 1}});
  CHECK(parse_inequality("0 <= H(X3)").n_vars == 3);
}

TEST_CASE("parse errors carry positions") {
  auto pos = [](std::string_view text) -> long {
    try {
      parse_inequality(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(pos("I(X1;X6) >= 0") == 6);
  CHECK(pos("I(X1;X2 >= 0") >= 0);
  CHECK(pos("H(X1) >=") >= 0);
  CHECK(pos("H(X1) >= H(X2) >= 0") >= 0);
  CHECK(pos("J(X1) >= 0") == 0);
  CHECK(pos("H(X0) >= 0") == 3);
}

TEST_CASE("printers round-trip every builtin") {
  for (const auto& id : builtin_ids()) {
    const auto& s = builtin(id);
    CHECK_MESSAGE(parse_inequality(pretty_print(s)).coeffs == s.coeffs, id);
    CHECK_MESSAGE(parse_inequality(entropy_form(s)).coeffs == s.coeffs, id);
  }
  CHECK(builtin_ids().size() == 11);
  CHECK(dfz_ids().size() == 10);
  CHECK_THROWS_AS(builtin("dfz11"), UnknownName);
  CHECK(builtin_rank("ingleton") < builtin_rank("dfz1"));
  CHECK(builtin_rank("dfz2") < builtin_rank("dfz10"));
  CHECK(builtin_rank("dfz10") < builtin_rank("aaa"));
}

TEST_CASE("group forms") {
  CHECK(group_form(parse_inequality("I(X1;X2) <= 0")) == "|G12||G| <= |G1||G2|");
  const auto& ingleton = builtin("ingleton");
  CHECK(ingleton.n_vars == 4);
  CHECK(ingleton.coeffs.size() == 10);
  // The Ingleton inequality in entropies: H1+H2+H34+H123+H124 <= H12+H13+H14+H23+H24.
  CHECK(ingleton.coeff(vs({1, 2})) == 1);
  CHECK(ingleton.coeff(vs({1})) == -1);
  CHECK(ingleton.coeff(vs({3, 4})) == -1);
  CHECK(ingleton.coeff(vs({1, 2, 3})) == -1);
  CHECK(ingleton.coeff(vs({1, 3})) == 1);
  CHECK(ingleton.coeff(vs({3})) == 0);
}

TEST_CASE("symmetry groups") {
  const std::map<std::string, std::size_t> sizes = {
      {"ingleton", 4}, {"dfz1", 2}, {"dfz2", 2}, {"dfz3", 1}, {"dfz4", 1}, {"dfz5", 1},
      {"dfz6", 2},     {"dfz7", 1}, {"dfz8", 12}, {"dfz9", 2}, {"dfz10", 1}};
  for (const auto& [id, n] : sizes) {
    const auto sym = symmetry_group(builtin(id));
    CHECK_MESSAGE(sym.perms.size() == n, id);
    CHECK(sym.perms.front() == identity_var_perm());
    for (const auto& p : sym.perms) {
      for (const auto& [a, c] : builtin(id).coeffs) CHECK(builtin(id).coeff(apply_perm(p, a)) == c);
    }
  }
}
