#include <doctest.h>

#include <nlohmann/json.hpp>

#include "gil/catalog.hpp"
#include "gil/structure.hpp"

using namespace gil;
using nlohmann::json;

namespace {

json doc(json groups, json counts = json::object()) {
  return {{"format", "gil-catalog"}, {"version", 1}, {"aliases", json::object()},
          {"expected_counts", counts}, {"groups", groups}};
}

json entry(const std::string& name, int degree, std::vector<std::string> gens, std::size_t order) {
  return {{"name", name}, {"degree", degree}, {"generators", gens}, {"expected_order", order},
          {"tags", json::array()}};
}

CatalogError::Kind error_kind(const json& j) {
  try {
    parse_catalog(j.dump());
  } catch (const CatalogError& e) {
    return e.kind();
  }
  FAIL("catalog accepted");
  return CatalogError::Kind::Parse;
}

}  // namespace

TEST_CASE("builtin catalog") {
  const auto& cat = builtin_catalog();
  CHECK(cat.entries.size() >= 70);
  for (std::size_t n = 1; n <= 24; ++n) CHECK_MESSAGE(cat.by_order.count(n), n);
  CHECK(cat.by_order.at(24).size() == 15);
  CHECK(cat.get("PGL2(F5)").name == "S5");
  CHECK(cat.contains("PGL2(F5)"));
  CHECK_THROWS_AS(cat.get("nope"), UnknownName);
  CHECK(cat.group("A4").order() == 12);
  const auto names = cat.names_in_range(20, 20);
  CHECK(names.size() == 5);
  for (const auto& [name, def] : cat.entries) CHECK_MESSAGE(realize(def).order() == def.expected_order, name);
}

TEST_CASE("catalog validation errors") {
  const auto c4 = entry("C4", 4, {"(1,2,3,4)"}, 4);
  CHECK(parse_catalog(doc({c4}).dump()).entries.size() == 1);
  CHECK(error_kind(doc({entry("C4", 4, {"(1,2,3,4)"}, 5)})) == CatalogError::Kind::OrderMismatch);
  CHECK(error_kind(doc({c4, entry("Z4", 4, {"(1,3,2,4)"}, 4)})) == CatalogError::Kind::DuplicateClass);
  CHECK(error_kind(doc({c4}, {{"4", 2}})) == CatalogError::Kind::CountMismatch);
  CHECK(error_kind(doc({c4, c4})) == CatalogError::Kind::Parse);
  CHECK(error_kind(doc({entry("C4", 4, {"(1,2,3,4"}, 4)})) == CatalogError::Kind::Parse);
  CHECK(error_kind(json{{"format", "other"}}) == CatalogError::Kind::Parse);
  CHECK_THROWS_AS(parse_catalog("{not json"), CatalogError);
  auto bad_alias = doc({c4});
  bad_alias["aliases"] = {{"Z4", "C5"}};
  CHECK(error_kind(bad_alias) == CatalogError::Kind::Parse);
  CatalogLoadOptions lax;
  lax.check_isomorphism = false;
  lax.check_counts = false;
  CHECK(parse_catalog(doc({c4, entry("Z4", 4, {"(1,3,2,4)"}, 4)}, {{"4", 7}}).dump(), lax).entries.size() == 2);
}

TEST_CASE("constructors give the named structure") {
  CHECK(is_isomorphic(realize(dihedral(2)), realize(direct_product(cyclic(2), cyclic(2)))));
  CHECK(is_isomorphic(realize(semidirect_cyclic(5, 4, 2)), builtin_catalog().group("F20")));
  CHECK(is_isomorphic(realize(semidirect_cyclic(3, 4, -1)), builtin_catalog().group("Dic3")));
  CHECK(realize(alternating(5)).order() == 60);
  CHECK(dihedral(10).name == "D20");
}

TEST_CASE("printed tuples") {
  CHECK(paper_tuple_names().size() == 3);
  const auto t = paper_tuple("d20-example");
  CHECK(t.group == "D20");
  CHECK(t.positions == std::vector<int>{1, 2, 5});
  CHECK_THROWS_AS(paper_tuple("s4-dfz2"), UnknownName);
}
