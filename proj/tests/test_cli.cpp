#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gil/commands.hpp"
#include "gil/error.hpp"
#include "gil/lattice_cache.hpp"
#include "gil/paper_claims.hpp"

using namespace gil;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  auto d = fs::temp_directory_path() / ("gil-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::pair<int, std::string> run(std::vector<std::string> args) {
  args.insert(args.begin(), "gil");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

}  // namespace

TEST_CASE("tuple text") {
  const auto t = parse_tuple_text("G1=(3,4),(2,4,3); G2=(); G3=(1,2)(3,4)");
  REQUIRE(t.size() == 3);
  CHECK(t[0] == std::vector<std::string>{"(3,4)", "(2,4,3)"});
  CHECK(t[1].empty());
  CHECK(t[2] == std::vector<std::string>{"(1,2)(3,4)"});
  CHECK(parse_tuple_text("(1,2);(1 2 3)").size() == 2);
  CHECK_THROWS_AS(parse_tuple_text("G2=(1,2)"), ParseError);
  CHECK_THROWS_AS(parse_tuple_text("G1=(1,2"), ParseError);
  CHECK_THROWS_AS(parse_tuple_text(""), ParseError);
  CHECK_THROWS_AS(parse_tuple_text("G1=(1,2),"), ParseError);
  CHECK_THROWS_AS(parse_tuple_text("();();();();();()"), ParseError);
}

TEST_CASE("check command") {
  CommandOptions opt;
  opt.ineqs = "dfz1";
  const auto r = cmd_check("S4", "s4-dfz1", opt);
  CHECK(r.exit_code == 1);
  CHECK(r.results["verdicts"]["dfz1"]["lhs_product"] == "128");
  CHECK(r.results["verdicts"]["dfz1"]["rhs_product"] == "96");
  CHECK(r.results["verdicts"]["dfz1"]["verdict"] == "violated");
  CHECK(r.results["subset_orders"]["12"] == 2);
  opt.ineqs = "dfz3";
  CHECK(cmd_check("S4", "s4-dfz3", opt).results["verdicts"]["dfz3"]["rhs_product"] == "48");
  opt.ineqs = "all";
  CHECK(cmd_check("C6", "G1=(1,2,3,4,5,6); G2=(1,4)(2,5)(3,6); G3=(); G4=(1,3,5)(2,4,6); G5=()", opt).exit_code ==
        0);
  opt.ineqs = "mine";
  opt.defines = {"mine=H(X1) <= 0"};
  CHECK(cmd_check("S3", "G1=(1,2)", opt).exit_code == 1);
  CHECK_THROWS(cmd_check("S3", "G1=(1,4)", opt));
  CHECK_THROWS_AS(cmd_check("S9", "G1=(1,2)", opt), UnknownName);
}

TEST_CASE("parse command") {
  const auto r = cmd_parse("I(X1;X2) <= 0");
  CHECK(r.results["coefficients"] == json{{"1", -1}, {"2", -1}, {"12", 1}});
  CHECK(r.results["symmetry_group"]["size"] == 2);
  CHECK(r.results["group_form"] == "|G12||G| <= |G1||G2|");
  CHECK_THROWS_AS(cmd_parse("I(X1;X2"), ParseError);
}

TEST_CASE("exit codes and rendering") {
  CHECK(run({"survey", "2", "7"}).first == 0);
  auto [code, out] = run({"scan", "S4", "--no-cache", "--emit-limit", "3"});
  CHECK(code == 1);
  const auto j = json::parse(out);
  CHECK(j["tool"] == "gil");
  CHECK(j["command"] == "scan");
  CHECK(j["results"]["witnesses"].size() == 3);
  CHECK(run({"check", "S4", "G1=(1,2"}).first == 2);
  CHECK(run({"scan", "S4", "--prune", "bogus"}).first == 2);
  CHECK(run({"scan", "S4", "--format", "xml"}).first == 2);
  CHECK(run({"frobnicate"}).first == 2);
  CHECK(run({"--help"}).first == 0);
  const auto md = run({"groups", "show", "A4", "--format", "md"}).second;
  CHECK(md.find("# A4") == 0);
  CHECK(json::parse(run({"groups", "list", "--max-order", "4"}).second)["results"]["groups"].size() == 5);
}

TEST_CASE("witnesses in a report re-verify through check") {
  CommandOptions opt;
  opt.use_cache = false;
  const auto scan = json::parse(render(cmd_scan("S4", opt), Format::Json));
  REQUIRE(!scan["results"]["witnesses"].empty());
  for (const auto& w : scan["results"]["witnesses"]) {
    std::vector<std::vector<std::string>> gens;
    for (const auto& s : w["subgroups"]) gens.push_back(s["generators"].get<std::vector<std::string>>());
    CommandOptions one;
    one.ineqs = w["inequality"].get<std::string>();
    const auto chk = cmd_check("S4", tuple_text(gens), one);
    const auto& v = chk.results["verdicts"][one.ineqs];
    CHECK(v["lhs_product"] == w["lhs_product"]);
    CHECK(v["rhs_product"] == w["rhs_product"]);
    CHECK(v["verdict"] == "violated");
  }
}

TEST_CASE("lattice cache") {
  const auto dir = scratch_dir("cache");
  const auto& cat = builtin_catalog();
  LatticeCache cache(dir);
  for (const char* name : {"S4", "D20", "C2xC2xC2xC2"}) {
    const Group g = cat.group(name);
    bool hit = true;
    const auto fresh = cache.get_or_build(g, 1000, &hit);
    CHECK_FALSE(hit);
    const auto loaded = cache.get_or_build(g, 1000, &hit);
    CHECK(hit);
    CHECK(same_lattice(fresh, loaded));
    CHECK(same_lattice(fresh, all_subgroups(g)));
  }
  const Group s4 = cat.group("S4");
  const auto text = serialize_lattice(s4, all_subgroups(s4));
  CHECK(deserialize_lattice(s4, text));
  CHECK_FALSE(deserialize_lattice(cat.group("D12"), text));
  auto stale = json::parse(text);
  stale["version"] = LatticeCache::kFormatVersion + 1;
  CHECK_FALSE(deserialize_lattice(s4, stale.dump()));
  auto tampered = json::parse(text);
  tampered["normal"][1] = !tampered["normal"][1].get<bool>();
  CHECK_FALSE(deserialize_lattice(s4, tampered.dump()));
  CHECK_FALSE(deserialize_lattice(s4, "{"));
  {
    std::ofstream(cache.file_for(s4)) << stale.dump();
  }
  bool hit = true;
  cache.get_or_build(s4, 1000, &hit);
  CHECK_FALSE(hit);

  CommandOptions opt;
  opt.cache_dir = scratch_dir("cmd");
  opt.ineqs = "dfz3";
  CHECK(cmd_scan("D12", opt).results["cache_hit"] == false);
  CHECK(cmd_scan("D12", opt).results["cache_hit"] == true);
  fs::remove_all(dir);
  fs::remove_all(*opt.cache_dir);
}

TEST_CASE("fault injection") {
  ClaimOptions corrupted;
  corrupted.overrides.emplace("dfz1", parse_inequality("I(X1;X2) <= I(X1;X2|X3) + I(X1;X2|X4) + I(X3;X4|X5) + I(X1;X5) + I(X1;X2)", "dfz1"));
  const auto r = claim_s4_dfz1(corrupted);
  CHECK(r.name == "s4-dfz1-violation");
  CHECK_FALSE(r.passed);
  CHECK(claim_s4_dfz1(ClaimOptions{}).passed);

  auto doc = json::parse(builtin_catalog_text());
  auto& groups = doc["groups"];
  for (auto it = groups.begin(); it != groups.end(); ++it) {
    if ((*it)["name"] == "F20") {
      groups.erase(it);
      break;
    }
  }
  CHECK_THROWS_AS(parse_catalog(doc.dump()), CatalogError);
  CatalogLoadOptions lax;
  lax.check_counts = false;
  const auto cat = parse_catalog(doc.dump(), lax);
  ClaimOptions missing;
  missing.catalog = &cat;
  const auto c = claim_catalog_counts(missing);
  CHECK(c.name == "catalog-counts");
  CHECK_FALSE(c.passed);
  CHECK(claim_catalog_counts(ClaimOptions{}).passed);
}
