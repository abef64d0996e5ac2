#include <doctest.h>

#include <set>

#include "gil/catalog.hpp"
#include "gil/error.hpp"
#include "gil/search.hpp"

using namespace gil;

namespace {

std::set<std::string> violated_ids(const ScanResult& r) {
  std::set<std::string> s;
  for (const auto& w : r.witnesses) s.insert(w.inequality_id);
  return s;
}

std::uint64_t counted(const PruneReport& r) { return r.pruned_total() + r.tuples_evaluated; }

}  // namespace

TEST_CASE("prune flags") {
  CHECK(to_string(parse_prune_flags("all")) == "theory_common_info,order_class,conjugacy,ineq_symmetry");
  CHECK(to_string(parse_prune_flags("none")) == "none");
  const auto f = parse_prune_flags("conjugacy,ineq_symmetry");
  CHECK_FALSE(f.theory_common_info);
  CHECK(f.conjugacy);
  CHECK_THROWS_AS(parse_prune_flags("conjugacy,bogus"), UnknownName);
}

TEST_CASE("order classes") {
  const auto& cat = builtin_catalog();
  CHECK(order_class(cat.group("C6")).kind == OrderClass::Kind::Abelian);
  CHECK(order_class(cat.group("S3")).kind == OrderClass::Kind::PqSafe);
  CHECK(order_class(cat.group("C7:C3")).kind == OrderClass::Kind::PqSafe);
  const auto d20 = order_class(cat.group("D20"));
  CHECK(d20.kind == OrderClass::Kind::P2qNormalSylowQ);
  CHECK(d20.p == 2);
  CHECK(d20.q == 5);
  const auto a4 = order_class(cat.group("A4"));
  CHECK(a4.kind == OrderClass::Kind::Pq2NormalSylowQ);
  CHECK(a4.p == 3);
  CHECK(order_class(cat.group("S4")).kind == OrderClass::Kind::Unconstrained);
  CHECK(order_class(cat.group("D8")).kind == OrderClass::Kind::Unconstrained);
}

TEST_CASE("theory prune rules") {
  const Group s4 = builtin_catalog().group("S4");
  const auto c2 = closure_of_cycles(s4, {"(1,2)"});
  const auto s3 = closure_of_cycles(s4, {"(1,2)", "(1,2,3)"});
  const auto v4 = closure_of_cycles(s4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  const auto c2b = closure_of_cycles(s4, {"(1,3)"});
  const auto d8 = closure_of_cycles(s4, {"(1,2,3,4)", "(1,3)"});
  CHECK(prune_applicable(s4, c2, s3) == TheoryRule::Nested);
  CHECK(prune_applicable(s4, s3, v4) == TheoryRule::Normal);
  CHECK(prune_applicable(s4, c2b, closure_of_cycles(s4, {"(2,4)"})) == TheoryRule::ProductSubgroup);
  CHECK_FALSE(prune_applicable(s4, c2, c2b));
  CHECK_FALSE(prune_applicable(s4, s3, closure_of_cycles(s4, {"(1,2)", "(1,2,4)"})));
  CHECK(prune_applicable(s4, s3, d8) == TheoryRule::ProductSubgroup);
  const Group c6 = builtin_catalog().group("C6");
  CHECK(prune_applicable(c6, trivial_subgroup(c6), whole_group(c6)) == TheoryRule::AbelianGroup);
}

TEST_CASE("S4 scan finds the dfz1 and dfz3 violators") {
  const Group s4 = builtin_catalog().group("S4");
  const auto r = scan_group(s4, SearchConfig{});
  CHECK(violated_ids(r) == std::set<std::string>{"dfz1", "dfz3"});
  CHECK(r.report.tuples_total == 24300000);
  CHECK(counted(r.report) == r.report.tuples_total);
  CHECK(r.report.violations_found == r.witnesses.size());
  for (const auto& w : r.witnesses) {
    const auto v = evaluate(builtin(w.inequality_id), w.subset_orders);
    CHECK(v.lhs_product == w.lhs_product);
    CHECK(v.rhs_product == w.rhs_product);
    CHECK(v.lhs_product > v.rhs_product);
  }
  SearchConfig limited;
  limited.emit_limit = 2;
  const auto l = scan_group(s4, limited);
  REQUIRE(l.witnesses.size() == 2);
  CHECK(l.witnesses[0].subgroup_indices == r.witnesses[0].subgroup_indices);
}

TEST_CASE("conjugacy pruning preserves verdicts") {
  const auto& cat = builtin_catalog();
  for (const char* name : {"D12", "Dic3", "D8", "S3", "A4"}) {
    const Group g = cat.group(name);
    SearchConfig off;
    off.prune = PruneFlags::none();
    SearchConfig on = off;
    on.prune.conjugacy = true;
    on.prune.ineq_symmetry = true;
    const auto a = scan_group(g, off), b = scan_group(g, on);
    CHECK_MESSAGE(violated_ids(a) == violated_ids(b), name);
    CHECK(counted(b.report) == b.report.tuples_total);
    CHECK(a.report.tuples_evaluated == a.report.tuples_total);
  }
  const Group s4 = cat.group("S4");
  SearchConfig no_conj;
  no_conj.prune.conjugacy = false;
  CHECK(violated_ids(scan_group(s4, no_conj)) == std::set<std::string>{"dfz1", "dfz3"});
}

TEST_CASE("theory prunes never skip a violator") {
  const auto& cat = builtin_catalog();
  for (const char* name : {"S4", "D20"}) {
    const Group g = cat.group(name);
    const auto lattice = all_subgroups(g);
    SearchConfig cfg;
    cfg.prune = PruneFlags::none();
    const auto r = scan_group(g, lattice, cfg);
    const auto oc = order_class(g, lattice);
    for (const auto& w : r.witnesses) {
      const auto& h1 = lattice[w.subgroup_indices[0]];
      const auto& h2 = lattice[w.subgroup_indices[1]];
      CHECK_FALSE(prune_applicable(g, h1, h2));
      if (oc.kind == OrderClass::Kind::P2qNormalSylowQ || oc.kind == OrderClass::Kind::Pq2NormalSylowQ) {
        CHECK(h1.order() == oc.p);
        CHECK(h2.order() == oc.p);
      }
      CHECK(oc.kind != OrderClass::Kind::Abelian);
      CHECK(oc.kind != OrderClass::Kind::PqSafe);
    }
    if (std::string(name) == "S4") {
      CHECK(r.witnesses.size() == 96);
    } else {
      CHECK(r.witnesses.empty());
    }
  }
}

TEST_CASE("simultaneous violators") {
  const auto& cat = builtin_catalog();
  const Group s4 = cat.group("S4");
  CHECK(check_simultaneous(s4, {builtin("dfz1"), builtin("dfz3")}).hits.empty());
  CHECK_FALSE(check_simultaneous(s4, {builtin("dfz1"), builtin("dfz1")}).hits.empty());
  CHECK(check_simultaneous(cat.group("C6"), {builtin("dfz2"), builtin("dfz5")}).hits.empty());
  for (const auto& name : cat.names_in_range(1, 24)) {
    CHECK_MESSAGE(check_simultaneous(cat.group(name), {builtin("dfz1"), builtin("dfz3")}).hits.empty(), name);
  }
}

TEST_CASE("survey and determinism") {
  const auto& cat = builtin_catalog();
  const auto rows = survey(cat, {2, 5}, SearchConfig{});
  CHECK(rows.size() == 5);
  for (const auto& row : rows) {
    CHECK(row.witness_count == 0);
    CHECK(row.report.tuples_evaluated == 0);
  }
  SearchConfig four;
  four.worker_count = 4;
  const Group s4 = cat.group("S4");
  const auto a = scan_group(s4, SearchConfig{}), b = scan_group(s4, four);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
    CHECK(a.witnesses[i].subgroup_indices == b.witnesses[i].subgroup_indices);
    CHECK(a.witnesses[i].inequality_id == b.witnesses[i].inequality_id);
  }
  CHECK(a.report.tuples_evaluated == b.report.tuples_evaluated);
}

TEST_CASE("custom inequalities") {
  const Group s3 = builtin_catalog().group("S3");
  SearchConfig cfg;
  cfg.inequality_ids = {"bad"};
  cfg.custom.emplace("bad", parse_inequality("H(X1) <= 0", "bad"));
  const auto r = scan_group(s3, cfg);
  CHECK_FALSE(r.witnesses.empty());
  cfg.inequality_ids = {"missing"};
  CHECK_THROWS_AS(scan_group(s3, cfg), UnknownName);
  SearchConfig arity;
  arity.tuple_arity = 3;
  CHECK_THROWS(scan_group(s3, arity));
}
