#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gil/catalog.hpp"
#include "gil/entropy.hpp"
#include "gil/group.hpp"
#include "gil/inequality.hpp"
#include "gil/lattice.hpp"

namespace gil {

struct PruneFlags {
  bool theory_common_info = true;
  bool order_class = true;
  bool conjugacy = true;
  bool ineq_symmetry = true;

  static PruneFlags all() { return {}; }
  static PruneFlags none() { return {false, false, false, false}; }
};

/// Parses "all", "none" or a comma list of
/// theory_common_info, order_class, conjugacy, ineq_symmetry.
PruneFlags parse_prune_flags(std::string_view text);
std::string to_string(const PruneFlags& flags);

struct SearchConfig {
  /// Builtin ids, or keys of `custom`.
  std::vector<std::string> inequality_ids = dfz_ids();
  /// Inequalities supplied by the caller; an id found here shadows a builtin
  /// and disables the theorem-based prunes.
  std::map<std::string, InequalitySpec> custom;
  PruneFlags prune;
  int worker_count = 1;
  /// 0 derives it from the inequalities; otherwise it must match.
  int tuple_arity = 0;
  std::optional<std::size_t> emit_limit;
  std::size_t lattice_cap = SubgroupLattice::kDefaultOrderCap;
};

struct Witness {
  std::string group_name;
  std::vector<std::size_t> subgroup_indices;  // lattice indices, position order
  std::vector<std::vector<std::string>> subgroup_generators;
  std::string inequality_id;
  BigInt lhs_product;
  BigInt rhs_product;
  EntropyVector subset_orders;
};

struct PruneReport {
  std::uint64_t tuples_total = 0;
  std::map<std::string, std::uint64_t> tuples_pruned_by_rule;
  /// Breakdown of theory_common_info by the lemma that fired.
  std::map<std::string, std::uint64_t> theory_detail;
  std::uint64_t tuples_evaluated = 0;
  /// Violated (tuple, inequality) pairs among evaluated tuples.
  std::uint64_t violations_found = 0;
  /// Evaluated (tuple, inequality) pairs holding with equality.
  std::uint64_t tight_evaluations = 0;
  double wall_time = 0.0;

  std::uint64_t pruned_total() const;
  void merge(const PruneReport& other);
};

struct ScanResult {
  std::vector<Witness> witnesses;
  PruneReport report;
};

ScanResult scan_group(const Group& g, const SearchConfig& cfg);
/// Same, reusing a lattice built (or loaded) by the caller.
ScanResult scan_group(const Group& g, const SubgroupLattice& lattice, const SearchConfig& cfg);

enum class TheoryRule { AbelianGroup, Nested, Normal, ProductSubgroup };
std::string to_string(TheoryRule r);

/// First rule under which G1 G2 is a subgroup, tried in the order listed in
/// TheoryRule, or nullopt.
std::optional<TheoryRule> prune_applicable(const Group& g, const Subgroup& pos1,
                                           const Subgroup& pos2);

struct OrderClass {
  enum class Kind { Abelian, PqSafe, P2qNormalSylowQ, Pq2NormalSylowQ, Unconstrained };
  Kind kind = Kind::Unconstrained;
  /// For the two restricted kinds: positions 1 and 2 must both have order p.
  std::uint64_t p = 0;
  std::uint64_t q = 0;
};
std::string to_string(OrderClass::Kind k);

OrderClass order_class(const Group& g);
OrderClass order_class(const Group& g, const SubgroupLattice& lattice);

struct SimultaneousHit {
  std::vector<std::size_t> subgroup_indices;
  std::vector<std::vector<std::string>> subgroup_generators;
  EntropyVector subset_orders;
};

struct SimultaneousResult {
  std::vector<SimultaneousHit> hits;
  PruneReport report;
};

/// Every tuple (up to the verdict-preserving prunes in `prune`) violating
/// both inequalities.
SimultaneousResult check_simultaneous(const Group& g,
                                      const std::pair<InequalitySpec, InequalitySpec>& pair,
                                      PruneFlags prune = {}, int worker_count = 1);

struct SurveyRow {
  std::string group_name;
  std::size_t group_order = 0;
  std::size_t witness_count = 0;
  PruneReport report;
  std::vector<Witness> witnesses;
  std::optional<std::string> error;
};

/// Scans every catalog entry with lo <= order <= hi, in catalog order.
/// A failing group is recorded and the survey moves on.
std::vector<SurveyRow> survey(const CatalogIndex& cat, std::pair<std::size_t, std::size_t> orders,
                              const SearchConfig& cfg);

/// Cycle-notation generators of lattice subgroup i.
std::vector<std::string> subgroup_generator_strings(const Group& g, const SubgroupLattice& lattice,
                                                    std::size_t i);

}  // namespace gil
