#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gil/catalog.hpp"
#include "gil/inequality.hpp"

namespace gil {

struct ClaimResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::uint64_t assertions = 0;
  double seconds = 0.0;
  /// Non-empty when the check passed against a corrected statement because
  /// the published one has counterexamples; names them.
  std::string deviation;
};

struct ClaimOptions {
  /// Defaults to the builtin catalog.
  const CatalogIndex* catalog = nullptr;
  /// Replaces builtin inequalities by id (fault injection).
  std::map<std::string, InequalitySpec> overrides;
  int jobs = 1;
  bool include_stretch = true;
  bool include_properties = true;
};

/// The inequality the claims use for `id`: an override if present.
const InequalitySpec& claim_inequality(const ClaimOptions& opt, const std::string& id);

ClaimResult claim_s4_dfz1(const ClaimOptions& opt);
ClaimResult claim_s4_dfz3(const ClaimOptions& opt);
ClaimResult claim_d20_gi(const ClaimOptions& opt);
ClaimResult claim_smallest_violator(const ClaimOptions& opt);
ClaimResult claim_a4_exhaustive(const ClaimOptions& opt);
ClaimResult claim_no_simultaneous(const ClaimOptions& opt);
ClaimResult claim_catalog_counts(const ClaimOptions& opt);
ClaimResult claim_s5_ingleton(const ClaimOptions& opt);
ClaimResult claim_determinism(const ClaimOptions& opt);

/// Empirical checks of the structural lemmas; each runs at least 10^3
/// assertions and reports the first counterexample it meets.
ClaimResult property_lemma2_products(const ClaimOptions& opt);
ClaimResult property_gi_lower_bound(const ClaimOptions& opt);
ClaimResult property_valuation_normal_sylow(const ClaimOptions& opt);
ClaimResult property_pq_values(const ClaimOptions& opt);
ClaimResult property_p2q_values(const ClaimOptions& opt);
ClaimResult property_pq2_values(const ClaimOptions& opt);
ClaimResult property_p2q_sylow_intersections(const ClaimOptions& opt);
ClaimResult property_trivial_intersections(const ClaimOptions& opt);

std::vector<ClaimResult> property_suites(const ClaimOptions& opt);
/// Every claim above, in a fixed order.
std::vector<ClaimResult> verify_paper(const ClaimOptions& opt);

}  // namespace gil
