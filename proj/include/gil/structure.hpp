#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "gil/group.hpp"

namespace gil {

/// element order -> number of elements of that order
std::map<int, std::size_t> element_order_histogram(const Group& g);
/// subgroup order -> number of subgroups of that order
std::map<std::size_t, std::size_t> subgroup_order_histogram(const Group& g);

struct GroupInvariants {
  std::size_t order = 0;
  bool abelian = false;
  std::map<int, std::size_t> element_orders;
  /// Empty when the group is above the lattice cap.
  std::map<std::size_t, std::size_t> subgroup_orders;

  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

GroupInvariants group_invariants(const Group& g);

/// Whether a bijective homomorphism a -> b exists. Cheap invariants are
/// compared first (order, commutativity, element and subgroup order
/// histograms), then generator images are searched by backtracking.
bool is_isomorphic(const Group& a, const Group& b);

/// An explicit isomorphism as a map from element indices of `a` to element
/// indices of `b`, or nullopt.
std::optional<std::vector<ElementIndex>> find_isomorphism(const Group& a, const Group& b);
/// Same, with invariants computed by the caller (e.g. once per catalog entry).
std::optional<std::vector<ElementIndex>> find_isomorphism(const Group& a, const Group& b,
                                                          const GroupInvariants& ia,
                                                          const GroupInvariants& ib);

}  // namespace gil
