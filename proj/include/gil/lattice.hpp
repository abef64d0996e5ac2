#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "gil/group.hpp"

namespace gil {

/// Every subgroup of one group, sorted by (order, member set), with
/// normality, conjugacy classes, the subgroup conjugation action and the
/// Sylow subgroups per prime. Immutable once built.
class SubgroupLattice {
 public:
  static constexpr std::size_t kDefaultOrderCap = 1000;

  std::size_t size() const { return subgroups_.size(); }
  const Subgroup& operator[](std::size_t i) const { return subgroups_[i]; }
  std::span<const Subgroup> subgroups() const { return subgroups_; }
  std::size_t order(std::size_t i) const { return orders_[i]; }

  /// Small generating set of subgroup i (element indices of the parent).
  const std::vector<ElementIndex>& generators(std::size_t i) const { return generators_[i]; }
  bool is_normal(std::size_t i) const { return normal_[i]; }
  const std::vector<std::vector<std::size_t>>& conjugacy_classes() const { return classes_; }
  std::size_t class_of(std::size_t i) const { return class_of_[i]; }
  /// Lattice index of x H_i x^-1.
  std::uint32_t conjugate(ElementIndex x, std::size_t i) const {
    return conj_[static_cast<std::size_t>(x) * size() + i];
  }
  /// Prime -> indices of its Sylow subgroups. Only primes dividing |G|.
  const std::map<std::uint64_t, std::vector<std::size_t>>& sylow_index() const { return sylow_; }

  std::optional<std::size_t> find(const ElementSet& members) const;
  std::uint64_t group_id() const { return group_id_; }
  std::uint64_t group_fingerprint() const { return fingerprint_; }
  std::size_t group_order() const { return group_order_; }

  /// Builds the lattice bookkeeping around an explicit list of subgroups.
  /// Every set is checked to be closed; duplicates are rejected.
  static SubgroupLattice from_sets(const Group& g, std::vector<ElementSet> sets);

 private:
  std::vector<Subgroup> subgroups_;
  std::vector<std::size_t> orders_;
  std::vector<std::vector<ElementIndex>> generators_;
  std::vector<bool> normal_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::uint32_t> conj_;
  std::map<std::uint64_t, std::vector<std::size_t>> sylow_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::uint64_t group_id_ = 0;
  std::uint64_t fingerprint_ = 0;
  std::size_t group_order_ = 0;
};

/// Enumerates every subgroup: cyclic subgroups first, then repeated
/// one-element extensions until no new subgroup appears.
/// Throws CapExceeded if |G| > order_cap.
SubgroupLattice all_subgroups(const Group& g,
                              std::size_t order_cap = SubgroupLattice::kDefaultOrderCap);

/// All Sylow p-subgroups. If p does not divide |G| the answer is the trivial
/// subgroup alone. Throws if p is not prime.
std::vector<Subgroup> sylow_subgroups(const SubgroupLattice& lattice, const Group& g,
                                      std::uint64_t p);
std::vector<Subgroup> sylow_subgroups(const Group& g, std::uint64_t p);

}  // namespace gil
