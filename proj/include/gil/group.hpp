#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gil/permutation.hpp"

namespace gil {

using ElementIndex = std::uint32_t;

/// Fixed-universe bitset over the element indices of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }
  void set(ElementIndex i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(ElementIndex i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool is_subset_of(const ElementSet& other) const;
  std::vector<ElementIndex> members() const;

  ElementSet& operator&=(const ElementSet& other);
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }
  std::size_t hash() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  /// Ordering of the sorted member lists, compared lexicographically.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b);

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// A finite permutation group materialized as an element list with full
/// multiplication and inverse tables. Element 0 is the identity.
///
/// Copies share the tables and compare as the same parent for subgroups.
class Group {
 public:
  static constexpr std::size_t kDefaultOrderCap = 5040;

  /// Enumerates the group generated by `generators` (all of degree `degree`).
  /// Throws CapExceeded when the order passes `order_cap`.
  static Group generate(std::string name, int degree,
                        const std::vector<Permutation>& generators,
                        std::size_t order_cap = kDefaultOrderCap);

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  std::size_t order() const { return data_->elements.size(); }

  ElementIndex mul(ElementIndex a, ElementIndex b) const {
    return data_->mul[static_cast<std::size_t>(a) * order() + b];
  }
  ElementIndex inv(ElementIndex a) const { return data_->inv[a]; }
  /// x * h * x^-1
  ElementIndex conj(ElementIndex x, ElementIndex h) const {
    return mul(mul(x, h), inv(x));
  }
  int element_order(ElementIndex a) const { return data_->element_order[a]; }

  const Permutation& element(ElementIndex i) const { return data_->elements[i]; }
  std::span<const Permutation> elements() const { return data_->elements; }
  std::optional<ElementIndex> find(const Permutation& p) const;
  /// Element indices of the generators the group was built from.
  std::span<const ElementIndex> generators() const { return data_->generators; }

  /// Identity of this construction; subgroups carry it as their parent.
  std::uint64_t id() const { return data_->id; }
  /// FNV-1a hash of the element table (degree and every image, in order).
  std::uint64_t fingerprint() const { return data_->fingerprint; }

  bool is_abelian() const;

 private:
  struct Data {
    std::uint64_t id = 0;
    std::uint64_t fingerprint = 0;
    std::vector<Permutation> elements;
    std::unordered_map<Permutation, ElementIndex, PermutationHash> index;
    std::vector<std::uint16_t> mul;
    std::vector<ElementIndex> inv;
    std::vector<int> element_order;
    std::vector<ElementIndex> generators;
  };
  std::string name_;
  int degree_ = 1;
  std::shared_ptr<const Data> data_;
};

/// A subgroup of a parent Group, stored as a bitset over parent indices.
struct Subgroup {
  ElementSet members;
  std::uint64_t parent = 0;

  std::size_t order() const { return members.count(); }
  bool contains(ElementIndex i) const { return members.test(i); }
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

/// Smallest subgroup containing `generators` (empty set gives the trivial group).
Subgroup closure(const Group& g, std::span<const ElementIndex> generators);
/// Closure of permutations given in cycle notation; each must lie in `g`.
Subgroup closure_of_cycles(const Group& g, const std::vector<std::string>& generators);
Subgroup trivial_subgroup(const Group& g);
Subgroup whole_group(const Group& g);

/// Bitwise AND; intersections of subgroups need no re-closure.
Subgroup intersect(const Subgroup& h, const Subgroup& k);
/// |HK| = |H||K|/|H∩K|.
std::uint64_t set_product_order(const Subgroup& h, const Subgroup& k);
/// Explicit product set HK as a bitset.
ElementSet product_set(const Group& g, const Subgroup& h, const Subgroup& k);
/// Whether HK is closed, tested on the explicit product set.
bool is_product_subgroup(const Group& g, const Subgroup& h, const Subgroup& k);
/// Whether `h` is normal in `ambient`; throws if h is not contained in ambient.
bool is_normal(const Group& g, const Subgroup& h, const Subgroup& ambient);
bool is_normal(const Group& g, const Subgroup& h);
/// x H x^-1
Subgroup conjugate(const Group& g, const Subgroup& h, ElementIndex x);
std::vector<Subgroup> conjugate_tuple(const Group& g, std::span<const Subgroup> tuple,
                                      ElementIndex x);
/// Greedy small generating set, taken in element-index order.
std::vector<ElementIndex> generating_set(const Group& g, const Subgroup& h);

void require_parent(const Group& g, const Subgroup& h);

}  // namespace gil
