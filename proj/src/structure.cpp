#include "gil/structure.hpp"

#include "gil/lattice.hpp"

namespace gil {

std::map<int, std::size_t> element_order_histogram(const Group& g) {
  std::map<int, std::size_t> h;
  for (ElementIndex i = 0; i < g.order(); ++i) ++h[g.element_order(i)];
  return h;
}

std::map<std::size_t, std::size_t> subgroup_order_histogram(const Group& g) {
  std::map<std::size_t, std::size_t> h;
  const auto lat = all_subgroups(g);
  for (std::size_t i = 0; i < lat.size(); ++i) ++h[lat.order(i)];
  return h;
}

namespace {

constexpr ElementIndex kUnset = static_cast<ElementIndex>(-1);

class IsoSearch {
 public:
  IsoSearch(const Group& a, const Group& b) : a_(a), b_(b) {
    gens_ = generating_set(a, whole_group(a));
    images_.resize(gens_.size());
  }

  std::optional<std::vector<ElementIndex>> run() {
    if (gens_.empty()) return std::vector<ElementIndex>{0};
    if (assign(0)) return phi_;
    return std::nullopt;
  }

 private:
  // Extends the map over <g_0..g_level> and checks it stays an injective
  // homomorphism on that subgroup.
  bool consistent(std::size_t level) {
    phi_.assign(a_.order(), kUnset);
    std::vector<bool> used(b_.order(), false);
    std::vector<ElementIndex> list{0};
    phi_[0] = 0;
    used[0] = true;
    for (std::size_t head = 0; head < list.size(); ++head) {
      const ElementIndex x = list[head];
      for (std::size_t j = 0; j <= level; ++j) {
        const ElementIndex y = a_.mul(x, gens_[j]);
        const ElementIndex img = b_.mul(phi_[x], images_[j]);
        if (phi_[y] == kUnset) {
          if (used[img]) return false;
          used[img] = true;
          phi_[y] = img;
          list.push_back(y);
        } else if (phi_[y] != img) {
          return false;
        }
      }
    }
    return true;
  }

  bool assign(std::size_t level) {
    const int want = a_.element_order(gens_[level]);
    for (ElementIndex c = 1; c < b_.order(); ++c) {
      if (b_.element_order(c) != want) continue;
      images_[level] = c;
      if (!consistent(level)) continue;
      if (level + 1 == gens_.size()) return true;
      if (assign(level + 1)) return true;
    }
    return false;
  }

  const Group& a_;
  const Group& b_;
  std::vector<ElementIndex> gens_;
  std::vector<ElementIndex> images_;
  std::vector<ElementIndex> phi_;
};

}  // namespace

GroupInvariants group_invariants(const Group& g) {
  GroupInvariants inv;
  inv.order = g.order();
  inv.abelian = g.is_abelian();
  inv.element_orders = element_order_histogram(g);
  if (g.order() <= SubgroupLattice::kDefaultOrderCap) inv.subgroup_orders = subgroup_order_histogram(g);
  return inv;
}

std::optional<std::vector<ElementIndex>> find_isomorphism(const Group& a, const Group& b,
                                                          const GroupInvariants& ia,
                                                          const GroupInvariants& ib) {
  if (ia != ib) return std::nullopt;
  return IsoSearch(a, b).run();
}

std::optional<std::vector<ElementIndex>> find_isomorphism(const Group& a, const Group& b) {
  if (a.order() != b.order() || a.is_abelian() != b.is_abelian()) return std::nullopt;
  return find_isomorphism(a, b, group_invariants(a), group_invariants(b));
}

bool is_isomorphic(const Group& a, const Group& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace gil
