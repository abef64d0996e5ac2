#include "gil/lattice.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "gil/error.hpp"
#include "gil/numtheory.hpp"

namespace gil {

namespace {

// <H, x> grown from H's member list.
ElementSet extend(const Group& g, const ElementSet& h, std::vector<ElementIndex> gens,
                  ElementIndex x) {
  ElementSet out = h;
  std::vector<ElementIndex> list = h.members();
  gens.push_back(x);
  if (!out.test(x)) {
    // Seed with the new element; BFS closes under right multiplication.
    out.set(x);
    list.push_back(x);
  }
  for (std::size_t head = 0; head < list.size(); ++head) {
    for (auto s : gens) {
      const ElementIndex y = g.mul(list[head], s);
      if (!out.test(y)) {
        out.set(y);
        list.push_back(y);
      }
    }
  }
  return out;
}

bool is_closed(const Group& g, const ElementSet& s) {
  if (!s.test(0)) return false;
  const auto m = s.members();
  for (auto a : m) {
    if (!s.test(g.inv(a))) return false;
    for (auto b : m) {
      if (!s.test(g.mul(a, b))) return false;
    }
  }
  return true;
}

}  // namespace

SubgroupLattice all_subgroups(const Group& g, std::size_t order_cap) {
  if (g.order() > order_cap) throw CapExceeded("lattice: group order", g.order(), order_cap);

  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> found;
  std::vector<std::vector<ElementIndex>> found_gens;
  std::vector<ElementIndex> cyclic_gens;  // one generator per cyclic subgroup
  for (ElementIndex x = 0; x < g.order(); ++x) {
    const std::array<ElementIndex, 1> one{x};
    ElementSet c = closure(g, one).members;
    if (seen.insert(c).second) {
      found.push_back(std::move(c));
      found_gens.push_back({x});
      cyclic_gens.push_back(x);
    }
  }
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (auto x : cyclic_gens) {
      if (found[head].test(x)) continue;
      ElementSet k = extend(g, found[head], found_gens[head], x);
      if (seen.insert(k).second) {
        found.push_back(std::move(k));
        auto gens = found_gens[head];
        gens.push_back(x);
        found_gens.push_back(std::move(gens));
      }
    }
  }
  return SubgroupLattice::from_sets(g, std::move(found));
}

SubgroupLattice SubgroupLattice::from_sets(const Group& g, std::vector<ElementSet> sets) {
  SubgroupLattice lat;
  lat.group_id_ = g.id();
  lat.fingerprint_ = g.fingerprint();
  lat.group_order_ = g.order();

  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
    const auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].universe() != g.order()) throw Error("lattice: set has the wrong universe");
    if (!is_closed(g, sets[i])) throw Error("lattice: set is not a subgroup");
    if (!lat.index_.emplace(sets[i], i).second) throw Error("lattice: duplicate subgroup");
  }
  const std::size_t n = sets.size();
  for (auto& s : sets) {
    lat.orders_.push_back(s.count());
    lat.subgroups_.push_back(Subgroup{std::move(s), g.id()});
  }
  for (const auto& h : lat.subgroups_) lat.generators_.push_back(generating_set(g, h));

  // Conjugation action on subgroups, one row per element.
  lat.conj_.assign(g.order() * n, 0);
  std::vector<ElementIndex> image(g.order());
  for (ElementIndex x = 0; x < g.order(); ++x) {
    for (ElementIndex a = 0; a < g.order(); ++a) image[a] = g.conj(x, a);
    for (std::size_t i = 0; i < n; ++i) {
      ElementSet c(g.order());
      for (std::uint64_t w = 0; w < lat.subgroups_[i].members.words().size(); ++w) {
        for (std::uint64_t bits = lat.subgroups_[i].members.words()[w]; bits; bits &= bits - 1) {
          c.set(image[w * 64 + std::countr_zero(bits)]);
        }
      }
      auto it = lat.index_.find(c);
      if (it == lat.index_.end()) throw Error("lattice: not closed under conjugation");
      lat.conj_[static_cast<std::size_t>(x) * n + i] = static_cast<std::uint32_t>(it->second);
    }
  }

  lat.class_of_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lat.class_of_[i] != n) continue;
    std::vector<std::size_t> cls;
    for (ElementIndex x = 0; x < g.order(); ++x) {
      const std::size_t j = lat.conjugate(x, i);
      if (lat.class_of_[j] == n) {
        lat.class_of_[j] = lat.classes_.size();
        cls.push_back(j);
      }
    }
    std::sort(cls.begin(), cls.end());
    lat.classes_.push_back(std::move(cls));
  }
  lat.normal_.resize(n);
  for (std::size_t i = 0; i < n; ++i) lat.normal_[i] = lat.classes_[lat.class_of_[i]].size() == 1;

  for (auto [p, e] : factorize(g.order())) {
    std::uint64_t pe = 1;
    for (int k = 0; k < e; ++k) pe *= p;
    auto& list = lat.sylow_[p];
    for (std::size_t i = 0; i < n; ++i) {
      if (lat.orders_[i] == pe) list.push_back(i);
    }
  }
  return lat;
}

std::optional<std::size_t> SubgroupLattice::find(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Subgroup> sylow_subgroups(const SubgroupLattice& lattice, const Group& g,
                                      std::uint64_t p) {
  if (!is_prime(p)) throw Error("sylow_subgroups: " + std::to_string(p) + " is not prime");
  if (lattice.group_id() != g.id()) throw MismatchedParents();
  auto it = lattice.sylow_index().find(p);
  if (it == lattice.sylow_index().end()) return {trivial_subgroup(g)};
  std::vector<Subgroup> out;
  for (auto i : it->second) out.push_back(lattice[i]);
  return out;
}

std::vector<Subgroup> sylow_subgroups(const Group& g, std::uint64_t p) {
  if (!is_prime(p)) throw Error("sylow_subgroups: " + std::to_string(p) + " is not prime");
  return sylow_subgroups(all_subgroups(g), g, p);
}

}  // namespace gil
