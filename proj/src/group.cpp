#include "gil/group.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <unordered_map>

#include "gil/error.hpp"

namespace gil {

// ---------------------------------------------------------------- ElementSet

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::vector<ElementIndex> ElementSet::members() const {
  std::vector<ElementIndex> out;
  out.reserve(count());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1) {
      out.push_back(static_cast<ElementIndex>(w * 64 + std::countr_zero(bits)));
    }
  }
  return out;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::size_t ElementSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ universe_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  const std::size_t n = std::min(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    const std::uint64_t low = diff & (~diff + 1);
    // The set holding the first differing element has the smaller next member.
    return (a.words_[i] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.words_.size() <=> b.words_.size();
}

// --------------------------------------------------------------------- Group


namespace {
std::atomic<std::uint64_t> next_group_id{1};
}

Group Group::generate(std::string name, int degree, const std::vector<Permutation>& generators,
                      std::size_t order_cap) {
  if (order_cap > std::numeric_limits<std::uint16_t>::max()) {
    throw Error("group order cap above 65535 is not supported");
  }
  auto data = std::make_shared<Data>();
  data->id = next_group_id.fetch_add(1);

  std::vector<Permutation> gens;
  for (const auto& p : generators) {
    if (p.degree() != degree) throw Error("generator degree does not match group degree");
    if (!p.is_identity() && std::find(gens.begin(), gens.end(), p) == gens.end()) {
      gens.push_back(p);
    }
  }

  // BFS over the right Cayley graph; parent/gen record a word for every element.
  std::vector<ElementIndex> parent{0};
  std::vector<std::uint32_t> via{0};
  data->elements.push_back(Permutation(degree));
  data->index.emplace(data->elements.back(), 0);
  std::vector<std::vector<ElementIndex>> right;  // right[gen][element]
  right.resize(gens.size());
  for (std::size_t head = 0; head < data->elements.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation y = data->elements[head] * gens[k];
      auto [it, inserted] =
          data->index.emplace(y, static_cast<ElementIndex>(data->elements.size()));
      if (inserted) {
        if (data->elements.size() >= order_cap) {
          throw CapExceeded("order of group " + name, data->elements.size() + 1, order_cap);
        }
        data->elements.push_back(std::move(y));
        parent.push_back(static_cast<ElementIndex>(head));
        via.push_back(static_cast<std::uint32_t>(k));
      }
      right[k].resize(data->elements.size());
      right[k][head] = it->second;
    }
  }
  const std::size_t n = data->elements.size();
  for (auto& r : right) r.resize(n);
  for (const auto& p : gens) data->generators.push_back(data->index.at(p));

  // mul(a, b) = right[via b](mul(a, parent b)), filled column by column in BFS order.
  data->mul.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) data->mul[a * n] = static_cast<std::uint16_t>(a);
  for (std::size_t b = 1; b < n; ++b) {
    const auto& r = right[via[b]];
    const std::size_t pb = parent[b];
    for (std::size_t a = 0; a < n; ++a) {
      data->mul[a * n + b] = static_cast<std::uint16_t>(r[data->mul[a * n + pb]]);
    }
  }
  data->inv.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (data->mul[a * n + b] == 0) {
        data->inv[a] = static_cast<ElementIndex>(b);
        break;
      }
    }
  }
  data->element_order.assign(n, 1);
  for (std::size_t a = 1; a < n; ++a) {
    int k = 1;
    for (std::size_t x = a; x != 0; x = data->mul[x * n + a]) ++k;
    data->element_order[a] = k;
  }

  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(degree));
  for (const auto& e : data->elements) {
    for (int i = 0; i < degree; ++i) mix(static_cast<std::uint64_t>(e[i]));
  }
  data->fingerprint = h;

  Group g;
  g.name_ = std::move(name);
  g.degree_ = degree;
  g.data_ = std::move(data);
  return g;
}

std::optional<ElementIndex> Group::find(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto it = data_->index.find(p);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

bool Group::is_abelian() const {
  const auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (mul(gens[i], gens[j]) != mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

// ----------------------------------------------------------------- Subgroups

void require_parent(const Group& g, const Subgroup& h) {
  if (h.parent != g.id() || h.members.universe() != g.order()) throw MismatchedParents();
}

namespace {

void require_same(const Subgroup& h, const Subgroup& k) {
  if (h.parent != k.parent || h.members.universe() != k.members.universe()) {
    throw MismatchedParents();
  }
}

}  // namespace

Subgroup closure(const Group& g, std::span<const ElementIndex> generators) {
  Subgroup out{ElementSet(g.order()), g.id()};
  std::vector<ElementIndex> gens;
  for (auto x : generators) {
    if (x >= g.order()) throw Error("generator index outside group");
    if (x != 0) gens.push_back(x);
  }
  std::vector<ElementIndex> list{0};
  out.members.set(0);
  for (std::size_t head = 0; head < list.size(); ++head) {
    for (auto s : gens) {
      const ElementIndex y = g.mul(list[head], s);
      if (!out.members.test(y)) {
        out.members.set(y);
        list.push_back(y);
      }
    }
  }
  return out;
}

Subgroup closure_of_cycles(const Group& g, const std::vector<std::string>& generators) {
  std::vector<ElementIndex> idx;
  for (const auto& text : generators) {
    const Permutation p = Permutation::parse(text, g.degree());
    auto i = g.find(p);
    if (!i) throw Error("permutation " + text + " is not an element of " + g.name());
    idx.push_back(*i);
  }
  return closure(g, idx);
}

Subgroup trivial_subgroup(const Group& g) {
  Subgroup out{ElementSet(g.order()), g.id()};
  out.members.set(0);
  return out;
}

Subgroup whole_group(const Group& g) {
  Subgroup out{ElementSet(g.order()), g.id()};
  for (ElementIndex i = 0; i < g.order(); ++i) out.members.set(i);
  return out;
}

Subgroup intersect(const Subgroup& h, const Subgroup& k) {
  require_same(h, k);
  return Subgroup{h.members & k.members, h.parent};
}

std::uint64_t set_product_order(const Subgroup& h, const Subgroup& k) {
  require_same(h, k);
  const std::uint64_t common = (h.members & k.members).count();
  return h.order() * k.order() / common;
}

ElementSet product_set(const Group& g, const Subgroup& h, const Subgroup& k) {
  require_parent(g, h);
  require_parent(g, k);
  ElementSet out(g.order());
  const auto hs = h.members.members();
  const auto ks = k.members.members();
  for (auto a : hs) {
    for (auto b : ks) out.set(g.mul(a, b));
  }
  return out;
}

bool is_product_subgroup(const Group& g, const Subgroup& h, const Subgroup& k) {
  const ElementSet prod = product_set(g, h, k);
  // HK contains 1; it is a subgroup iff it is closed under right
  // multiplication by the elements of H and K.
  const auto members = prod.members();
  for (const Subgroup* s : {&h, &k}) {
    for (auto y : s->members.members()) {
      for (auto x : members) {
        if (!prod.test(g.mul(x, y))) return false;
      }
    }
  }
  return true;
}

bool is_normal(const Group& g, const Subgroup& h, const Subgroup& ambient) {
  require_parent(g, h);
  require_parent(g, ambient);
  if (!h.members.is_subset_of(ambient.members)) {
    throw Error("is_normal: subgroup is not contained in the ambient subgroup");
  }
  const auto hs = h.members.members();
  for (auto x : ambient.members.members()) {
    for (auto a : hs) {
      if (!h.members.test(g.conj(x, a))) return false;
    }
  }
  return true;
}

bool is_normal(const Group& g, const Subgroup& h) {
  require_parent(g, h);
  const auto hs = h.members.members();
  for (auto x : g.generators()) {
    for (auto a : hs) {
      if (!h.members.test(g.conj(x, a))) return false;
    }
  }
  return true;
}

Subgroup conjugate(const Group& g, const Subgroup& h, ElementIndex x) {
  require_parent(g, h);
  Subgroup out{ElementSet(g.order()), g.id()};
  for (auto a : h.members.members()) out.members.set(g.conj(x, a));
  return out;
}

std::vector<Subgroup> conjugate_tuple(const Group& g, std::span<const Subgroup> tuple,
                                      ElementIndex x) {
  std::vector<Subgroup> out;
  out.reserve(tuple.size());
  for (const auto& h : tuple) out.push_back(conjugate(g, h, x));
  return out;
}

std::vector<ElementIndex> generating_set(const Group& g, const Subgroup& h) {
  require_parent(g, h);
  auto candidates = h.members.members();
  // Large element orders first keeps the generating sets short.
  std::stable_sort(candidates.begin(), candidates.end(), [&g](ElementIndex a, ElementIndex b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<ElementIndex> gens;
  Subgroup current = trivial_subgroup(g);
  for (auto x : candidates) {
    if (current.order() == h.order()) break;
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = closure(g, gens);
  }
  return gens;
}

}  // namespace gil
