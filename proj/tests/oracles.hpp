#pragma once

// Reference implementations used only to cross-check the library. They share
// no code with it beyond Group's element list and Permutation's accessors.

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "gil/group.hpp"
#include "gil/inequality.hpp"

namespace oracle {

using Images = std::vector<int>;
using Members = std::vector<gil::ElementIndex>;  // sorted

inline Images images_of(const gil::Permutation& p) {
  Images v(p.degree());
  for (int i = 0; i < p.degree(); ++i) v[i] = p[i];
  return v;
}

// x then y.
inline Images compose(const Images& x, const Images& y) {
  Images out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = y[x[i]];
  return out;
}

inline std::map<Images, gil::ElementIndex> element_map(const gil::Group& g) {
  std::map<Images, gil::ElementIndex> m;
  for (gil::ElementIndex i = 0; i < g.order(); ++i) m.emplace(images_of(g.element(i)), i);
  return m;
}

// Plain breadth-first closure under right multiplication by generators.
inline Members closure(const gil::Group& g, const std::map<Images, gil::ElementIndex>& index,
                       const std::vector<gil::ElementIndex>& gens) {
  Images id(g.degree());
  for (int i = 0; i < g.degree(); ++i) id[i] = i;
  std::set<Images> seen = {id};
  std::vector<Images> frontier = {id};
  std::vector<Images> gi;
  for (auto x : gens) gi.push_back(images_of(g.element(x)));
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& h : frontier) {
      for (const auto& x : gi) {
        auto y = compose(h, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  Members out;
  for (const auto& s : seen) out.push_back(index.at(s));
  std::sort(out.begin(), out.end());
  return out;
}

// Every subgroup of a group of order n is generated by at most floor(log2 n)
// elements, so closing every such subset of G finds them all.
inline std::set<Members> all_subgroups(const gil::Group& g) {
  const auto index = element_map(g);
  const int n = static_cast<int>(g.order());
  const int rank = n <= 1 ? 0 : static_cast<int>(std::bit_width(static_cast<unsigned>(n))) - 1;
  std::set<Members> out;
  std::vector<gil::ElementIndex> pick;
  auto rec = [&](auto&& self, int from) -> void {
    out.insert(closure(g, index, pick));
    if (static_cast<int>(pick.size()) == rank) return;
    for (int x = from; x < n; ++x) {
      pick.push_back(static_cast<gil::ElementIndex>(x));
      self(self, x + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline Members intersect(const Members& a, const Members& b) {
  Members out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

// prod_A (|G| / |G_A|)^{c_A} >= 1, i.e. sum_A c_A H(X_A) >= 0.
struct Verdict {
  bool holds;
  Rational ratio;
};

inline Verdict evaluate(const gil::InequalitySpec& spec, std::size_t group_order,
                        const std::vector<Members>& tuple) {
  Rational r(1);
  for (const auto& [subset, c] : spec.coeffs) {
    Members m;
    bool first = true;
    for (int i = 0; i < gil::kMaxVars; ++i) {
      if (!(subset & (1u << i))) continue;
      m = first ? tuple.at(i) : intersect(m, tuple.at(i));
      first = false;
    }
    const Rational base(BigInt(group_order), BigInt(m.size()));
    for (long long k = 0; k < (c < 0 ? -c : c); ++k) r = c > 0 ? r * base : r / base;
  }
  return {r >= Rational(1), r};
}

}  // namespace oracle
