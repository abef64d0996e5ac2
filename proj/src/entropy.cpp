#include "gil/entropy.hpp"

#include <bit>

#include <boost/integer/common_factor.hpp>

#include "gil/error.hpp"
#include "gil/numtheory.hpp"

namespace gil {

EntropyVector entropy_vector(const Group& g, std::span<const Subgroup> tuple) {
  if (tuple.empty() || tuple.size() > static_cast<std::size_t>(kMaxVars)) {
    throw Error("entropy_vector: tuple size must be 1..5");
  }
  for (const auto& h : tuple) require_parent(g, h);
  EntropyVector ev;
  ev.n = static_cast<int>(tuple.size());
  ev.parent_order = g.order();
  ev.orders[0] = g.order();
  const unsigned full = 1u << ev.n;
  std::vector<ElementSet> sets(full);
  for (unsigned a = 1; a < full; ++a) {
    const int top = std::bit_width(a) - 1;
    const unsigned rest = a & ~(1u << top);
    sets[a] = rest ? sets[rest] & tuple[top].members : tuple[top].members;
    ev.orders[a] = sets[a].count();
  }
  return ev;
}

namespace {

void side_factors(const InequalitySpec& spec, std::vector<std::pair<VarSet, int>>& lhs,
                  std::vector<std::pair<VarSet, int>>& rhs) {
  long long total = 0;
  for (auto [a, c] : spec.coeffs) {
    total += c;
    if (c > 0) lhs.emplace_back(a, static_cast<int>(c));
    if (c < 0) rhs.emplace_back(a, static_cast<int>(-c));
  }
  if (total < 0) lhs.emplace_back(VarSet{0}, static_cast<int>(-total));
  if (total > 0) rhs.emplace_back(VarSet{0}, static_cast<int>(total));
}

BigInt big_product(const std::vector<std::pair<VarSet, int>>& side, const std::uint64_t* orders) {
  BigInt p = 1;
  for (auto [a, e] : side) p *= boost::multiprecision::pow(BigInt(orders[a]), e);
  return p;
}

using u128 = unsigned __int128;

// False on overflow.
bool small_product(const std::vector<std::pair<VarSet, int>>& side, const std::uint64_t* orders,
                   u128& out) {
  u128 p = 1;
  for (auto [a, e] : side) {
    const std::uint64_t base = orders[a];
    for (int k = 0; k < e; ++k) {
      if (__builtin_mul_overflow(p, static_cast<u128>(base), &p)) return false;
    }
  }
  out = p;
  return true;
}

}  // namespace

ExactVerdict evaluate(const InequalitySpec& spec, const EntropyVector& ev) {
  if (spec.n_vars > ev.n) throw Error("evaluate: inequality uses more variables than the tuple");
  std::vector<std::pair<VarSet, int>> lhs, rhs;
  side_factors(spec, lhs, rhs);
  ExactVerdict v;
  v.lhs_product = big_product(lhs, ev.orders.data());
  v.rhs_product = big_product(rhs, ev.orders.data());
  v.holds = v.lhs_product <= v.rhs_product;
  const BigInt d = boost::integer::gcd(v.lhs_product, v.rhs_product);
  v.ratio_num = v.lhs_product / d;
  v.ratio_den = v.rhs_product / d;
  return v;
}

CompiledInequality::CompiledInequality(const InequalitySpec& spec) { side_factors(spec, lhs_, rhs_); }

int CompiledInequality::compare(const std::uint64_t* orders) const {
  u128 l = 0, r = 0;
  if (small_product(lhs_, orders, l) && small_product(rhs_, orders, r)) {
    return l < r ? -1 : (l > r ? 1 : 0);
  }
  const BigInt bl = big_product(lhs_, orders), br = big_product(rhs_, orders);
  return bl < br ? -1 : (bl > br ? 1 : 0);
}

bool CompiledInequality::violated(const std::uint64_t* orders) const { return compare(orders) > 0; }

GroupRational GroupRational::make(BigInt num, BigInt den) {
  if (num <= 0 || den <= 0) throw Error("GroupRational: terms must be positive");
  const BigInt d = boost::integer::gcd(num, den);
  return GroupRational{num / d, den / d};
}

GroupRational gi_from_orders(std::uint64_t abc, std::uint64_t c, std::uint64_t ac,
                             std::uint64_t bc) {
  return GroupRational::make(BigInt(abc) * c, BigInt(ac) * bc);
}

GroupRational gi(const Group& g, const Subgroup& a, const Subgroup& b, const Subgroup& c) {
  require_parent(g, a);
  require_parent(g, b);
  require_parent(g, c);
  const Subgroup ac = intersect(a, c);
  const Subgroup bc = intersect(b, c);
  return gi_from_orders(intersect(ac, b).order(), c.order(), ac.order(), bc.order());
}

int valuation(const GroupRational& x, std::uint64_t q) {
  if (!is_prime(q)) throw Error("valuation: " + std::to_string(q) + " is not prime");
  auto v = [q](BigInt n) {
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    return e;
  };
  return v(x.num) - v(x.den);
}

}  // namespace gil
