#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gil/group.hpp"
#include "gil/inequality.hpp"

namespace gil {

using BigInt = boost::multiprecision::cpp_int;

/// |G_A| for every subset A of the n positions; orders[0] is |G|.
struct EntropyVector {
  int n = 0;
  std::uint64_t parent_order = 1;
  std::array<std::uint64_t, 1u << kMaxVars> orders{};

  std::uint64_t order_of(VarSet a) const { return orders[a]; }
  friend bool operator==(const EntropyVector&, const EntropyVector&) = default;
};

/// Intersection orders of a tuple of 1..5 subgroups, each subset built from
/// the subset without its top position by one AND.
EntropyVector entropy_vector(const Group& g, std::span<const Subgroup> tuple);

struct ExactVerdict {
  bool holds = true;
  /// Sides of the multiplicative form; holds iff lhs_product <= rhs_product.
  BigInt lhs_product = 1;
  BigInt rhs_product = 1;
  /// lhs_product / rhs_product in lowest terms.
  BigInt ratio_num = 1;
  BigInt ratio_den = 1;

  bool violated() const { return !holds; }
  bool tight() const { return lhs_product == rhs_product; }
};

/// Decides sum_A c_A log(|G|/|G_A|) >= 0 without logarithms:
///   prod_{c_A>0} |G_A|^c_A * |G|^max(0,-s)  <=  prod_{c_A<0} |G_A|^-c_A * |G|^max(0,s)
/// with s = sum_A c_A. Precondition: spec.n_vars <= ev.n.
ExactVerdict evaluate(const InequalitySpec& spec, const EntropyVector& ev);

/// The factors of both sides as (base subset, exponent) lists; subset 0
/// stands for |G|. Used by the search to compare without allocating.
class CompiledInequality {
 public:
  explicit CompiledInequality(const InequalitySpec& spec);

  /// Exact strict-violation test (lhs > rhs). Uses 128-bit arithmetic and
  /// falls back to big integers on overflow.
  bool violated(const std::uint64_t* orders) const;
  /// -1, 0, +1 for lhs <, ==, > rhs.
  int compare(const std::uint64_t* orders) const;

  const std::vector<std::pair<VarSet, int>>& lhs() const { return lhs_; }
  const std::vector<std::pair<VarSet, int>>& rhs() const { return rhs_; }

 private:
  std::vector<std::pair<VarSet, int>> lhs_;
  std::vector<std::pair<VarSet, int>> rhs_;
};

/// A positive rational kept in lowest terms.
struct GroupRational {
  BigInt num = 1;
  BigInt den = 1;

  static GroupRational make(BigInt num, BigInt den);
  bool is_integer() const { return den == 1; }
  friend bool operator==(const GroupRational&, const GroupRational&) = default;
  friend bool operator<(const GroupRational& x, const GroupRational& y) {
    return x.num * y.den < y.num * x.den;
  }
};

/// |G_abc| |G_c| / (|G_ac| |G_bc|). Pass the whole group as c for the
/// unconditional quantity.
GroupRational gi(const Group& g, const Subgroup& a, const Subgroup& b, const Subgroup& c);
GroupRational gi_from_orders(std::uint64_t abc, std::uint64_t c, std::uint64_t ac,
                             std::uint64_t bc);

/// v_q(num) - v_q(den). Throws if q is not prime.
int valuation(const GroupRational& x, std::uint64_t q);

}  // namespace gil
