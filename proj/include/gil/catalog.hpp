#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gil/error.hpp"
#include "gil/group.hpp"

namespace gil {

/// A named group given by permutation generators in cycle notation.
struct GroupDef {
  std::string name;
  int degree = 1;
  std::vector<std::string> generators;
  std::size_t expected_order = 1;
  std::vector<std::string> tags;
};

// Named constructors. Points are 1..degree; all return checked definitions.
GroupDef cyclic(int n);
/// Dihedral group of order 2n, named "D<2n>"; r = n-cycle, s = i -> -i.
GroupDef dihedral(int n);
GroupDef symmetric(int n);
GroupDef alternating(int n);
GroupDef direct_product(const GroupDef& a, const GroupDef& b);
/// C_n x| C_m where the generator of C_m acts by x -> x^k. Requires
/// k^m = 1 (mod n); throws otherwise.
GroupDef semidirect_cyclic(int n, int m, int action_exponent);
/// PGL_2(F_p) acting on the p+1 points of the projective line.
GroupDef projective_linear(int p);

Group realize(const GroupDef& def, std::size_t order_cap = Group::kDefaultOrderCap);

class CatalogError : public Error {
 public:
  enum class Kind { Parse, OrderMismatch, DuplicateClass, CountMismatch };
  CatalogError(Kind kind, std::string entry, const std::string& message)
      : Error(message), kind_(kind), entry_(std::move(entry)) {}
  Kind kind() const { return kind_; }
  const std::string& entry() const { return entry_; }

 private:
  Kind kind_;
  std::string entry_;
};

struct CatalogIndex {
  std::map<std::string, GroupDef> entries;
  /// order -> names, in file order
  std::map<std::size_t, std::vector<std::string>> by_order;
  std::map<std::string, std::string> aliases;
  /// Isomorphism-class counts the file claims to be complete for.
  std::map<std::size_t, std::size_t> expected_counts;

  bool contains(std::string_view name) const;
  /// Resolves aliases; throws UnknownName.
  const GroupDef& get(std::string_view name) const;
  Group group(std::string_view name) const;
  /// Names with lo <= order <= hi, ordered by order then file order.
  std::vector<std::string> names_in_range(std::size_t lo, std::size_t hi) const;
};

struct CatalogLoadOptions {
  bool check_isomorphism = true;
  bool check_counts = true;
};

/// Parses and validates a catalog document: every entry must close to its
/// expected order, entries of equal order must be pairwise non-isomorphic,
/// and per-order counts must match `expected_counts` when present.
CatalogIndex parse_catalog(std::string_view json_text, const CatalogLoadOptions& options = {});
CatalogIndex load_catalog(const std::filesystem::path& path,
                          const CatalogLoadOptions& options = {});
/// The catalog shipped in data/catalog.json, validated once.
const CatalogIndex& builtin_catalog();
std::string_view builtin_catalog_text();

/// A published subgroup tuple: generators per position.
struct PaperTuple {
  std::string group;
  std::vector<int> positions;  // 1-based variable indices
  std::vector<std::vector<std::string>> generators;
};

/// One of "s4-dfz1", "s4-dfz3", "d20-example"; throws UnknownName.
PaperTuple paper_tuple(std::string_view name);
std::vector<std::string> paper_tuple_names();

}  // namespace gil
