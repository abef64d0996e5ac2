#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gil {

inline constexpr int kMaxVars = 5;

/// Subset of the variables X1..X5; bit i-1 stands for X_i.
using VarSet = std::uint8_t;

constexpr VarSet var_bit(int i) { return static_cast<VarSet>(1u << (i - 1)); }

/// One information quantity times an integer, as written in an expression.
/// Kind H is H(a|c); kind I is I(a;b|c). An empty `c` means unconditional.
struct InfoTerm {
  enum class Kind { H, I };
  long long coeff = 1;
  Kind kind = Kind::H;
  VarSet a = 0;
  VarSet b = 0;
  VarSet c = 0;

  friend bool operator==(const InfoTerm&, const InfoTerm&) = default;
};

/// Sum over nonempty A of c_A H(X_A) >= 0.
struct InequalitySpec {
  std::string id;
  std::string source_text;
  int n_vars = 1;
  /// Nonzero coefficients only, keyed by subset.
  std::map<VarSet, long long> coeffs;
  /// The quantities the expression was written with, merged and moved to one
  /// side. Only used for printing; `coeffs` is authoritative.
  std::vector<InfoTerm> terms;

  long long coeff(VarSet a) const {
    auto it = coeffs.find(a);
    return it == coeffs.end() ? 0 : it->second;
  }
};

/// Parses `expr (>=|<=) expr`, or a bare `expr` read as `expr >= 0`.
/// Throws ParseError (with a character offset) on bad syntax or a variable
/// index outside 1..5.
InequalitySpec parse_inequality(std::string_view text, std::string id = "");

/// Canonical text; parse_inequality(pretty_print(s)).coeffs == s.coeffs.
std::string pretty_print(const InequalitySpec& spec);
/// Same inequality over joint entropies only, e.g. "H(X1) + H(X2) <= H(X1,X2)".
std::string entropy_form(const InequalitySpec& spec);
/// Multiplicative form in subgroup orders, e.g. "|G12||G13| <= |G1||G123|".
std::string group_form(const InequalitySpec& spec);

std::string varset_name(VarSet s);  // "X1,X3"
std::string varset_digits(VarSet s);  // "13"

/// A permutation of the variables, 0-based: X_{i+1} -> X_{images[i]+1}.
using VarPerm = std::array<std::uint8_t, kMaxVars>;

VarPerm identity_var_perm();
VarSet apply_perm(const VarPerm& p, VarSet s);

/// Every variable permutation fixing the coefficient vector.
struct SymmetryGroup {
  int n_vars = 1;
  std::vector<VarPerm> perms;  // identity first
};

SymmetryGroup symmetry_group(const InequalitySpec& spec);

/// "ingleton", "dfz1", ..., "dfz10". Throws UnknownName.
const InequalitySpec& builtin(std::string_view id);
const std::vector<std::string>& builtin_ids();
/// The ten five-variable ids, dfz1..dfz10.
std::vector<std::string> dfz_ids();
bool is_builtin_id(std::string_view id);
/// Sort key for ids: builtins in their listed order, then other ids by name.
int builtin_rank(std::string_view id);

}  // namespace gil
