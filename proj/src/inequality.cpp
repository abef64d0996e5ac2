#include "gil/inequality.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

#include "gil/error.hpp"

namespace gil {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  InequalitySpec run() {
    InequalitySpec spec;
    std::vector<InfoTerm> left = expr();
    std::vector<InfoTerm> right;
    skip();
    int sign = 1;  // right - left >= 0 uses sign = -1 on left
    if (pos_ < s_.size()) {
      if (s_.substr(pos_, 2) == ">=") {
        sign = 1;
      } else if (s_.substr(pos_, 2) == "<=") {
        sign = -1;
      } else {
        fail("expected '>=' or '<='");
      }
      pos_ += 2;
      right = expr();
      skip();
      if (pos_ < s_.size()) fail("unexpected trailing input");
    }
    // sign = 1: left - right >= 0; sign = -1: right - left >= 0.
    for (auto t : left) {
      t.coeff *= sign;
      spec.terms.push_back(t);
    }
    for (auto t : right) {
      t.coeff *= -sign;
      spec.terms.push_back(t);
    }
    spec.n_vars = std::max(1, max_var_);
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::vector<InfoTerm> expr() {
    std::vector<InfoTerm> out;
    long long sign = 1;
    skip();
    if (eat('-')) sign = -1;
    for (;;) {
      if (auto t = term(); t.coeff != 0) {
        t.coeff *= sign;
        out.push_back(t);
      }
      skip();
      if (eat('+')) {
        sign = 1;
      } else if (pos_ < s_.size() && s_[pos_] == '-' ) {
        ++pos_;
        sign = -1;
      } else {
        return out;
      }
    }
  }

  InfoTerm term() {
    skip();
    long long mult = 1;
    bool have_int = false;
    const std::size_t start = pos_;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      mult = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        if (mult > 100'000'000'000LL) fail("coefficient too large");
        mult = mult * 10 + (s_[pos_] - '0');
        ++pos_;
      }
      have_int = true;
    }
    skip();
    if (pos_ < s_.size() && (s_[pos_] == 'H' || s_[pos_] == 'I')) {
      InfoTerm t = quantity();
      t.coeff *= mult;
      return t;
    }
    // A bare integer is only allowed as the literal 0.
    if (have_int) {
      if (mult != 0) {
        pos_ = start;
        fail("expected a quantity after the coefficient");
      }
      return InfoTerm{0};
    }
    fail("expected H(...), I(...) or 0");
  }

  InfoTerm quantity() {
    InfoTerm t;
    const char head = s_[pos_++];
    expect('(');
    t.a = varlist();
    if (head == 'I') {
      t.kind = InfoTerm::Kind::I;
      expect(';');
      t.b = varlist();
    }
    if (eat('|')) t.c = varlist();
    expect(')');
    return t;
  }

  VarSet varlist() {
    VarSet out = 0;
    do {
      skip();
      if (pos_ >= s_.size() || s_[pos_] != 'X') fail("expected a variable X<digit>");
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        fail("expected a digit after 'X'");
      }
      const int index = s_[pos_] - '0';
      if (index < 1 || index > kMaxVars) fail("variable index outside 1..5");
      ++pos_;
      max_var_ = std::max(max_var_, index);
      out |= var_bit(index);
    } while (eat(','));
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int max_var_ = 0;
};

void add_h(std::map<VarSet, long long>& m, VarSet a, long long c) {
  if (a == 0 || c == 0) return;
  if ((m[a] += c) == 0) m.erase(a);
}

void expand(const InfoTerm& t, std::map<VarSet, long long>& m) {
  if (t.kind == InfoTerm::Kind::H) {
    add_h(m, t.a | t.c, t.coeff);
    add_h(m, t.c, -t.coeff);
  } else {
    add_h(m, t.a | t.c, t.coeff);
    add_h(m, t.b | t.c, t.coeff);
    add_h(m, t.a | t.b | t.c, -t.coeff);
    add_h(m, t.c, -t.coeff);
  }
}

// Drops conditioned-away variables and zero terms, orders I's arguments.
bool normalize(InfoTerm& t) {
  t.a &= static_cast<VarSet>(~t.c);
  if (t.kind == InfoTerm::Kind::I) {
    t.b &= static_cast<VarSet>(~t.c);
    if (t.b == 0) return false;
    if (t.b < t.a) std::swap(t.a, t.b);
  }
  return t.a != 0 && t.coeff != 0;
}

std::vector<InfoTerm> merge_terms(const std::vector<InfoTerm>& in) {
  std::vector<InfoTerm> out;
  for (auto t : in) {
    if (!normalize(t)) continue;
    auto same = std::find_if(out.begin(), out.end(), [&](const InfoTerm& u) {
      return u.kind == t.kind && u.a == t.a && u.b == t.b && u.c == t.c;
    });
    if (same == out.end()) {
      out.push_back(t);
    } else {
      same->coeff += t.coeff;
    }
  }
  std::erase_if(out, [](const InfoTerm& t) { return t.coeff == 0; });
  return out;
}

std::string quantity_text(const InfoTerm& t) {
  std::string s = t.kind == InfoTerm::Kind::H ? "H(" + varset_name(t.a)
                                              : "I(" + varset_name(t.a) + ";" + varset_name(t.b);
  if (t.c) s += "|" + varset_name(t.c);
  return s + ")";
}

template <class Item, class Print>
std::string join_side(const std::vector<Item>& items, Print print) {
  std::string s;
  for (const auto& [mag, what] : items) {
    if (!s.empty()) s += " + ";
    if (mag != 1) s += std::to_string(mag) + " ";
    s += print(what);
  }
  return s;
}

std::string two_sides(const std::string& neg, const std::string& pos) {
  if (neg.empty() && pos.empty()) return "0 >= 0";
  if (neg.empty()) return pos + " >= 0";
  if (pos.empty()) return neg + " <= 0";
  return neg + " <= " + pos;
}

}  // namespace

std::string varset_name(VarSet s) {
  std::string out;
  for (int i = 1; i <= kMaxVars; ++i) {
    if (s & var_bit(i)) {
      if (!out.empty()) out += ",";
      out += "X" + std::to_string(i);
    }
  }
  return out;
}

std::string varset_digits(VarSet s) {
  std::string out;
  for (int i = 1; i <= kMaxVars; ++i) {
    if (s & var_bit(i)) out += std::to_string(i);
  }
  return out;
}

InequalitySpec parse_inequality(std::string_view text, std::string id) {
  InequalitySpec spec = Parser(text).run();
  spec.id = std::move(id);
  spec.source_text = std::string(text);
  for (const auto& t : spec.terms) expand(t, spec.coeffs);
  spec.terms = merge_terms(spec.terms);
  return spec;
}

std::string entropy_form(const InequalitySpec& spec) {
  std::vector<std::pair<long long, VarSet>> neg, pos;
  for (auto [a, c] : spec.coeffs) (c < 0 ? neg : pos).emplace_back(c < 0 ? -c : c, a);
  auto h = [](VarSet a) { return "H(" + varset_name(a) + ")"; };
  return two_sides(join_side(neg, h), join_side(pos, h));
}

std::string pretty_print(const InequalitySpec& spec) {
  std::map<VarSet, long long> check;
  for (const auto& t : spec.terms) expand(t, check);
  if (check != spec.coeffs) return entropy_form(spec);
  std::vector<std::pair<long long, InfoTerm>> neg, pos;
  for (const auto& t : spec.terms) (t.coeff < 0 ? neg : pos).emplace_back(std::llabs(t.coeff), t);
  return two_sides(join_side(neg, quantity_text), join_side(pos, quantity_text));
}

std::string group_form(const InequalitySpec& spec) {
  long long total = 0;
  std::string lhs, rhs;
  auto put = [](std::string& side, const std::string& factor, long long times) {
    for (long long k = 0; k < times; ++k) side += factor;
  };
  for (auto [a, c] : spec.coeffs) {
    total += c;
    put(c > 0 ? lhs : rhs, "|G" + varset_digits(a) + "|", c > 0 ? c : -c);
  }
  if (total < 0) put(lhs, "|G|", -total);
  if (total > 0) put(rhs, "|G|", total);
  if (lhs.empty()) lhs = "1";
  if (rhs.empty()) rhs = "1";
  return lhs + " <= " + rhs;
}

VarPerm identity_var_perm() {
  VarPerm p{};
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  return p;
}

VarSet apply_perm(const VarPerm& p, VarSet s) {
  VarSet out = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    if (s & (1u << i)) out |= static_cast<VarSet>(1u << p[i]);
  }
  return out;
}

SymmetryGroup symmetry_group(const InequalitySpec& spec) {
  SymmetryGroup g;
  g.n_vars = spec.n_vars;
  VarPerm p = identity_var_perm();
  do {
    bool fixes = true;
    for (auto [a, c] : spec.coeffs) {
      if (spec.coeff(apply_perm(p, a)) != c) {
        fixes = false;
        break;
      }
    }
    if (fixes) g.perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + spec.n_vars));
  return g;
}

namespace {

struct BuiltinText {
  const char* id;
  const char* text;
};

constexpr BuiltinText kBuiltins[] = {
    {"ingleton", "I(X1;X2) <= I(X1;X2|X3) + I(X1;X2|X4) + I(X3;X4)"},
    {"dfz1", "I(X1;X2) <= I(X1;X2|X3) + I(X1;X2|X4) + I(X3;X4|X5) + I(X1;X5)"},
    {"dfz2", "I(X1;X2) <= I(X1;X2|X3) + I(X1;X3|X4) + I(X1;X4|X5) + I(X2;X5)"},
    {"dfz3", "I(X1;X2) <= I(X1;X3) + I(X1;X2|X4) + I(X2;X5|X3) + I(X1;X4|X3,X5)"},
    {"dfz4", "I(X1;X2) <= I(X1;X3) + I(X1;X2|X4,X5) + I(X2;X4|X3) + I(X1;X5|X3,X4)"},
    {"dfz5",
     "I(X1;X2) <= I(X1;X3) + I(X2;X4|X3) + I(X1;X5|X4) + I(X1;X2|X3,X5) + I(X2;X3|X4,X5)"},
    {"dfz6",
     "I(X1;X2) <= I(X1;X3) + I(X2;X4|X5) + I(X4;X5|X3) + I(X1;X2|X3,X4) + I(X1;X3|X4,X5)"},
    {"dfz7",
     "I(X1;X2) <= I(X2;X4) + I(X1;X3|X4) + I(X1;X5|X3) + I(X2;X4|X3,X5) + I(X1;X2|X4,X5)"},
    {"dfz8",
     "2 I(X1;X2) <= I(X3;X4) + I(X3,X4;X5) + I(X1;X2|X3) + I(X1;X2|X4) + I(X1;X2|X5)"},
    {"dfz9",
     "2 I(X1;X2) <= I(X1;X3) + I(X4;X5) + I(X1;X2|X4) + I(X1;X2|X5) + I(X2;X4,X5|X3)"},
    {"dfz10",
     "2 I(X1;X2) <= I(X3;X4) + I(X1;X5) + I(X1;X2|X3) + I(X1;X2|X4) + I(X2;X4|X5) + "
     "I(X1;X3|X4,X5)"},
};

const std::map<std::string, InequalitySpec, std::less<>>& builtin_table() {
  static const auto table = [] {
    std::map<std::string, InequalitySpec, std::less<>> m;
    for (const auto& b : kBuiltins) m.emplace(b.id, parse_inequality(b.text, b.id));
    return m;
  }();
  return table;
}

}  // namespace

const InequalitySpec& builtin(std::string_view id) {
  const auto& t = builtin_table();
  auto it = t.find(id);
  if (it == t.end()) throw UnknownName("unknown inequality '" + std::string(id) + "'");
  return it->second;
}

const std::vector<std::string>& builtin_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& b : kBuiltins) v.emplace_back(b.id);
    return v;
  }();
  return ids;
}

std::vector<std::string> dfz_ids() {
  const auto& all = builtin_ids();
  return {all.begin() + 1, all.end()};
}

bool is_builtin_id(std::string_view id) { return builtin_rank(id) < static_cast<int>(std::size(kBuiltins)); }

int builtin_rank(std::string_view id) {
  for (std::size_t i = 0; i < std::size(kBuiltins); ++i) {
    if (id == kBuiltins[i].id) return static_cast<int>(i);
  }
  return static_cast<int>(std::size(kBuiltins));
}

}  // namespace gil
