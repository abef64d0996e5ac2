#include "gil/catalog.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gil/numtheory.hpp"
#include "gil/structure.hpp"

namespace gil {

namespace detail {
std::string_view builtin_catalog_json();
}

namespace {

std::string cycle_of(const std::vector<int>& points) {
  std::string s = "(";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(points[i]);
  }
  return s + ")";
}

// 1-based n-cycle on first..first+n-1.
std::string long_cycle(int first, int n) {
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), first);
  return cycle_of(pts);
}

std::string from_map(int degree, const std::vector<int>& images0) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = images0[i];
  return Permutation::from_images(images).to_cycles();
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

void check_degree(int degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw Error("degree " + std::to_string(degree) + " is outside 1.." +
                std::to_string(kMaxDegree));
  }
}

std::string order_tag(std::size_t n) { return "order:" + std::to_string(n); }

}  // namespace

GroupDef cyclic(int n) {
  if (n < 1) throw Error("cyclic: n must be positive");
  check_degree(n);
  GroupDef d{"C" + std::to_string(n), n, {}, static_cast<std::size_t>(n), {"cyclic", "abelian"}};
  if (n > 1) d.generators.push_back(long_cycle(1, n));
  d.tags.push_back(order_tag(d.expected_order));
  return d;
}

GroupDef dihedral(int n) {
  if (n < 1) throw Error("dihedral: n must be positive");
  if (n <= 2) {
    // D2 = C2, D4 = C2 x C2 as permutations of small degree.
    GroupDef d = n == 1 ? cyclic(2) : direct_product(cyclic(2), cyclic(2));
    d.name = "D" + std::to_string(2 * n);
    return d;
  }
  check_degree(n);
  std::vector<int> refl(n);
  for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
  GroupDef d{"D" + std::to_string(2 * n), n, {long_cycle(1, n), from_map(n, refl)},
             static_cast<std::size_t>(2 * n), {"dihedral"}};
  d.tags.push_back(order_tag(d.expected_order));
  return d;
}

GroupDef symmetric(int n) {
  if (n < 1) throw Error("symmetric: n must be positive");
  check_degree(n);
  GroupDef d{"S" + std::to_string(n), n, {}, static_cast<std::size_t>(factorial(n)), {"symmetric"}};
  if (n >= 2) d.generators.push_back(long_cycle(1, n));
  if (n >= 3) d.generators.push_back("(1,2)");
  d.tags.push_back(order_tag(d.expected_order));
  return d;
}

GroupDef alternating(int n) {
  if (n < 1) throw Error("alternating: n must be positive");
  check_degree(n);
  const std::size_t order = n < 2 ? 1 : factorial(n) / 2;
  GroupDef d{"A" + std::to_string(n), n, {}, order, {"alternating"}};
  for (int i = 1; i + 2 <= n; ++i) d.generators.push_back(cycle_of({i, i + 1, i + 2}));
  d.tags.push_back(order_tag(order));
  return d;
}

GroupDef direct_product(const GroupDef& a, const GroupDef& b) {
  const int degree = a.degree + b.degree;
  check_degree(degree);
  GroupDef d{a.name + "x" + b.name, degree, {}, a.expected_order * b.expected_order, {}};
  for (const auto& s : a.generators) {
    d.generators.push_back(Permutation::parse(s, a.degree).extended(degree).to_cycles());
  }
  for (const auto& s : b.generators) {
    const auto p = Permutation::parse(s, b.degree);
    std::vector<int> images(degree);
    std::iota(images.begin(), images.end(), 0);
    for (int i = 0; i < b.degree; ++i) images[a.degree + i] = a.degree + p[i];
    d.generators.push_back(Permutation::from_images(images).to_cycles());
  }
  d.tags.push_back(order_tag(d.expected_order));
  return d;
}

GroupDef semidirect_cyclic(int n, int m, int action_exponent) {
  if (n < 1 || m < 1) throw Error("semidirect_cyclic: n and m must be positive");
  const long long k = ((action_exponent % n) + n) % n;
  long long power = 1 % n;
  int mult_order = 0;  // multiplicative order of k mod n, if a unit
  for (int j = 1; j <= m; ++j) {
    power = power * k % n;
    if (mult_order == 0 && power == 1 % n) mult_order = j;
  }
  if (power != 1 % n) {
    throw Error("semidirect_cyclic: " + std::to_string(action_exponent) + "^" +
                std::to_string(m) + " is not 1 mod " + std::to_string(n));
  }
  // Affine maps x -> x + 1 and x -> kx on Z_n; when k has order below m the
  // multiplier also cycles m extra points so that C_m acts faithfully.
  const int extra = mult_order == m ? 0 : m;
  const int degree = n + extra;
  check_degree(degree);
  std::vector<int> mult(degree);
  for (int x = 0; x < n; ++x) mult[x] = static_cast<int>(k * x % n);
  for (int j = 0; j < extra; ++j) mult[n + j] = n + (j + 1) % extra;
  GroupDef d{"C" + std::to_string(n) + ":C" + std::to_string(m), degree, {},
             static_cast<std::size_t>(n) * static_cast<std::size_t>(m), {}};
  if (n > 1) d.generators.push_back(long_cycle(1, n));
  const std::string mg = from_map(degree, mult);
  if (mg != "()") d.generators.push_back(mg);
  if (k == 1 % n) d.tags.push_back("abelian");
  d.tags.push_back(order_tag(d.expected_order));
  return d;
}

GroupDef projective_linear(int p) {
  if (!is_prime(static_cast<std::uint64_t>(p))) throw Error("projective_linear: p must be prime");
  const int degree = p + 1;  // points 0..p-1 and infinity (= p)
  check_degree(degree);
  int root = 1;
  for (int a = 1; a < p; ++a) {
    int x = 1, ord = 0;
    do {
      x = x * a % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) {
      root = a;
      break;
    }
  }
  auto inv_mod = [p](int a) {
    for (int b = 1; b < p; ++b) {
      if (a * b % p == 1) return b;
    }
    return 0;
  };
  std::vector<int> shift(degree), scale(degree), flip(degree);
  for (int x = 0; x < p; ++x) {
    shift[x] = (x + 1) % p;
    scale[x] = x * root % p;
    flip[x] = x == 0 ? p : (p - inv_mod(x)) % p;  // x -> -1/x
  }
  shift[p] = scale[p] = p;
  flip[p] = 0;
  GroupDef d{"PGL2(F" + std::to_string(p) + ")", degree, {},
             static_cast<std::size_t>((p + 1) * p * (p - 1)), {}};
  for (const auto* m : {&shift, &scale, &flip}) {
    const auto s = from_map(degree, *m);
    if (s != "()") d.generators.push_back(s);
  }
  d.tags.push_back(order_tag(d.expected_order));
  return d;
}

Group realize(const GroupDef& def, std::size_t order_cap) {
  check_degree(def.degree);
  std::vector<Permutation> gens;
  for (const auto& s : def.generators) gens.push_back(Permutation::parse(s, def.degree));
  return Group::generate(def.name, def.degree, gens, order_cap);
}

// ------------------------------------------------------------------- index

bool CatalogIndex::contains(std::string_view name) const {
  const std::string key(name);
  return entries.count(key) || aliases.count(key);
}

const GroupDef& CatalogIndex::get(std::string_view name) const {
  std::string key(name);
  if (auto a = aliases.find(key); a != aliases.end()) key = a->second;
  auto it = entries.find(key);
  if (it == entries.end()) throw UnknownName("unknown group '" + std::string(name) + "'");
  return it->second;
}

Group CatalogIndex::group(std::string_view name) const {
  const auto& def = get(name);
  return realize(def, std::max(def.expected_order, Group::kDefaultOrderCap));
}

std::vector<std::string> CatalogIndex::names_in_range(std::size_t lo, std::size_t hi) const {
  std::vector<std::string> out;
  for (auto it = by_order.lower_bound(lo); it != by_order.end() && it->first <= hi; ++it) {
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return out;
}

namespace {

using Kind = CatalogError::Kind;
using nlohmann::json;

GroupDef parse_entry(const json& j, std::size_t pos) {
  std::string where = "entry #" + std::to_string(pos);
  try {
    GroupDef d;
    d.name = j.at("name").get<std::string>();
    where = d.name;
    d.degree = j.at("degree").get<int>();
    d.generators = j.at("generators").get<std::vector<std::string>>();
    d.expected_order = j.at("expected_order").get<std::size_t>();
    if (j.contains("tags")) d.tags = j.at("tags").get<std::vector<std::string>>();
    if (d.name.empty()) throw Error("empty name");
    check_degree(d.degree);
    for (const auto& s : d.generators) Permutation::parse(s, d.degree);
    return d;
  } catch (const CatalogError&) {
    throw;
  } catch (const std::exception& e) {
    throw CatalogError(Kind::Parse, where, "catalog: " + where + ": " + e.what());
  }
}

}  // namespace

CatalogIndex parse_catalog(std::string_view json_text, const CatalogLoadOptions& options) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw CatalogError(Kind::Parse, "", std::string("catalog: ") + e.what());
  }

  CatalogIndex idx;
  const json* groups = &doc;
  try {
    if (doc.is_object()) {
      groups = &doc.at("groups");
      if (doc.contains("aliases")) {
        idx.aliases = doc.at("aliases").get<std::map<std::string, std::string>>();
      }
      if (doc.contains("expected_counts")) {
        for (const auto& [k, v] : doc.at("expected_counts").items()) {
          idx.expected_counts[std::stoull(k)] = v.get<std::size_t>();
        }
      }
    }
    if (!groups->is_array()) throw Error("'groups' is not an array");
  } catch (const std::exception& e) {
    throw CatalogError(Kind::Parse, "", std::string("catalog: ") + e.what());
  }

  std::map<std::string, Group> realized;
  std::map<std::string, GroupInvariants> invariants;
  for (std::size_t pos = 0; pos < groups->size(); ++pos) {
    GroupDef d = parse_entry((*groups)[pos], pos);
    if (idx.entries.count(d.name)) {
      throw CatalogError(Kind::Parse, d.name, "catalog: duplicate name '" + d.name + "'");
    }
    std::size_t got = 0;
    try {
      Group g = realize(d, d.expected_order);
      got = g.order();
      if (got == d.expected_order) realized.emplace(d.name, std::move(g));
    } catch (const CapExceeded&) {
      got = 0;
    }
    if (got != d.expected_order) {
      throw CatalogError(Kind::OrderMismatch, d.name,
                         "catalog: " + d.name + " generates order " +
                             (got ? std::to_string(got) : "above " + std::to_string(d.expected_order)) +
                             ", expected " + std::to_string(d.expected_order));
    }
    idx.by_order[d.expected_order].push_back(d.name);
    idx.entries.emplace(d.name, std::move(d));
  }
  for (const auto& [alias, target] : idx.aliases) {
    if (!idx.entries.count(target)) {
      throw CatalogError(Kind::Parse, alias, "catalog: alias " + alias + " -> unknown " + target);
    }
  }

  if (options.check_isomorphism) {
    for (const auto& [order, names] : idx.by_order) {
      for (const auto& n : names) invariants.emplace(n, group_invariants(realized.at(n)));
      for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          const auto& a = names[j];
          const auto& b = names[i];
          if (find_isomorphism(realized.at(a), realized.at(b), invariants.at(a), invariants.at(b))) {
            throw CatalogError(Kind::DuplicateClass, b,
                               "catalog: " + b + " is isomorphic to " + a);
          }
        }
      }
    }
  }
  if (options.check_counts) {
    for (const auto& [order, want] : idx.expected_counts) {
      auto it = idx.by_order.find(order);
      const std::size_t have = it == idx.by_order.end() ? 0 : it->second.size();
      if (have != want) {
        throw CatalogError(Kind::CountMismatch, "order:" + std::to_string(order),
                           "catalog: order " + std::to_string(order) + " has " +
                               std::to_string(have) + " classes, expected " + std::to_string(want));
      }
    }
  }
  return idx;
}

CatalogIndex load_catalog(const std::filesystem::path& path, const CatalogLoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw CatalogError(Kind::Parse, "", "catalog: cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str(), options);
}

std::string_view builtin_catalog_text() { return detail::builtin_catalog_json(); }

const CatalogIndex& builtin_catalog() {
  static const CatalogIndex idx = parse_catalog(builtin_catalog_text());
  return idx;
}

// ----------------------------------------------------------- printed tuples

PaperTuple paper_tuple(std::string_view name) {
  if (name == "s4-dfz1") {
    return {"S4",
            {1, 2, 3, 4, 5},
            {{"(3,4)", "(2,4,3)"},
             {"(1,3)", "(1,3,2)"},
             {"(1,2)(3,4)", "(3,4)"},
             {"(1,3)(2,4)", "(2,4)"},
             {"(1,4)(2,3)", "(1,3)(2,4)"}}};
  }
  if (name == "s4-dfz3") {
    return {"S4",
            {1, 2, 3, 4, 5},
            {{"(3,4)", "(2,4,3)"},
             {"(1,2)(3,4)", "(3,4)"},
             {"(1,2)(3,4)", "(1,4)(2,3)", "(1,3)"},
             {"(1,3)", "(1,3,2)"},
             {"(1,3)(2,4)", "(2,4)"}}};
  }
  if (name == "d20-example") {
    // r = (1,...,10), s = (2,10)(3,9)(4,8)(5,7); G1 = <r s r^-1>, G2 = <s>, G5 = <s, r^5>.
    return {"D20",
            {1, 2, 5},
            {{"(1,9)(2,8)(3,7)(4,6)"},
             {"(2,10)(3,9)(4,8)(5,7)"},
             {"(2,10)(3,9)(4,8)(5,7)", "(1,6)(2,7)(3,8)(4,9)(5,10)"}}};
  }
  throw UnknownName("unknown paper tuple '" + std::string(name) + "'");
}

std::vector<std::string> paper_tuple_names() { return {"s4-dfz1", "s4-dfz3", "d20-example"}; }

}  // namespace gil
