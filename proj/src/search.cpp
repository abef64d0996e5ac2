#include "gil/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "gil/error.hpp"
#include "gil/numtheory.hpp"

namespace gil {

// ------------------------------------------------------------- flags & names

namespace {

enum Rule : int { kTheory, kOrderClass, kConjugacy, kSymmetry, kRuleCount };
constexpr const char* kRuleNames[kRuleCount] = {"theory_common_info", "order_class", "conjugacy",
                                                "ineq_symmetry"};
constexpr const char* kTheoryNames[4] = {"abelian_group", "nested", "normal", "product_subgroup"};

}  // namespace

PruneFlags parse_prune_flags(std::string_view text) {
  if (text == "all") return PruneFlags::all();
  if (text == "none" || text.empty()) return PruneFlags::none();
  PruneFlags f = PruneFlags::none();
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const auto item = text.substr(start, end - start);
    if (item == "theory_common_info") {
      f.theory_common_info = true;
    } else if (item == "order_class") {
      f.order_class = true;
    } else if (item == "conjugacy") {
      f.conjugacy = true;
    } else if (item == "ineq_symmetry") {
      f.ineq_symmetry = true;
    } else {
      throw UnknownName("unknown prune rule '" + std::string(item) + "'");
    }
    start = end + 1;
  }
  return f;
}

std::string to_string(const PruneFlags& f) {
  std::string s;
  const bool on[kRuleCount] = {f.theory_common_info, f.order_class, f.conjugacy, f.ineq_symmetry};
  for (int r = 0; r < kRuleCount; ++r) {
    if (!on[r]) continue;
    if (!s.empty()) s += ",";
    s += kRuleNames[r];
  }
  return s.empty() ? "none" : s;
}

std::string to_string(TheoryRule r) { return kTheoryNames[static_cast<int>(r)]; }

std::string to_string(OrderClass::Kind k) {
  switch (k) {
    case OrderClass::Kind::Abelian:
      return "abelian";
    case OrderClass::Kind::PqSafe:
      return "pq_safe";
    case OrderClass::Kind::P2qNormalSylowQ:
      return "p2q_normal_sylow_q";
    case OrderClass::Kind::Pq2NormalSylowQ:
      return "pq2_normal_sylow_q";
    case OrderClass::Kind::Unconstrained:
      break;
  }
  return "unconstrained";
}

std::uint64_t PruneReport::pruned_total() const {
  std::uint64_t s = 0;
  for (const auto& [rule, c] : tuples_pruned_by_rule) s += c;
  return s;
}

void PruneReport::merge(const PruneReport& o) {
  tuples_total += o.tuples_total;
  for (const auto& [r, c] : o.tuples_pruned_by_rule) tuples_pruned_by_rule[r] += c;
  for (const auto& [r, c] : o.theory_detail) theory_detail[r] += c;
  tuples_evaluated += o.tuples_evaluated;
  violations_found += o.violations_found;
  tight_evaluations += o.tight_evaluations;
  wall_time += o.wall_time;
}

// --------------------------------------------------------- structural rules

std::optional<TheoryRule> prune_applicable(const Group& g, const Subgroup& pos1,
                                           const Subgroup& pos2) {
  require_parent(g, pos1);
  require_parent(g, pos2);
  if (g.is_abelian()) return TheoryRule::AbelianGroup;
  if (pos1.members.is_subset_of(pos2.members) || pos2.members.is_subset_of(pos1.members)) {
    return TheoryRule::Nested;
  }
  if (is_normal(g, pos1) || is_normal(g, pos2)) return TheoryRule::Normal;
  if (is_product_subgroup(g, pos1, pos2)) return TheoryRule::ProductSubgroup;
  return std::nullopt;
}

OrderClass order_class(const Group& g, const SubgroupLattice& lattice) {
  if (lattice.group_id() != g.id()) throw MismatchedParents();
  OrderClass oc;
  if (g.is_abelian()) {
    oc.kind = OrderClass::Kind::Abelian;
    return oc;
  }
  const auto f = factorize(g.order());
  if (f.size() != 2) return oc;
  const auto [p1, e1] = f[0];
  const auto [p2, e2] = f[1];
  if (e1 == 1 && e2 == 1) {
    oc.kind = OrderClass::Kind::PqSafe;
    oc.p = p1;
    oc.q = p2;
    return oc;
  }
  if (e1 + e2 != 3) return oc;
  const std::uint64_t squared = e1 == 2 ? p1 : p2;
  const std::uint64_t single = e1 == 2 ? p2 : p1;
  auto unique_sylow = [&](std::uint64_t p) { return lattice.sylow_index().at(p).size() == 1; };
  if (unique_sylow(single)) {
    oc.kind = OrderClass::Kind::P2qNormalSylowQ;
    oc.p = squared;
    oc.q = single;
  } else if (unique_sylow(squared)) {
    oc.kind = OrderClass::Kind::Pq2NormalSylowQ;
    oc.p = single;
    oc.q = squared;
  }
  return oc;
}

OrderClass order_class(const Group& g) { return order_class(g, all_subgroups(g)); }

std::vector<std::string> subgroup_generator_strings(const Group& g, const SubgroupLattice& lattice,
                                                    std::size_t i) {
  std::vector<std::string> out;
  for (auto x : lattice.generators(i)) out.push_back(g.element(x).to_cycles());
  return out;
}

// ------------------------------------------------------------------- engine

namespace {

struct Target {
  std::string id;
  InequalitySpec spec;
  bool theorem_covered = false;  // an unmodified builtin
};

struct Plan {
  const Group* g = nullptr;
  const SubgroupLattice* lat = nullptr;
  int k = 0;
  std::size_t n = 0;
  std::vector<Target> targets;
  std::vector<CompiledInequality> compiled;
  bool require_all = false;
  std::optional<std::size_t> emit_limit;

  bool use_theory = false;
  bool use_class = false;
  bool use_conj = false;
  bool use_sym = false;
  std::optional<Rule> skip_group;
  std::optional<TheoryRule> skip_detail;
  std::uint64_t restrict_order = 0;

  std::vector<std::uint8_t> pair_rule;  // 0 = none, else TheoryRule + 1
  std::vector<std::uint32_t> meet;
  std::vector<std::uint64_t> order;
  std::uint32_t top = 0;
  std::vector<VarPerm> sym;  // non-identity
  std::vector<std::uint32_t> class_min;
  std::vector<std::vector<ElementIndex>> to_min;
  std::vector<ElementIndex> all_elements;
  std::vector<std::uint64_t> pow_n;

  std::uint32_t meet_of(std::uint32_t a, std::uint32_t b) const { return meet[a * n + b]; }
};

std::vector<VarPerm> common_symmetries(const std::vector<Target>& targets, int k) {
  std::vector<VarPerm> out;
  VarPerm p = identity_var_perm();
  do {
    if (p == identity_var_perm()) continue;
    bool fixes = true;
    for (const auto& t : targets) {
      for (auto [a, c] : t.spec.coeffs) {
        if (t.spec.coeff(apply_perm(p, a)) != c) {
          fixes = false;
          break;
        }
      }
      if (!fixes) break;
    }
    if (fixes) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + k));
  return out;
}

Plan make_plan(const Group& g, const SubgroupLattice& lat, std::vector<Target> targets,
               const PruneFlags& prune, int arity, bool require_all) {
  if (lat.group_id() != g.id()) throw MismatchedParents();
  if (targets.empty()) throw Error("scan: no inequalities selected");
  Plan P;
  P.g = &g;
  P.lat = &lat;
  P.n = lat.size();
  P.require_all = require_all;
  int need = 1;
  for (const auto& t : targets) need = std::max(need, t.spec.n_vars);
  if (arity != 0 && arity != need) {
    throw Error("scan: tuple arity " + std::to_string(arity) + " does not match the " +
                std::to_string(need) + " variables of the selected inequalities");
  }
  P.k = need;
  const bool all_covered = std::all_of(targets.begin(), targets.end(),
                                       [](const Target& t) { return t.theorem_covered; });
  const bool all_dfz = all_covered && std::none_of(targets.begin(), targets.end(),
                                                   [](const Target& t) { return t.id == "ingleton"; });
  P.use_theory = prune.theory_common_info && all_covered;
  P.use_class = prune.order_class && all_dfz;
  P.use_conj = prune.conjugacy;
  P.use_sym = prune.ineq_symmetry;
  for (const auto& t : targets) P.compiled.emplace_back(t.spec);
  P.targets = std::move(targets);

  P.pow_n.assign(P.k + 1, 1);
  for (int r = 1; r <= P.k; ++r) P.pow_n[r] = P.pow_n[r - 1] * P.n;

  if (P.use_theory && g.is_abelian()) {
    P.skip_group = kTheory;
    P.skip_detail = TheoryRule::AbelianGroup;
    return P;
  }
  if (P.use_class) {
    const auto oc = order_class(g, lat);
    if (oc.kind == OrderClass::Kind::Abelian || oc.kind == OrderClass::Kind::PqSafe) {
      P.skip_group = kOrderClass;
      return P;
    }
    if (oc.kind == OrderClass::Kind::P2qNormalSylowQ || oc.kind == OrderClass::Kind::Pq2NormalSylowQ) {
      P.restrict_order = oc.p;
    }
  }

  const std::size_t n = P.n;
  P.top = static_cast<std::uint32_t>(n - 1);
  P.order.resize(n);
  for (std::size_t i = 0; i < n; ++i) P.order[i] = lat.order(i);
  P.meet.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto m = lat.find(lat[i].members & lat[j].members);
      const auto v = static_cast<std::uint32_t>(*m);
      P.meet[i * n + j] = P.meet[j * n + i] = v;
    }
  }
  if (P.use_theory) {
    P.pair_rule.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::uint8_t r = 0;
        const auto m = P.meet[i * n + j];
        if (m == i || m == j) {
          r = 1 + static_cast<int>(TheoryRule::Nested);
        } else if (lat.is_normal(i) || lat.is_normal(j)) {
          r = 1 + static_cast<int>(TheoryRule::Normal);
        } else if (g.order() % (P.order[i] * P.order[j] / P.order[m]) == 0 &&
                   is_product_subgroup(g, lat[i], lat[j])) {
          r = 1 + static_cast<int>(TheoryRule::ProductSubgroup);
        }
        P.pair_rule[i * n + j] = r;
      }
    }
  }
  if (P.use_conj) {
    P.class_min.resize(n);
    P.to_min.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      P.class_min[i] = static_cast<std::uint32_t>(lat.conjugacy_classes()[lat.class_of(i)].front());
      for (ElementIndex x = 0; x < g.order(); ++x) {
        if (lat.conjugate(x, i) == P.class_min[i]) P.to_min[i].push_back(x);
      }
    }
    P.all_elements.resize(g.order());
    for (ElementIndex x = 0; x < g.order(); ++x) P.all_elements[x] = x;
  }
  if (P.use_sym) P.sym = common_symmetries(P.targets, P.k);
  return P;
}

struct RawHit {
  std::uint32_t target = 0;  // index into Plan::targets; unused when require_all
  std::array<std::uint32_t, kMaxVars> tuple{};
  std::array<std::uint64_t, 1u << kMaxVars> orders{};

  bool operator<(const RawHit& o) const {
    if (target != o.target) return target < o.target;
    return tuple < o.tuple;
  }
};

class Walker {
 public:
  explicit Walker(const Plan& plan) : P_(plan) {
    if (P_.use_conj) stab_[0] = P_.all_elements;
  }

  // Visits levels below `split`, storing every surviving prefix.
  void collect(int split, std::vector<std::array<std::uint32_t, 2>>& items) {
    split_ = split;
    items_ = &items;
    visit(0);
    items_ = nullptr;
  }

  void run_prefix(const std::array<std::uint32_t, 2>& item, int split) {
    split_ = -1;
    for (int level = 0; level < split; ++level) place(level, item[level]);
    visit(split);
  }

  void finish(PruneReport& rep) const {
    for (int r = 0; r < kRuleCount; ++r) {
      if (pruned_[r]) rep.tuples_pruned_by_rule[kRuleNames[r]] += pruned_[r];
    }
    for (int r = 0; r < 4; ++r) {
      if (theory_[r]) rep.theory_detail[kTheoryNames[r]] += theory_[r];
    }
    rep.tuples_evaluated += evaluated_;
    rep.violations_found += violations_;
    rep.tight_evaluations += tight_;
  }

  std::vector<RawHit>& hits() {
    trim(true);
    return hits_;
  }

 private:
  void visit(int level) {
    if (level == P_.k) {
      leaf();
      return;
    }
    if (level == split_) {
      items_->push_back({tuple_[0], level > 1 ? tuple_[1] : 0});
      return;
    }
    const std::uint64_t below = P_.pow_n[P_.k - level - 1];
    for (std::uint32_t h = 0; h < P_.n; ++h) {
      if (level < 2 && P_.restrict_order && P_.order[h] != P_.restrict_order) {
        pruned_[kOrderClass] += below;
        continue;
      }
      if (level == 1 && P_.use_theory) {
        if (const auto r = P_.pair_rule[tuple_[0] * P_.n + h]) {
          pruned_[kTheory] += below;
          theory_[r - 1] += below;
          continue;
        }
      }
      if (P_.use_conj && !conj_minimal(level, h)) {
        pruned_[kConjugacy] += below;
        continue;
      }
      place(level, h);
      visit(level + 1);
    }
  }

  bool conj_minimal(int level, std::uint32_t h) const {
    if (level == 0) return P_.class_min[h] == h;
    for (auto x : stab_[level]) {
      if (P_.lat->conjugate(x, h) < h) return false;
    }
    return true;
  }

  void place(int level, std::uint32_t h) {
    tuple_[level] = h;
    const unsigned bit = 1u << level;
    sub_[bit] = h;
    orders_[bit] = P_.order[h];
    for (unsigned rest = 1; rest < bit; ++rest) {
      const auto m = P_.meet_of(sub_[rest], h);
      sub_[rest | bit] = m;
      orders_[rest | bit] = P_.order[m];
    }
    if (P_.use_conj && level + 1 < P_.k) {
      auto& next = stab_[level + 1];
      next.clear();
      for (auto x : stab_[level]) {
        if (P_.lat->conjugate(x, h) == h) next.push_back(x);
      }
    }
  }

  // Whether the tuple is the least in its orbit under the common symmetries
  // combined with simultaneous conjugation (when enabled).
  bool sym_canonical() {
    const int k = P_.k;
    std::array<std::uint32_t, kMaxVars> u{};
    for (const auto& pi : P_.sym) {
      for (int i = 0; i < k; ++i) u[pi[i]] = tuple_[i];
      if (!P_.use_conj) {
        if (std::lexicographical_compare(u.begin(), u.begin() + k, tuple_.begin(), tuple_.begin() + k)) {
          return false;
        }
        continue;
      }
      const std::uint32_t m0 = P_.class_min[u[0]];
      if (m0 < tuple_[0]) return false;
      if (m0 > tuple_[0]) continue;
      const std::vector<ElementIndex>* xs = &P_.to_min[u[0]];
      bool decided = false;
      for (int pos = 1; pos < k && !decided; ++pos) {
        std::uint32_t m = UINT32_MAX;
        for (auto x : *xs) m = std::min(m, P_.lat->conjugate(x, u[pos]));
        if (m < tuple_[pos]) return false;
        if (m > tuple_[pos]) {
          decided = true;
          break;
        }
        auto& buf = scratch_[pos & 1];
        buf.clear();
        for (auto x : *xs) {
          if (P_.lat->conjugate(x, u[pos]) == m) buf.push_back(x);
        }
        xs = &buf;
      }
    }
    return true;
  }

  void leaf() {
    if (!P_.sym.empty() && !sym_canonical()) {
      ++pruned_[kSymmetry];
      return;
    }
    ++evaluated_;
    orders_[0] = P_.order[P_.top];
    bool all = true;
    for (std::size_t i = 0; i < P_.compiled.size(); ++i) {
      const int c = P_.compiled[i].compare(orders_.data());
      if (c == 0) ++tight_;
      if (c <= 0) {
        all = false;
        continue;
      }
      ++violations_;
      if (!P_.require_all) record(static_cast<std::uint32_t>(i));
    }
    if (P_.require_all && all) record(0);
  }

  void record(std::uint32_t target) {
    RawHit h;
    h.target = target;
    for (int i = 0; i < P_.k; ++i) h.tuple[i] = tuple_[i];
    h.orders = orders_;
    hits_.push_back(h);
    trim(false);
  }

  void trim(bool final) {
    if (!P_.emit_limit) return;
    const std::size_t cap = *P_.emit_limit;
    if (!final && hits_.size() < 2 * cap + 64) return;
    std::sort(hits_.begin(), hits_.end());
    if (hits_.size() > cap) hits_.resize(cap);
  }

  const Plan& P_;
  int split_ = -1;
  std::vector<std::array<std::uint32_t, 2>>* items_ = nullptr;
  std::array<std::uint32_t, kMaxVars> tuple_{};
  std::array<std::uint32_t, 1u << kMaxVars> sub_{};
  std::array<std::uint64_t, 1u << kMaxVars> orders_{};
  std::array<std::vector<ElementIndex>, kMaxVars + 1> stab_;
  std::array<std::vector<ElementIndex>, 2> scratch_;
  std::uint64_t pruned_[kRuleCount] = {};
  std::uint64_t theory_[4] = {};
  std::uint64_t evaluated_ = 0;
  std::uint64_t violations_ = 0;
  std::uint64_t tight_ = 0;
  std::vector<RawHit> hits_;
};

struct EngineOutput {
  std::vector<RawHit> hits;
  PruneReport report;
};

EngineOutput run_engine(const Plan& P, int workers) {
  const auto t0 = std::chrono::steady_clock::now();
  EngineOutput out;
  out.report.tuples_total = P.pow_n[P.k];
  if (P.skip_group) {
    out.report.tuples_pruned_by_rule[kRuleNames[*P.skip_group]] = P.pow_n[P.k];
    if (P.skip_detail) out.report.theory_detail[to_string(*P.skip_detail)] = P.pow_n[P.k];
    out.report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
  }

  const int split = std::min(2, P.k);
  std::vector<std::array<std::uint32_t, 2>> items;
  Walker head(P);
  head.collect(split, items);
  head.finish(out.report);  // prunes above the split level

  const int nw = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(1, items.size()))));
  std::vector<Walker> walkers;
  walkers.reserve(nw);
  for (int w = 0; w < nw; ++w) walkers.emplace_back(P);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&](Walker& walker) {
    try {
      for (std::size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1)) {
        walker.run_prefix(items[i], split);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(items.size());
    }
  };
  if (nw == 1) {
    body(walkers[0]);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < nw; ++w) threads.emplace_back(body, std::ref(walkers[w]));
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (auto* w : {&head}) {
    auto& h = w->hits();
    out.hits.insert(out.hits.end(), h.begin(), h.end());
  }
  for (auto& w : walkers) {
    w.finish(out.report);
    auto& h = w.hits();
    out.hits.insert(out.hits.end(), h.begin(), h.end());
  }
  std::sort(out.hits.begin(), out.hits.end());
  if (P.emit_limit && out.hits.size() > *P.emit_limit) out.hits.resize(*P.emit_limit);
  out.report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

EntropyVector vector_of(const Plan& P, const RawHit& h) {
  EntropyVector ev;
  ev.n = P.k;
  ev.parent_order = P.g->order();
  for (unsigned a = 0; a < (1u << P.k); ++a) ev.orders[a] = h.orders[a];
  ev.orders[0] = P.g->order();
  return ev;
}

std::vector<std::string> ordered_ids(std::vector<std::string> ids) {
  std::stable_sort(ids.begin(), ids.end(), [](const std::string& a, const std::string& b) {
    const int ra = builtin_rank(a), rb = builtin_rank(b);
    if (ra != rb) return ra < rb;
    return a < b;
  });
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace

ScanResult scan_group(const Group& g, const SubgroupLattice& lattice, const SearchConfig& cfg) {
  std::vector<Target> targets;
  for (const auto& id : ordered_ids(cfg.inequality_ids)) {
    if (auto it = cfg.custom.find(id); it != cfg.custom.end()) {
      targets.push_back({id, it->second, false});
    } else {
      targets.push_back({id, builtin(id), true});
    }
  }
  Plan P = make_plan(g, lattice, std::move(targets), cfg.prune, cfg.tuple_arity, false);
  P.emit_limit = cfg.emit_limit;
  auto raw = run_engine(P, cfg.worker_count);

  ScanResult result;
  result.report = std::move(raw.report);
  for (const auto& h : raw.hits) {
    Witness w;
    w.group_name = g.name();
    w.inequality_id = P.targets[h.target].id;
    for (int i = 0; i < P.k; ++i) {
      w.subgroup_indices.push_back(h.tuple[i]);
      w.subgroup_generators.push_back(subgroup_generator_strings(g, lattice, h.tuple[i]));
    }
    w.subset_orders = vector_of(P, h);
    const auto v = evaluate(P.targets[h.target].spec, w.subset_orders);
    w.lhs_product = v.lhs_product;
    w.rhs_product = v.rhs_product;
    result.witnesses.push_back(std::move(w));
  }
  return result;
}

ScanResult scan_group(const Group& g, const SearchConfig& cfg) {
  return scan_group(g, all_subgroups(g, cfg.lattice_cap), cfg);
}

SimultaneousResult check_simultaneous(const Group& g,
                                      const std::pair<InequalitySpec, InequalitySpec>& pair,
                                      PruneFlags prune, int worker_count) {
  auto target = [](const InequalitySpec& s) {
    const bool covered = is_builtin_id(s.id) && builtin(s.id).coeffs == s.coeffs;
    return Target{s.id.empty() ? "custom" : s.id, s, covered};
  };
  const auto lattice = all_subgroups(g);
  Plan P = make_plan(g, lattice, {target(pair.first), target(pair.second)}, prune, 0, true);
  auto raw = run_engine(P, worker_count);
  SimultaneousResult out;
  out.report = std::move(raw.report);
  for (const auto& h : raw.hits) {
    SimultaneousHit s;
    for (int i = 0; i < P.k; ++i) {
      s.subgroup_indices.push_back(h.tuple[i]);
      s.subgroup_generators.push_back(subgroup_generator_strings(g, lattice, h.tuple[i]));
    }
    s.subset_orders = vector_of(P, h);
    out.hits.push_back(std::move(s));
  }
  return out;
}

std::vector<SurveyRow> survey(const CatalogIndex& cat, std::pair<std::size_t, std::size_t> orders,
                              const SearchConfig& cfg) {
  std::vector<SurveyRow> rows;
  for (const auto& name : cat.names_in_range(orders.first, orders.second)) {
    SurveyRow row;
    row.group_name = name;
    row.group_order = cat.get(name).expected_order;
    try {
      const Group g = cat.group(name);
      auto r = scan_group(g, cfg);
      row.witness_count = r.report.violations_found;
      row.report = std::move(r.report);
      row.witnesses = std::move(r.witnesses);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gil
