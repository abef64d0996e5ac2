#include "gil/commands.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gil/entropy.hpp"
#include "gil/error.hpp"
#include "gil/lattice_cache.hpp"
#include "gil/paper_claims.hpp"
#include "gil/structure.hpp"

namespace gil {

using nlohmann::json;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

json config_json(const CommandOptions& opt) {
  json j = {{"ineqs", opt.ineqs}, {"prune", opt.prune}, {"jobs", opt.jobs}, {"use_cache", opt.use_cache}};
  if (!opt.defines.empty()) j["defines"] = opt.defines;
  if (opt.max_order) j["max_order"] = *opt.max_order;
  if (opt.emit_limit) j["emit_limit"] = *opt.emit_limit;
  if (opt.catalog) j["catalog"] = opt.catalog->string();
  if (opt.cache_dir) j["cache_dir"] = opt.cache_dir->string();
  return j;
}

std::map<std::string, InequalitySpec> parse_defines(const std::vector<std::string>& defines) {
  std::map<std::string, InequalitySpec> out;
  for (const auto& d : defines) {
    const auto eq = d.find('=');
    if (eq == std::string::npos || eq == 0) throw Error("--define expects ID=INEQUALITY, got '" + d + "'");
    const std::string id = trim(std::string_view(d).substr(0, eq));
    out.insert_or_assign(id, parse_inequality(std::string_view(d).substr(eq + 1), id));
  }
  return out;
}

std::vector<std::string> selected_ids(const CommandOptions& opt) {
  if (opt.ineqs == "all") return dfz_ids();
  if (opt.ineqs == "every") return builtin_ids();
  auto ids = split(opt.ineqs, ',');
  if (std::any_of(ids.begin(), ids.end(), [](const std::string& s) { return s.empty(); })) {
    throw Error("empty name in --ineqs '" + opt.ineqs + "'");
  }
  return ids;
}

Group lookup_group(const CatalogIndex& cat, std::string_view ref) { return cat.group(ref); }

std::string md_escape(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string witness_markdown(const std::vector<Witness>& ws) {
  std::ostringstream md;
  md << "| # | inequality | tuple | lhs | rhs |\n|---|---|---|---|---|\n";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    md << "| " << i + 1 << " | " << ws[i].inequality_id << " | `" << tuple_text(ws[i].subgroup_generators)
       << "` | " << ws[i].lhs_product << " | " << ws[i].rhs_product << " |\n";
  }
  return md.str();
}

std::string report_markdown(const PruneReport& r) {
  std::ostringstream md;
  md << "- tuples: " << r.tuples_total << " total, " << r.tuples_evaluated << " evaluated, "
     << r.pruned_total() << " pruned\n";
  for (const auto& [rule, n] : r.tuples_pruned_by_rule) md << "  - " << rule << ": " << n << "\n";
  md << "- violations: " << r.violations_found << "; tight evaluations: " << r.tight_evaluations << "\n";
  return md.str();
}

}  // namespace

std::vector<std::vector<std::string>> parse_tuple_text(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::size_t offset = 0;
  for (const auto& raw : split(text, ';')) {
    const std::size_t pos = offset;
    offset += raw.size() + 1;
    if (raw.empty()) continue;
    std::string_view body = raw;
    if (const auto eq = body.find('='); eq != std::string_view::npos) {
      const std::string label = trim(body.substr(0, eq));
      const std::string want = "G" + std::to_string(out.size() + 1);
      if (label != want) throw ParseError("expected label " + want + ", got '" + label + "'", pos);
      body = body.substr(eq + 1);
    }
    std::vector<std::string> gens;
    int depth = 0;
    std::string cur;
    for (char c : body) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth < 0) throw ParseError("unbalanced ')'", pos);
      if (c == ',' && depth == 0) {
        gens.push_back(trim(cur));
        cur.clear();
        continue;
      }
      cur += c;
    }
    if (depth != 0) throw ParseError("unbalanced '('", pos);
    gens.push_back(trim(cur));
    for (const auto& gtext : gens) {
      if (gtext.empty()) throw ParseError("empty generator", pos);
    }
    // "()" alone is the identity, which generates the trivial subgroup.
    if (gens.size() == 1 && gens[0] == "()") gens.clear();
    out.push_back(std::move(gens));
  }
  if (out.empty()) throw ParseError("empty subgroup tuple", 0);
  if (out.size() > static_cast<std::size_t>(kMaxVars)) {
    throw ParseError("at most " + std::to_string(kMaxVars) + " subgroups", 0);
  }
  return out;
}

CatalogIndex resolve_catalog(const CommandOptions& opt) {
  return opt.catalog ? load_catalog(*opt.catalog) : builtin_catalog();
}

std::vector<InequalitySpec> resolve_inequalities(const CommandOptions& opt) {
  const auto defines = parse_defines(opt.defines);
  std::vector<InequalitySpec> out;
  for (const auto& id : selected_ids(opt)) {
    if (auto it = defines.find(id); it != defines.end()) {
      out.push_back(it->second);
    } else {
      out.push_back(builtin(id));
    }
  }
  return out;
}

SearchConfig make_search_config(const CommandOptions& opt) {
  SearchConfig cfg;
  cfg.inequality_ids = selected_ids(opt);
  for (auto& [id, spec] : parse_defines(opt.defines)) {
    if (std::find(cfg.inequality_ids.begin(), cfg.inequality_ids.end(), id) != cfg.inequality_ids.end()) {
      cfg.custom.emplace(id, std::move(spec));
    }
  }
  for (const auto& id : cfg.inequality_ids) {
    if (!cfg.custom.count(id) && !is_builtin_id(id)) throw UnknownName("unknown inequality '" + id + "'");
  }
  cfg.prune = parse_prune_flags(opt.prune);
  if (opt.jobs < 1) throw Error("--jobs must be at least 1");
  cfg.worker_count = opt.jobs;
  cfg.emit_limit = opt.emit_limit;
  return cfg;
}

Report cmd_check(std::string_view group, std::string_view tuple, const CommandOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.command = "check";
  r.config = config_json(opt);
  r.config["group"] = std::string(group);
  r.config["tuple"] = std::string(tuple);
  const auto cat = resolve_catalog(opt);

  std::vector<std::vector<std::string>> gens;
  const auto names = paper_tuple_names();
  std::string group_name(group);
  if (std::find(names.begin(), names.end(), tuple) != names.end()) {
    const auto pt = paper_tuple(tuple);
    gens = pt.generators;
    if (group_name.empty()) group_name = pt.group;
  } else {
    gens = parse_tuple_text(tuple);
  }
  const Group g = lookup_group(cat, group_name);
  std::vector<Subgroup> subs;
  for (const auto& gs : gens) subs.push_back(closure_of_cycles(g, gs));
  const auto ev = entropy_vector(g, subs);
  const auto specs = resolve_inequalities(opt);

  json subgroups = json::array();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    subgroups.push_back({{"position", i + 1}, {"generators", gens[i]}, {"order", subs[i].order()}});
  }
  json verdicts = json::object();
  std::ostringstream md;
  md << "# check " << g.name() << "\n\n`" << tuple_text(gens) << "`\n\n";
  md << "| subset | order |\n|---|---|\n";
  for (unsigned a = 1; a < (1u << ev.n); ++a) {
    md << "| " << varset_digits(static_cast<VarSet>(a)) << " | " << ev.orders[a] << " |\n";
  }
  md << "\n| inequality | verdict | lhs | rhs |\n|---|---|---|---|\n";
  bool any_violated = false;
  for (const auto& spec : specs) {
    if (spec.n_vars > ev.n) {
      throw Error(spec.id + " needs " + std::to_string(spec.n_vars) + " subgroups, got " +
                  std::to_string(ev.n));
    }
    const auto v = evaluate(spec, ev);
    any_violated = any_violated || v.violated();
    auto j = to_json(v);
    j["verdict"] = v.violated() ? "violated" : (v.tight() ? "tight" : "holds");
    j["group_form"] = group_form(spec);
    verdicts[spec.id] = j;
    md << "| " << spec.id << " | " << j["verdict"].get<std::string>() << " | " << v.lhs_product << " | "
       << v.rhs_product << " |\n";
  }
  r.results = {{"group", g.name()},
               {"group_order", g.order()},
               {"subgroups", subgroups},
               {"subset_orders", to_json(ev)},
               {"verdicts", verdicts}};
  r.timings = {{"total", seconds_since(t0)}};
  r.markdown = md.str();
  r.exit_code = any_violated ? 1 : 0;
  return r;
}

Report cmd_scan(std::string_view group, const CommandOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.command = "scan";
  r.config = config_json(opt);
  r.config["group"] = std::string(group);
  const auto cat = resolve_catalog(opt);
  const Group g = lookup_group(cat, group);
  if (opt.max_order && g.order() > *opt.max_order) {
    throw Error(g.name() + " has order " + std::to_string(g.order()) + " > --max-order");
  }
  const auto cfg = make_search_config(opt);

  bool hit = false;
  const auto tl = std::chrono::steady_clock::now();
  const SubgroupLattice lattice =
      opt.use_cache ? LatticeCache(opt.cache_dir.value_or(LatticeCache::default_dir()))
                          .get_or_build(g, cfg.lattice_cap, &hit)
                    : all_subgroups(g, cfg.lattice_cap);
  const double lattice_time = seconds_since(tl);
  const auto res = scan_group(g, lattice, cfg);

  json ws = json::array();
  for (const auto& w : res.witnesses) ws.push_back(to_json(w));
  r.results = {{"group", g.name()},
               {"group_order", g.order()},
               {"subgroup_count", lattice.size()},
               {"order_class", to_string(order_class(g, lattice).kind)},
               {"cache_hit", hit},
               {"witnesses", ws},
               {"report", to_json(res.report)}};
  r.timings = {{"lattice", lattice_time}, {"search", res.report.wall_time}, {"total", seconds_since(t0)}};
  std::ostringstream md;
  md << "# scan " << g.name() << "\n\n- order " << g.order() << ", " << lattice.size() << " subgroups\n"
     << report_markdown(res.report) << "\n";
  if (!res.witnesses.empty()) md << witness_markdown(res.witnesses);
  r.markdown = md.str();
  r.exit_code = res.report.violations_found > 0 ? 1 : 0;
  return r;
}

Report cmd_survey(std::size_t lo, std::size_t hi, const CommandOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.command = "survey";
  r.config = config_json(opt);
  r.config["orders"] = {lo, hi};
  if (opt.max_order) hi = std::min(hi, *opt.max_order);
  if (lo > hi) throw Error("empty order range");
  const auto cat = resolve_catalog(opt);
  const auto cfg = make_search_config(opt);
  const auto rows = survey(cat, {lo, hi}, cfg);

  json table = json::array();
  std::ostringstream md;
  md << "# survey " << lo << ".." << hi << "\n\n| group | order | evaluated | pruned | violations |\n"
     << "|---|---|---|---|---|\n";
  bool violated = false, failed = false;
  json timings = json::object();
  for (const auto& row : rows) {
    json ws = json::array();
    for (const auto& w : row.witnesses) ws.push_back(to_json(w));
    json j = {{"group", row.group_name},
              {"group_order", row.group_order},
              {"witness_count", row.witness_count},
              {"report", to_json(row.report)},
              {"witnesses", ws}};
    if (row.error) {
      j["error"] = *row.error;
      failed = true;
    }
    violated = violated || row.witness_count > 0;
    table.push_back(j);
    timings[row.group_name] = row.report.wall_time;
    md << "| " << md_escape(row.group_name) << " | " << row.group_order << " | " << row.report.tuples_evaluated
       << " | " << row.report.pruned_total() << " | "
       << (row.error ? "error: " + *row.error : std::to_string(row.witness_count)) << " |\n";
  }
  timings["total"] = seconds_since(t0);
  r.results = {{"groups", table}};
  r.timings = timings;
  r.markdown = md.str();
  r.exit_code = failed ? 2 : (violated ? 1 : 0);
  return r;
}

Report cmd_parse(std::string_view text) {
  Report r;
  r.command = "parse";
  r.config = {{"text", std::string(text)}};
  const auto spec = parse_inequality(text);
  json coeffs = json::object();
  for (const auto& [a, c] : spec.coeffs) coeffs[varset_digits(a)] = c;
  const auto sym = symmetry_group(spec);
  json perms = json::array();
  for (const auto& p : sym.perms) {
    json img = json::array();
    for (int i = 0; i < spec.n_vars; ++i) img.push_back(p[i] + 1);
    perms.push_back(img);
  }
  r.results = {{"n_vars", spec.n_vars},          {"coefficients", coeffs},
               {"pretty", pretty_print(spec)},   {"entropy_form", entropy_form(spec)},
               {"group_form", group_form(spec)}, {"symmetry_group", {{"size", sym.perms.size()}, {"perms", perms}}}};
  std::ostringstream md;
  md << "# parse\n\n- pretty: `" << pretty_print(spec) << "`\n- entropies: `" << entropy_form(spec)
     << "`\n- groups: `" << group_form(spec) << "`\n- symmetries: " << sym.perms.size() << "\n\n"
     << "| subset | coefficient |\n|---|---|\n";
  for (const auto& [a, c] : spec.coeffs) md << "| " << varset_digits(a) << " | " << c << " |\n";
  r.markdown = md.str();
  return r;
}

Report cmd_groups_list(const CommandOptions& opt) {
  Report r;
  r.command = "groups list";
  r.config = config_json(opt);
  const auto cat = resolve_catalog(opt);
  json list = json::array();
  std::ostringstream md;
  md << "| name | order | degree | tags |\n|---|---|---|---|\n";
  for (const auto& name : cat.names_in_range(1, opt.max_order.value_or(SIZE_MAX))) {
    const auto& d = cat.get(name);
    list.push_back({{"name", d.name}, {"order", d.expected_order}, {"degree", d.degree}, {"tags", d.tags}});
    std::string tags;
    for (const auto& t : d.tags) tags += (tags.empty() ? "" : ", ") + t;
    md << "| " << md_escape(d.name) << " | " << d.expected_order << " | " << d.degree << " | " << tags << " |\n";
  }
  r.results = {{"groups", list}, {"aliases", cat.aliases}};
  r.markdown = md.str();
  return r;
}

Report cmd_groups_show(std::string_view name, const CommandOptions& opt) {
  Report r;
  r.command = "groups show";
  r.config = config_json(opt);
  r.config["group"] = std::string(name);
  const auto cat = resolve_catalog(opt);
  const auto& def = cat.get(name);
  const Group g = realize(def);
  const auto lat = all_subgroups(g);
  std::size_t normal = 0;
  for (std::size_t i = 0; i < lat.size(); ++i) normal += lat.is_normal(i);
  json sylow = json::object();
  for (const auto& [p, idx] : lat.sylow_index()) sylow[std::to_string(p)] = idx.size();
  const auto oc = order_class(g, lat);
  r.results = {{"name", def.name},
               {"order", g.order()},
               {"degree", def.degree},
               {"generators", def.generators},
               {"tags", def.tags},
               {"abelian", g.is_abelian()},
               {"subgroup_count", lat.size()},
               {"normal_subgroup_count", normal},
               {"conjugacy_class_count", lat.conjugacy_classes().size()},
               {"sylow_counts", sylow},
               {"order_class", {{"kind", to_string(oc.kind)}, {"p", oc.p}, {"q", oc.q}}}};
  std::ostringstream md;
  md << "# " << def.name << "\n\n- order " << g.order() << ", degree " << def.degree << "\n- generators:";
  for (const auto& s : def.generators) md << " `" << s << "`";
  md << "\n- " << lat.size() << " subgroups (" << normal << " normal, " << lat.conjugacy_classes().size()
     << " classes)\n- order class: " << to_string(oc.kind) << "\n";
  r.markdown = md.str();
  return r;
}

Report cmd_verify_paper(const CommandOptions& opt, bool include_stretch) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.command = "verify-paper";
  r.config = config_json(opt);
  r.config["include_stretch"] = include_stretch;
  const auto cat = resolve_catalog(opt);
  ClaimOptions co;
  co.catalog = &cat;
  co.overrides = parse_defines(opt.defines);
  co.jobs = opt.jobs;
  co.include_stretch = include_stretch;

  json claims = json::array();
  std::ostringstream md;
  md << "# verify-paper\n\n| claim | result | assertions | seconds | detail |\n|---|---|---|---|---|\n";
  bool all = true;
  for (const auto& c : verify_paper(co)) {
    all = all && c.passed;
    json j = {{"name", c.name}, {"passed", c.passed}, {"assertions", c.assertions},
              {"seconds", c.seconds}, {"detail", c.detail}};
    if (!c.deviation.empty()) j["deviation"] = c.deviation;
    claims.push_back(j);
    md << "| " << c.name << " | " << (c.passed ? "pass" : "FAIL") << " | " << c.assertions << " | "
       << c.seconds << " | " << md_escape(c.detail + (c.deviation.empty() ? "" : "; " + c.deviation))
       << " |\n";
  }
  r.results = {{"claims", claims}, {"all_passed", all}};
  r.timings = {{"total", seconds_since(t0)}};
  r.markdown = md.str();
  r.exit_code = all ? 0 : 1;
  return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group-induced entropy vectors and linear rank inequalities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", GIL_VERSION);

  CommandOptions opt;
  std::string format = "json";
  std::string cache_dir, catalog;
  std::size_t max_order = 0, emit_limit = 0;
  bool no_cache = false;

  auto common = [&](CLI::App* sub, bool search) {
    sub->add_option("--format", format, "json | md")->capture_default_str();
    sub->add_option("--catalog", catalog, "catalog JSON file (default: builtin)");
    sub->add_option("--define", opt.defines, "ID=INEQUALITY, repeatable");
    if (!search) return;
    sub->add_option("--ineqs", opt.ineqs, "all | every | comma list of ids")->capture_default_str();
    sub->add_option("--prune", opt.prune,
                    "all | none | comma list of theory_common_info,order_class,conjugacy,ineq_symmetry")
        ->capture_default_str();
    sub->add_option("--jobs", opt.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--emit-limit", emit_limit, "keep at most N witnesses");
  };

  std::string group, tuple;
  auto* check = app.add_subcommand("check", "evaluate inequalities on one subgroup tuple");
  check->add_option("group", group, "catalog name")->required();
  check->add_option("tuple", tuple, "\"G1=...; G2=...\" or a printed tuple name")->required();
  common(check, true);

  auto* scan = app.add_subcommand("scan", "search one group for violating tuples");
  scan->add_option("group", group, "catalog name")->required();
  common(scan, true);
  scan->add_option("--cache-dir", cache_dir, "lattice cache directory");
  scan->add_flag("--no-cache", no_cache, "build the lattice without the cache");
  scan->add_option("--max-order", max_order, "refuse larger groups");

  std::size_t lo = 2, hi = 23;
  auto* surv = app.add_subcommand("survey", "scan every catalog group in an order range");
  surv->add_option("lo", lo, "smallest order")->capture_default_str();
  surv->add_option("hi", hi, "largest order")->capture_default_str();
  common(surv, true);
  surv->add_option("--max-order", max_order, "cap on the range");

  std::string text;
  auto* parse = app.add_subcommand("parse", "show an inequality in canonical forms");
  parse->add_option("text", text, "e.g. \"I(X1;X2) <= 0\"")->required();
  parse->add_option("--format", format, "json | md")->capture_default_str();

  auto* groups = app.add_subcommand("groups", "inspect the catalog");
  groups->require_subcommand(1);
  auto* list = groups->add_subcommand("list", "list catalog groups");
  common(list, false);
  list->add_option("--max-order", max_order, "only groups up to this order");
  auto* show = groups->add_subcommand("show", "describe one group");
  show->add_option("group", group, "catalog name")->required();
  common(show, false);

  bool no_stretch = false;
  auto* verify = app.add_subcommand("verify-paper", "run every reproduced claim");
  common(verify, false);
  verify->add_option("--jobs", opt.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_flag("--no-stretch", no_stretch, "skip the S5 Ingleton scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? 0 : 2;
  }

  Format fmt = Format::Json;
  Report report;
  try {
    fmt = parse_format(format);
    if (!cache_dir.empty()) opt.cache_dir = cache_dir;
    if (!catalog.empty()) opt.catalog = catalog;
    if (max_order) opt.max_order = max_order;
    if (emit_limit) opt.emit_limit = emit_limit;
    opt.use_cache = !no_cache;

    if (*check) {
      report = cmd_check(group, tuple, opt);
    } else if (*scan) {
      report = cmd_scan(group, opt);
    } else if (*surv) {
      report = cmd_survey(lo, hi, opt);
    } else if (*parse) {
      report = cmd_parse(text);
    } else if (*list) {
      report = cmd_groups_list(opt);
    } else if (*show) {
      report = cmd_groups_show(group, opt);
    } else {
      report = cmd_verify_paper(opt, !no_stretch);
    }
  } catch (const std::exception& e) {
    err << "gil: " << e.what() << "\n";
    report = Report{};
    report.command = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
    report.results = {{"error", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) report.results["position"] = pe->position();
    report.markdown = std::string("error: ") + e.what() + "\n";
    report.exit_code = 2;
  }
  out << render(report, fmt);
  return report.exit_code;
}

}  // namespace gil
