#include "gil/report.hpp"

#include "gil/error.hpp"

namespace gil {

using nlohmann::json;

Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "md" || text == "markdown") return Format::Markdown;
  throw UnknownName("unknown format '" + std::string(text) + "' (json|md)");
}

std::string to_decimal(const BigInt& x) { return x.str(); }

json to_json(const EntropyVector& ev) {
  json j = json::object();
  for (unsigned a = 1; a < (1u << ev.n); ++a) j[varset_digits(static_cast<VarSet>(a))] = ev.orders[a];
  return j;
}

json to_json(const ExactVerdict& v) {
  return {{"holds", v.holds},
          {"lhs_product", to_decimal(v.lhs_product)},
          {"rhs_product", to_decimal(v.rhs_product)},
          {"ratio", to_decimal(v.ratio_num) + "/" + to_decimal(v.ratio_den)}};
}

json to_json(const GroupRational& x) {
  return x.is_integer() ? to_decimal(x.num) : to_decimal(x.num) + "/" + to_decimal(x.den);
}

json to_json(const Witness& w) {
  json subs = json::array();
  for (std::size_t i = 0; i < w.subgroup_generators.size(); ++i) {
    subs.push_back({{"position", i + 1},
                    {"generators", w.subgroup_generators[i]},
                    {"order", w.subset_orders.orders[1u << i]}});
  }
  return {{"group", w.group_name},
          {"inequality", w.inequality_id},
          {"subgroups", subs},
          {"lattice_indices", w.subgroup_indices},
          {"lhs_product", to_decimal(w.lhs_product)},
          {"rhs_product", to_decimal(w.rhs_product)},
          {"subset_orders", to_json(w.subset_orders)}};
}

json to_json(const PruneReport& r) {
  return {{"tuples_total", r.tuples_total},
          {"tuples_pruned_by_rule", r.tuples_pruned_by_rule},
          {"theory_detail", r.theory_detail},
          {"tuples_evaluated", r.tuples_evaluated},
          {"violations_found", r.violations_found},
          {"tight_evaluations", r.tight_evaluations}};
}

std::string tuple_text(const std::vector<std::vector<std::string>>& generators) {
  std::string s;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) s += "; ";
    s += "G" + std::to_string(i + 1) + "=";
    if (generators[i].empty()) s += "()";
    for (std::size_t k = 0; k < generators[i].size(); ++k) {
      if (k) s += ",";
      s += generators[i][k];
    }
  }
  return s;
}

std::string render(const Report& report, Format format) {
  if (format == Format::Markdown) {
    return report.markdown.empty() ? "# " + report.command + "\n" : report.markdown;
  }
  json j = {{"tool", "gil"},
            {"version", GIL_VERSION},
            {"command", report.command},
            {"config", report.config},
            {"results", report.results},
            {"timings", report.timings},
            {"exit_code", report.exit_code}};
  return j.dump(2) + "\n";
}

}  // namespace gil
