#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gil/catalog.hpp"
#include "gil/report.hpp"
#include "gil/search.hpp"

namespace gil {

/// Settings shared by the commands; each field mirrors one CLI flag.
struct CommandOptions {
  /// "all" (the ten DFZ inequalities), "every" (those plus Ingleton) or a comma list.
  std::string ineqs = "all";
  /// "id=TEXT": defines or replaces the inequality `id`.
  std::vector<std::string> defines;
  std::string prune = "all";
  int jobs = 1;
  std::optional<std::filesystem::path> cache_dir;
  bool use_cache = true;
  std::optional<std::size_t> max_order;
  std::optional<std::size_t> emit_limit;
  std::optional<std::filesystem::path> catalog;
};

/// Splits "G1=(1,2),(3,4); G2=()" into generator lists per position. The
/// "Gk=" labels are optional but, when given, must count up from 1.
std::vector<std::vector<std::string>> parse_tuple_text(std::string_view text);

CatalogIndex resolve_catalog(const CommandOptions& opt);
/// The inequalities `opt` selects, with every define applied.
std::vector<InequalitySpec> resolve_inequalities(const CommandOptions& opt);
SearchConfig make_search_config(const CommandOptions& opt);

/// `tuple` is tuple text or the name of a printed tuple ("s4-dfz1", ...).
Report cmd_check(std::string_view group, std::string_view tuple, const CommandOptions& opt);
Report cmd_scan(std::string_view group, const CommandOptions& opt);
Report cmd_survey(std::size_t lo, std::size_t hi, const CommandOptions& opt);
Report cmd_parse(std::string_view text);
Report cmd_groups_list(const CommandOptions& opt);
Report cmd_groups_show(std::string_view name, const CommandOptions& opt);
Report cmd_verify_paper(const CommandOptions& opt, bool include_stretch);

/// Full command line; writes the rendered report to `out` and diagnostics to
/// `err`. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gil
