#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gil/entropy.hpp"
#include "gil/search.hpp"

namespace gil {

enum class Format { Json, Markdown };
Format parse_format(std::string_view text);

/// Outcome of one CLI command. `markdown` is the human rendering of
/// `results`; exit codes are 0 (no violations), 1 (violations), 2 (error).
struct Report {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  nlohmann::json timings = nlohmann::json::object();
  std::string markdown;
  int exit_code = 0;
};

std::string render(const Report& report, Format format);

std::string to_decimal(const BigInt& x);
nlohmann::json to_json(const EntropyVector& ev);
nlohmann::json to_json(const ExactVerdict& v);
nlohmann::json to_json(const GroupRational& x);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const PruneReport& r);

/// Subgroup tuple in the command-line syntax, "G1=(1,2),(3,4); G2=()".
std::string tuple_text(const std::vector<std::vector<std::string>>& generators);

}  // namespace gil
