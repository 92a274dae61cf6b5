#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "campedelli/scenario.hpp"

namespace campedelli::scenario::detail {

std::string trim(const std::string& s);

/// Splits at `sep` outside (), [] and {}.
std::vector<std::string> split_top_level(const std::string& s, char sep);

/// "fn(inner)" spanning the whole string.
struct Call {
  std::string fn;
  std::string inner;
};
std::optional<Call> as_call(const std::string& s);

/// "a*t^3*b^-1" as (name, exponent) factors; std::invalid_argument when malformed.
std::vector<std::pair<std::string, long>> parse_word(const std::string& w);

/// Strips the brackets of "[a, b]" and splits the inside at top-level commas.
std::vector<std::string> bracket_list(const std::string& token);

/// Resolves every symbol in the ring, ideal, group and point sections; throws
/// ScenarioParseError at the offending line.
void validate_references(const Scenario& s, const std::vector<std::pair<std::string, std::size_t>>& lines);

}  // namespace campedelli::scenario::detail
