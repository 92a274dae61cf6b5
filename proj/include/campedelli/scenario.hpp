#pragma once

// Scenario files and the verification runner.
//
// A scenario is a plain-text file with sections:
//
//   [scenario]  name = ..., description = ..., cite = key1, key2, require = id1, id2
//   [ring]      variables = x1 x2 ...   or   blocks = x0 x1 x2 | y0 y1 y2
//               field = q | cyclotomic:<n>
//   [params]    name = value            (value may list candidates: 1 | 2 | 3)
//   [ideal]     one polynomial per line
//   [group]     name = identity(n) | diag(...) | perm(...) | matrix(r; r; ...)
//                      | block(spec, spec, ...) | swap(spec, spec) | word
//   [points]    name = c1, c2, ...   or   name = word . other
//   [checks]    [id:] op args... expect outcome cite key
//
// Words are products of group names with optional integer powers, "a*t^3".
// Arguments in brackets, "[x1, x3]", are single tokens.

#include "json.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace campedelli::scenario {

class ScenarioParseError : public std::runtime_error {
 public:
  ScenarioParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct CheckSpec {
  std::string id;
  std::string op;
  std::vector<std::string> args;
  std::string expect;
  std::string cite;
  std::size_t line = 0;
};

struct Scenario {
  std::string name;
  std::string description;
  std::vector<std::string> cites;
  std::vector<std::string> variables;
  std::vector<std::vector<std::string>> blocks;
  /// 0 when the exact field is Q.
  std::uint64_t cyclotomic_order = 0;
  /// Name and candidate values; the first candidate is used unless resampling.
  std::vector<std::pair<std::string, std::vector<std::string>>> params;
  std::vector<std::string> ideal;
  std::vector<std::pair<std::string, std::string>> group;
  std::vector<std::pair<std::string, std::string>> points;
  /// Checks that certify a parameter choice when candidates are listed.
  std::vector<std::string> require;
  std::vector<CheckSpec> checks;

  bool has_ring() const { return !variables.empty(); }
};

/// Parses and validates; ScenarioParseError on any problem.
Scenario parse_scenario(const std::string& text);

/// Operation names and their argument counts (min, max).
const std::map<std::string, std::pair<std::size_t, std::size_t>>& known_operations();

enum class FieldPolicy { exact, modular, both };
std::string to_string(FieldPolicy p);

struct RunOptions {
  FieldPolicy policy = FieldPolicy::modular;
  std::vector<std::uint64_t> primes;  // empty: the three default primes
  std::optional<std::set<std::string>> only;
  std::chrono::seconds timeout{900};
  std::uint64_t seed = 1;
};

enum class Verdict { pass, fail, skipped };
std::string to_string(Verdict v);

struct FieldRun {
  std::string field;
  std::string observed;
  bool pass = false;
  std::string error;
  nlohmann::json certificate;
};

struct CheckRecord {
  std::string id;
  std::string op;
  std::vector<std::string> args;
  std::string expect;
  std::string cite;
  Verdict verdict = Verdict::skipped;
  std::string details;
  std::vector<FieldRun> runs;
  long long millis = 0;
};

struct Report {
  static constexpr int kSchemaVersion = 1;
  std::string scenario;
  std::string policy;
  std::uint64_t seed = 1;
  std::vector<std::pair<std::string, std::string>> certified_params;
  std::vector<CheckRecord> checks;
  /// False when exact and modular verdicts disagree on some check.
  bool consistent = true;
  std::vector<std::string> notes;
  std::string generated_at;

  bool all_passed() const;
  const CheckRecord* find(const std::string& id) const;
  /// Timestamps and timings live in "header"; everything else is deterministic.
  nlohmann::json to_json(bool with_header = true) const;
  std::string to_text() const;
};

Report run_scenario(const Scenario& s, const RunOptions& options = {});

struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<std::string> cites;
};

std::vector<CatalogEntry> list_builtin();
/// Source text of a built-in scenario; std::out_of_range for unknown names.
const std::string& builtin_source(const std::string& name);
Scenario builtin_scenario(const std::string& name);

}  // namespace campedelli::scenario
