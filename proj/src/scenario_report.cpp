#include <sstream>

#include "campedelli/citations.hpp"
#include "campedelli/scenario.hpp"

namespace campedelli::scenario {

using nlohmann::json;

bool Report::all_passed() const {
  if (!consistent) return false;
  for (const auto& c : checks) {
    if (c.verdict == Verdict::fail) return false;
  }
  return true;
}

const CheckRecord* Report::find(const std::string& id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

json Report::to_json(bool with_header) const {
  json records = json::array();
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  for (const auto& c : checks) {
    json runs = json::array();
    for (const auto& r : c.runs) {
      json j = {{"field", r.field}, {"observed", r.observed}, {"pass", r.pass}, {"certificate", r.certificate}};
      if (!r.error.empty()) j["error"] = r.error;
      runs.push_back(j);
    }
    json citation = {{"key", c.cite}};
    if (has_citation(c.cite)) {
      const auto& ref = find_citation(c.cite);
      citation["location"] = ref.location;
      citation["statement"] = ref.statement;
    }
    records.push_back({{"id", c.id},
                       {"op", c.op},
                       {"args", c.args},
                       {"expect", c.expect},
                       {"verdict", to_string(c.verdict)},
                       {"details", c.details},
                       {"citation", citation},
                       {"runs", runs}});
    switch (c.verdict) {
      case Verdict::pass: ++passed; break;
      case Verdict::fail: ++failed; break;
      case Verdict::skipped: ++skipped; break;
    }
  }
  json params = json::object();
  for (const auto& [k, v] : certified_params) params[k] = v;
  json out = {{"schema_version", kSchemaVersion},
              {"scenario", scenario},
              {"policy", policy},
              {"seed", seed},
              {"certified_params", params},
              {"consistent", consistent},
              {"notes", notes},
              {"summary", {{"passed", passed}, {"failed", failed}, {"skipped", skipped}}},
              {"checks", records}};
  if (with_header) {
    json timings = json::object();
    for (const auto& c : checks) timings[c.id] = c.millis;
    out["header"] = {{"generated_at", generated_at}, {"millis", timings}};
  }
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "scenario " << scenario << "  policy " << policy << "  seed " << seed << "\n";
  if (!certified_params.empty()) {
    os << "parameters:";
    for (const auto& [k, v] : certified_params) os << " " << k << "=" << v;
    os << "\n";
  }
  for (const auto& n : notes) os << "note: " << n << "\n";
  for (const auto& c : checks) {
    os << "[" << to_string(c.verdict) << "] " << c.id << ": " << c.op;
    for (const auto& a : c.args) os << " " << a;
    if (!c.expect.empty()) os << "  expect " << c.expect;
    os << "  (" << c.millis << " ms)\n";
    for (const auto& r : c.runs) {
      os << "    " << r.field << ": " << (r.error.empty() ? r.observed : "error: " + r.error) << "\n";
    }
    if (!c.details.empty()) os << "    " << c.details << "\n";
    if (has_citation(c.cite)) {
      const auto& ref = find_citation(c.cite);
      os << "    cite " << c.cite << " (" << ref.location << "): " << ref.statement << "\n";
    }
  }
  if (!consistent) os << "exact and modular verdicts disagree on some check\n";
  os << (all_passed() ? "ALL PASSED" : "FAILURES") << "\n";
  return os.str();
}

}  // namespace campedelli::scenario
