#include <algorithm>
#include <cctype>
#include <sstream>

#include "campedelli/citations.hpp"
#include "scenario_internal.hpp"

namespace campedelli::scenario {

namespace detail {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (const char c : s) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::optional<Call> as_call(const std::string& text) {
  const std::string s = trim(text);
  const auto open = s.find('(');
  if (open == std::string::npos || open == 0 || s.back() != ')') return std::nullopt;
  const std::string fn = s.substr(0, open);
  if (!std::all_of(fn.begin(), fn.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; })) {
    return std::nullopt;
  }
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && i + 1 != s.size()) return std::nullopt;
  }
  return Call{fn, s.substr(open + 1, s.size() - open - 2)};
}

std::vector<std::pair<std::string, long>> parse_word(const std::string& w) {
  std::vector<std::pair<std::string, long>> out;
  for (const auto& factor : split_top_level(w, '*')) {
    if (factor.empty()) throw std::invalid_argument("empty factor in '" + w + "'");
    const auto caret = factor.find('^');
    std::string name = trim(factor.substr(0, caret));
    long e = 1;
    if (caret != std::string::npos) {
      const std::string ex = trim(factor.substr(caret + 1));
      std::size_t used = 0;
      try {
        e = std::stol(ex, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != ex.size()) throw std::invalid_argument("bad exponent in '" + factor + "'");
    }
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])) ||
        !std::all_of(name.begin(), name.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; })) {
      throw std::invalid_argument("bad name in '" + factor + "'");
    }
    out.emplace_back(name, e);
  }
  return out;
}

std::vector<std::string> bracket_list(const std::string& token) {
  const std::string t = trim(token);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw std::invalid_argument("expected [..], got '" + t + "'");
  const std::string inner = trim(t.substr(1, t.size() - 2));
  if (inner.empty()) return {};
  return split_top_level(inner, ',');
}

}  // namespace detail

const std::map<std::string, std::pair<std::size_t, std::size_t>>& known_operations() {
  static const std::map<std::string, std::pair<std::size_t, std::size_t>> ops = {
      {"dimdeg", {1, 1}},          {"empty", {1, 1}},          {"singular", {1, 1}},
      {"smooth", {1, 1}},          {"singular-support", {2, 2}}, {"support", {1, 1}},
      {"tangent-dim", {1, 1}},     {"node", {1, 1}},           {"tangent-action", {2, 2}},
      {"order", {1, 1}},           {"relation", {2, 2}},       {"involutions", {1, 1}},
      {"free", {1, 1}},            {"fixed", {1, 1}},          {"curve", {1, 1}},
      {"square-shortcut", {3, 3}}, {"cover-case", {1, 1}},     {"cover-parity", {1, 1}},
      {"cover-triples", {1, 1}},   {"cover-four-point", {1, 1}}, {"derive", {2, 3}},
      {"classify", {2, 2}},        {"grid", {0, 0}},           {"note", {0, 0}},
  };
  return ops;
}

namespace {

using detail::trim;

struct Line {
  std::size_t number;
  std::string text;
};

[[noreturn]] void fail(const Line& l, const std::string& what, std::size_t column = 1) {
  throw ScenarioParseError(l.number, column, what);
}

std::size_t column_of(const Line& l, const std::string& needle) {
  const auto p = l.text.find(needle);
  return p == std::string::npos ? 1 : p + 1;
}

std::pair<std::string, std::string> key_value(const Line& l) {
  const auto eq = l.text.find('=');
  if (eq == std::string::npos) fail(l, "expected 'key = value'");
  const std::string key = trim(l.text.substr(0, eq));
  const std::string value = trim(l.text.substr(eq + 1));
  if (key.empty()) fail(l, "missing key");
  if (value.empty()) fail(l, "missing value for '" + key + "'", eq + 2);
  return {key, value};
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

/// Whitespace tokens, keeping bracketed groups together.
std::vector<std::string> tokens(const Line& l, const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (const char c : s) {
    if (c == '[' || c == '{' || c == '(') ++depth;
    if (c == ']' || c == '}' || c == ')') --depth;
    if (depth < 0) fail(l, "unbalanced brackets");
    if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) fail(l, "unbalanced brackets", l.text.size());
  if (!cur.empty()) out.push_back(cur);
  return out;
}

CheckSpec parse_check(const Line& l, std::size_t index) {
  CheckSpec c;
  c.line = l.number;
  std::string body = l.text;
  const auto colon = body.find(':');
  const auto first_space = body.find_first_of(" \t");
  if (colon != std::string::npos && (first_space == std::string::npos || colon < first_space)) {
    c.id = trim(body.substr(0, colon));
    body = body.substr(colon + 1);
  }
  auto toks = tokens(l, body);
  const auto e = std::find(toks.begin(), toks.end(), "expect");
  const auto k = std::find(toks.begin(), toks.end(), "cite");
  if (toks.empty()) fail(l, "empty check");
  if (k == toks.end() || k + 1 == toks.end()) fail(l, "check needs 'cite <key>'", l.text.size());
  if (k + 2 != toks.end()) fail(l, "unexpected text after the citation key", column_of(l, *(k + 2)));
  c.op = toks.front();
  c.cite = *(k + 1);
  if (c.op == "note") {
    if (e != toks.end()) fail(l, "'note' takes no expectation", column_of(l, "expect"));
    c.args.assign(toks.begin() + 1, k);
  } else {
    if (e == toks.end() || e > k) fail(l, "check needs 'expect <outcome>' before 'cite'", column_of(l, "cite"));
    c.args.assign(toks.begin() + 1, e);
    for (auto it = e + 1; it != k; ++it) c.expect += (c.expect.empty() ? "" : " ") + *it;
    if (c.expect.empty()) fail(l, "empty expectation", column_of(l, "expect"));
  }
  const auto& ops = known_operations();
  const auto op = ops.find(c.op);
  if (op == ops.end()) fail(l, "unknown operation '" + c.op + "'", column_of(l, c.op));
  if (c.args.size() < op->second.first || c.args.size() > op->second.second) {
    fail(l, "'" + c.op + "' takes " + std::to_string(op->second.first) + ".." + std::to_string(op->second.second) +
                " arguments, got " + std::to_string(c.args.size()),
         column_of(l, c.op));
  }
  if (!has_citation(c.cite)) fail(l, "unknown citation key '" + c.cite + "'", column_of(l, c.cite));
  if (c.id.empty()) c.id = c.op + "-" + std::to_string(index + 1);
  return c;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Scenario s;
  std::vector<std::pair<std::string, std::size_t>> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  std::string section;
  std::size_t ring_line = 0;
  std::string field = "q";
  std::set<std::string> seen_sections;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    const Line l{number, trim(hash == std::string::npos ? raw : raw.substr(0, hash))};
    if (l.text.empty()) continue;
    if (l.text.front() == '[' && l.text.back() == ']' && l.text.find_first_of(" \t,") == std::string::npos) {
      static const std::set<std::string> sections = {"scenario", "ring", "params", "ideal", "group", "points", "checks"};
      section = l.text.substr(1, l.text.size() - 2);
      if (!sections.count(section)) fail(l, "unknown section '" + section + "'", 2);
      if (!seen_sections.insert(section).second) fail(l, "section '" + section + "' repeated", 2);
    } else if (section.empty()) {
      fail(l, "text before the first section");
    } else if (section == "scenario") {
      const auto [key, value] = key_value(l);
      if (key == "name") {
        s.name = value;
      } else if (key == "description") {
        s.description = value;
      } else if (key == "cite") {
        for (const auto& c : detail::split_top_level(value, ',')) {
          if (!has_citation(c)) fail(l, "unknown citation key '" + c + "'", column_of(l, c));
          s.cites.push_back(c);
        }
      } else if (key == "require") {
        for (const auto& c : detail::split_top_level(value, ',')) s.require.push_back(c);
      } else {
        fail(l, "unknown key '" + key + "'");
      }
    } else if (section == "ring") {
      const auto [key, value] = key_value(l);
      if (ring_line == 0) lines.emplace_back("ring", l.number);
      ring_line = l.number;
      if (key == "variables") {
        s.variables = words(value);
      } else if (key == "blocks") {
        for (const auto& b : detail::split_top_level(value, '|')) s.blocks.push_back(words(b));
      } else if (key == "field") {
        field = value;
      } else {
        fail(l, "unknown key '" + key + "'");
      }
    } else if (section == "params") {
      const auto [key, value] = key_value(l);
      lines.emplace_back("param:" + key, l.number);
      s.params.emplace_back(key, detail::split_top_level(value, '|'));
    } else if (section == "ideal") {
      lines.emplace_back("ideal:" + std::to_string(s.ideal.size()), l.number);
      s.ideal.push_back(l.text);
    } else if (section == "group") {
      const auto [key, value] = key_value(l);
      lines.emplace_back("group:" + key, l.number);
      s.group.emplace_back(key, value);
    } else if (section == "points") {
      const auto [key, value] = key_value(l);
      lines.emplace_back("point:" + key, l.number);
      s.points.emplace_back(key, value);
    } else if (section == "checks") {
      s.checks.push_back(parse_check(l, s.checks.size()));
    }
  }
  const Line end{number, ""};
  if (s.name.empty()) fail(end, "scenario has no name");

  if (!s.blocks.empty()) {
    if (!s.variables.empty()) fail({ring_line, ""}, "give either variables or blocks, not both");
    for (const auto& b : s.blocks) s.variables.insert(s.variables.end(), b.begin(), b.end());
  }
  if (field == "q") {
    s.cyclotomic_order = 0;
  } else if (field.rfind("cyclotomic:", 0) == 0) {
    try {
      s.cyclotomic_order = std::stoull(field.substr(11));
    } catch (const std::exception&) {
      fail({ring_line, ""}, "bad field '" + field + "'");
    }
    if (s.cyclotomic_order < 3) fail({ring_line, ""}, "cyclotomic order must be at least 3");
  } else {
    fail({ring_line, ""}, "field must be q or cyclotomic:<n>");
  }
  if (!s.has_ring() && (!s.ideal.empty() || !s.group.empty() || !s.points.empty())) {
    fail(end, "ideal, group and points need a [ring] section");
  }

  std::set<std::string> ids;
  for (const auto& c : s.checks) {
    if (!ids.insert(c.id).second) fail({c.line, ""}, "check id '" + c.id + "' repeated");
  }
  for (const auto& r : s.require) {
    if (!ids.count(r)) fail(end, "required check '" + r + "' is not defined");
  }
  detail::validate_references(s, lines);
  return s;
}

}  // namespace campedelli::scenario
