#include "campedelli/cover_configurations.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace campedelli::cover {

std::string GroupElement2::to_string() const {
  return "(" + std::to_string(bit(0)) + "," + std::to_string(bit(1)) + "," + std::to_string(bit(2)) + ")";
}

std::string GroupElement2::to_bits() const {
  return std::to_string(bit(0)) + std::to_string(bit(1)) + std::to_string(bit(2));
}

GroupElement2 GroupElement2::parse_bits(const std::string& s) {
  if (s.size() != 3 || s.find_first_not_of("01") != std::string::npos) {
    throw std::invalid_argument("expected three binary digits, got '" + s + "'");
  }
  return GroupElement2(s[0] - '0', s[1] - '0', s[2] - '0');
}

std::array<GroupElement2, 7> GroupElement2::nonzero() {
  std::array<GroupElement2, 7> out;
  for (unsigned b = 1; b < 8; ++b) out[b - 1] = GroupElement2(b);
  return out;
}

std::array<std::array<int, 7>, 3> CharacterTable::table() {
  std::array<std::array<int, 7>, 3> t{};
  for (int i = 0; i < 3; ++i) {
    for (const auto g : GroupElement2::nonzero()) t[static_cast<std::size_t>(i)][g.index()] = epsilon(i, g);
  }
  return t;
}

PlaneVector cross(const PlaneVector& a, const PlaneVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational dot(const PlaneVector& a, const PlaneVector& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool is_null(const PlaneVector& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

PlaneVector normalized(const PlaneVector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) {
      const Rational inv = x.inverse();
      return {v[0] * inv, v[1] * inv, v[2] * inv};
    }
  }
  return v;
}

std::string to_string(const PlaneVector& v) {
  return "(" + v[0].to_string() + ":" + v[1].to_string() + ":" + v[2].to_string() + ")";
}

std::string to_string(ConfigurationCase c) {
  switch (c) {
    case ConfigurationCase::case1: return "case 1";
    case ConfigurationCase::case2: return "case 2";
    case ConfigurationCase::case3: return "case 3";
    case ConfigurationCase::case4: return "case 4";
    case ConfigurationCase::other: return "other";
  }
  return "other";
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Points where two or more present lines meet, with the labels through each.
std::vector<std::pair<PlanePoint, std::vector<GroupElement2>>> concurrences(const LabeledConfiguration& c) {
  std::map<std::string, std::pair<PlanePoint, std::vector<GroupElement2>>> seen;
  const auto all = GroupElement2::nonzero();
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = i + 1; j < 7; ++j) {
      if (!c.lines[i] || !c.lines[j]) continue;
      const auto p = cross(*c.lines[i], *c.lines[j]);
      if (is_null(p)) continue;
      const auto q = normalized(p);
      const auto key = to_string(q);
      if (seen.count(key)) continue;
      std::vector<GroupElement2> through;
      for (const auto g : all) {
        if (c.line(g) && dot(*c.line(g), q).is_zero()) through.push_back(g);
      }
      seen.emplace(key, std::make_pair(q, through));
    }
  }
  std::vector<std::pair<PlanePoint, std::vector<GroupElement2>>> out;
  for (auto& [k, v] : seen) out.push_back(std::move(v));
  return out;
}

PlaneVector random_vector(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  PlaneVector v;
  do {
    v = {Rational(dist(rng)), Rational(dist(rng)), Rational(dist(rng))};
  } while (is_null(v));
  return v;
}

Line random_line_through(const PlanePoint& p, std::mt19937_64& rng) {
  for (;;) {
    const auto l = cross(p, random_vector(rng));
    if (!is_null(l)) return l;
  }
}

const std::array<PlanePoint, 4> kTriplePointSites = {
    PlanePoint{Rational(1), Rational(0), Rational(0)}, PlanePoint{Rational(0), Rational(1), Rational(0)},
    PlanePoint{Rational(0), Rational(0), Rational(1)}, PlanePoint{Rational(1), Rational(1), Rational(1)}};

/// Lines for the given concurrent triples: a label in two triples joins the two
/// sites, a label in one passes through its site, the rest are free.
LabeledConfiguration draw_configuration(const std::vector<Triple>& triples, std::mt19937_64& rng) {
  LabeledConfiguration c;
  for (const auto g : GroupElement2::nonzero()) {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i < triples.size(); ++i) {
      if (std::find(triples[i].begin(), triples[i].end(), g) != triples[i].end()) sites.push_back(i);
    }
    if (sites.size() >= 2) {
      c.set(g, cross(kTriplePointSites[sites[0]], kTriplePointSites[sites[1]]));
    } else if (sites.size() == 1) {
      c.set(g, random_line_through(kTriplePointSites[sites[0]], rng));
    } else {
      c.set(g, random_vector(rng));
    }
  }
  return c;
}

bool realizes(const TriplePointReport& r, const std::vector<Triple>& triples) {
  if (r.points.size() != triples.size()) return false;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    auto want = triples[i];
    std::sort(want.begin(), want.end());
    const auto site = normalized(kTriplePointSites[i]);
    const bool found = std::any_of(r.points.begin(), r.points.end(), [&](const TriplePoint& t) {
      return t.point == site && t.labels == want;
    });
    if (!found) return false;
  }
  return true;
}

}  // namespace

LabeledConfiguration LabeledConfiguration::parse(const std::string& text) {
  LabeledConfiguration c;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  std::set<unsigned> seen;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    std::istringstream fields(s);
    std::string gpart;
    std::string lpart;
    fields >> gpart >> lpart;
    if (gpart.rfind("g=", 0) != 0 || lpart.rfind("line=", 0) != 0) {
      throw ConfigurationParseError(lineno, "expected 'g=<bits> line=<a,b,c>'");
    }
    GroupElement2 g;
    try {
      g = GroupElement2::parse_bits(gpart.substr(2));
    } catch (const std::exception& e) {
      throw ConfigurationParseError(lineno, e.what());
    }
    if (g.is_zero()) throw ConfigurationParseError(lineno, "label must be nonzero");
    if (!seen.insert(g.bits).second) throw ConfigurationParseError(lineno, "label " + g.to_bits() + " repeated");
    std::vector<Rational> coeffs;
    std::istringstream cs(lpart.substr(5));
    std::string tok;
    while (std::getline(cs, tok, ',')) {
      try {
        coeffs.push_back(Rational::parse(trim(tok)));
      } catch (const std::exception& e) {
        throw ConfigurationParseError(lineno, "bad coefficient '" + tok + "'");
      }
    }
    if (coeffs.size() != 3) throw ConfigurationParseError(lineno, "a line needs three coefficients");
    const Line l{coeffs[0], coeffs[1], coeffs[2]};
    if (is_null(l)) throw ConfigurationParseError(lineno, "line coefficients are all zero");
    c.set(g, l);
  }
  return c;
}

std::string LabeledConfiguration::to_text() const {
  std::string out;
  for (const auto g : GroupElement2::nonzero()) {
    if (!line(g)) continue;
    const auto& l = *line(g);
    out += "g=" + g.to_bits() + " line=" + l[0].to_string() + "," + l[1].to_string() + "," + l[2].to_string() + "\n";
  }
  return out;
}

ValidityReport validate_configuration(const LabeledConfiguration& c) {
  ValidityReport r;
  const auto all = GroupElement2::nonzero();
  for (const auto g : all) {
    if (!c.line(g)) r.violations.push_back("line " + g.to_bits() + " missing");
  }
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = i + 1; j < 7; ++j) {
      if (c.lines[i] && c.lines[j] && is_null(cross(*c.lines[i], *c.lines[j]))) {
        r.violations.push_back("lines " + all[i].to_bits() + " and " + all[j].to_bits() + " coincide");
      }
    }
  }
  for (const auto& [p, through] : concurrences(c)) {
    if (through.size() >= 4) {
      r.violations.push_back(std::to_string(through.size()) + " lines through " + to_string(p));
    } else if (through.size() == 3 && (through[0] + through[1] + through[2]).is_zero()) {
      r.violations.push_back("labels " + through[0].to_bits() + "," + through[1].to_bits() + "," +
                             through[2].to_bits() + " through " + to_string(p) + " sum to zero");
    }
  }
  r.valid = r.violations.empty();
  return r;
}

ParityReport parity_check(const LabeledConfiguration& c) {
  ParityReport r;
  for (int i = 0; i < 3; ++i) {
    int s = 0;
    for (const auto g : GroupElement2::nonzero()) {
      if (c.line(g)) s += CharacterTable::epsilon(i, g);
    }
    r.sums[static_cast<std::size_t>(i)] = s;
  }
  r.consistent = std::all_of(r.sums.begin(), r.sums.end(), [](int s) { return s == 4; });
  return r;
}

TriplePointReport find_triple_points(const LabeledConfiguration& c) {
  TriplePointReport r;
  for (const auto& [p, through] : concurrences(c)) {
    if (through.size() != 3) continue;
    r.points.push_back({p, {through[0], through[1], through[2]}, through[0] + through[1] + through[2]});
  }
  std::sort(r.points.begin(), r.points.end(), [](const TriplePoint& a, const TriplePoint& b) {
    return a.labels < b.labels;
  });
  const std::size_t n = r.points.size();
  if (n == 0) {
    r.classification = ConfigurationCase::case1;
    return r;
  }
  const auto g0 = r.points.front().sum;
  const bool common = std::all_of(r.points.begin(), r.points.end(), [&](const TriplePoint& t) { return t.sum == g0; });
  if (common && !g0.is_zero()) r.common_sum = g0;
  if (n == 1 && !g0.is_zero()) {
    r.classification = ConfigurationCase::case2;
  } else if (r.common_sum && n == 2) {
    r.classification = ConfigurationCase::case3;
  } else if (r.common_sum && n == 3) {
    r.classification = ConfigurationCase::case4;
  }
  return r;
}

std::vector<Triple> compatible_triples(GroupElement2 g0) {
  std::vector<Triple> out;
  const auto all = GroupElement2::nonzero();
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = i + 1; j < 7; ++j) {
      for (std::size_t k = j + 1; k < 7; ++k) {
        if (all[i] + all[j] + all[k] == g0) out.push_back({all[i], all[j], all[k]});
      }
    }
  }
  return out;
}

CaseConstruction construct_case_config(int n, std::uint64_t seed) {
  if (n < 1 || n > 4) throw std::invalid_argument("case must be 1..4");
  CaseConstruction out;
  out.requested = n;
  out.seed = seed;
  std::mt19937_64 rng(seed);
  std::vector<Triple> triples;
  if (n > 1) {
    out.g0 = GroupElement2(1, 0, 0);
    const auto pool = compatible_triples(*out.g0);
    triples.assign(pool.begin(), pool.begin() + (n - 1));
  }
  for (;;) {
    ++out.attempts;
    out.config = draw_configuration(triples, rng);
    out.validity = validate_configuration(out.config);
    if (!out.validity.valid) continue;
    out.triples = find_triple_points(out.config);
    if (out.triples.classification != static_cast<ConfigurationCase>(n) || !realizes(out.triples, triples)) continue;
    out.parity = parity_check(out.config);
    return out;
  }
}

IncidenceLedger incidence_structure(const std::vector<Triple>& triples) {
  IncidenceLedger led;
  led.triples = triples;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    for (const auto g : triples[i]) led.points_on_line[g.index()].push_back(i);
    for (std::size_t j = i + 1; j < triples.size(); ++j) {
      std::size_t shared = 0;
      for (const auto g : triples[i]) shared += static_cast<std::size_t>(std::count(triples[j].begin(), triples[j].end(), g));
      if (shared >= 2 && !led.rejected) {
        led.rejected = true;
        led.rejection = "triples " + std::to_string(i) + " and " + std::to_string(j) + " share " +
                        std::to_string(shared) + " lines, so their points coincide";
      }
    }
  }
  if (led.rejected || triples.size() != 4) return led;
  // Complete quadrangle: six lines each joining exactly two of the four points,
  // every pair of points joined once.
  std::set<std::pair<std::size_t, std::size_t>> joined;
  std::size_t joining = 0;
  bool ok = true;
  for (const auto& on : led.points_on_line) {
    if (on.size() == 2) {
      ++joining;
      ok = ok && joined.insert({on[0], on[1]}).second;
    } else if (!on.empty()) {
      ok = false;
    }
  }
  led.complete_quadrangle = ok && joining == 6 && joined.size() == 6;
  return led;
}

FourPointReport four_point_search(GroupElement2 g0, std::uint64_t seed) {
  if (g0.is_zero()) throw std::invalid_argument("the common sum must be nonzero");
  FourPointReport out;
  out.g0 = g0;
  const auto pool = compatible_triples(g0);
  std::mt19937_64 rng(seed);
  const std::size_t n = pool.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          const std::vector<Triple> subset = {pool[a], pool[b], pool[c], pool[d]};
          auto led = incidence_structure(subset);
          if (!led.rejected && !out.realization_found) {
            for (int attempt = 0; attempt < 64; ++attempt) {
              auto config = draw_configuration(subset, rng);
              const auto validity = validate_configuration(config);
              if (!validity.valid) continue;
              const auto tp = find_triple_points(config);
              if (!realizes(tp, subset)) continue;
              out.realization_found = true;
              out.realization = config;
              out.validity = validity;
              out.triples = tp;
              out.parity = parity_check(config);
              break;
            }
          }
          out.subsets.push_back(std::move(led));
        }
      }
    }
  }
  out.verdict = out.realization_found
                    ? "a rational configuration with four triple points of common sum " + g0.to_string() +
                          " satisfies the concurrency and label-sum conditions"
                    : "no realization found for any 4-subset";
  return out;
}

}  // namespace campedelli::cover
