#include <algorithm>
#include <map>
#include <set>

#include "campedelli/cover_configurations.hpp"
#include "doctest.h"

using namespace campedelli;
using namespace campedelli::cover;

namespace {

/// Oracle: 3-subsets of {1..7} with XOR equal to s, as sorted integer triples.
std::set<std::array<unsigned, 3>> brute_force_triples(unsigned s) {
  std::set<std::array<unsigned, 3>> out;
  for (unsigned mask = 0; mask < 128; ++mask) {
    if (__builtin_popcount(mask) != 3) continue;
    std::array<unsigned, 3> t{};
    unsigned x = 0;
    std::size_t k = 0;
    for (unsigned v = 1; v <= 7; ++v) {
      if (mask & (1U << (v - 1))) {
        t[k++] = v;
        x ^= v;
      }
    }
    if (x == s) out.insert(t);
  }
  return out;
}

Line L(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

LabeledConfiguration general_position() {
  LabeledConfiguration c;
  // The coordinate lines and four lines (1, t, t^2); no three are concurrent.
  const std::array<Line, 7> lines = {L(1, 0, 0), L(0, 1, 0), L(0, 0, 1), L(1, 1, 1),
                                     L(1, 2, 4), L(1, 3, 9), L(1, 5, 25)};
  for (std::size_t i = 0; i < 7; ++i) c.lines[i] = lines[i];
  return c;
}

}  // namespace

TEST_CASE("group elements and characters") {
  const auto a = GroupElement2(1, 0, 0);
  const auto b = GroupElement2(0, 1, 1);
  CHECK(a + b == GroupElement2(1, 1, 1));
  CHECK((a + a).is_zero());
  CHECK(a.to_bits() == "100");
  CHECK(GroupElement2::parse_bits("011") == b);
  CHECK_THROWS(GroupElement2::parse_bits("21"));
  for (const auto& row : CharacterTable::table()) {
    int ones = 0;
    for (int v : row) ones += v;
    CHECK(ones == 4);
  }
}

TEST_CASE("compatible triples agree with brute force") {
  for (unsigned s = 0; s < 8; ++s) {
    const auto got = compatible_triples(GroupElement2(s));
    std::set<std::array<unsigned, 3>> as_ints;
    for (const auto& t : got) as_ints.insert({t[0].bits, t[1].bits, t[2].bits});
    CHECK(as_ints == brute_force_triples(s));
    CHECK(got.size() == (s == 0 ? 7U : 4U));
    if (s == 0) continue;
    const GroupElement2 g0(s);
    std::map<unsigned, int> appearances;
    for (std::size_t i = 0; i < got.size(); ++i) {
      for (const auto g : got[i]) {
        CHECK(g != g0);
        ++appearances[g.bits];
      }
      for (std::size_t j = i + 1; j < got.size(); ++j) {
        int shared = 0;
        for (const auto g : got[i]) shared += static_cast<int>(std::count(got[j].begin(), got[j].end(), g));
        CHECK(shared == 1);
      }
    }
    CHECK(appearances.size() == 6);
    for (const auto& [g, n] : appearances) CHECK(n == 2);
  }
}

TEST_CASE("validation") {
  auto c = general_position();
  auto v = validate_configuration(c);
  CHECK(v.valid);
  CHECK(find_triple_points(c).classification == ConfigurationCase::case1);
  CHECK(parity_check(c).sums == std::array<int, 3>{4, 4, 4});

  // Labels 100, 010, 110 sum to zero; make them concurrent at (0:0:1).
  c.set(GroupElement2(1, 0, 0), L(1, 0, 0));
  c.set(GroupElement2(0, 1, 0), L(0, 1, 0));
  c.set(GroupElement2(1, 1, 0), L(1, -1, 0));
  v = validate_configuration(c);
  CHECK_FALSE(v.valid);
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0].find("sum to zero") != std::string::npos);

  c = general_position();
  for (const auto& [g, l] : {std::pair{GroupElement2(1, 0, 0), L(1, 0, 0)}, {GroupElement2(0, 1, 0), L(0, 1, 0)},
                             {GroupElement2(0, 0, 1), L(1, 1, 0)}, {GroupElement2(1, 1, 1), L(1, 2, 0)}}) {
    c.set(g, l);
  }
  v = validate_configuration(c);
  CHECK_FALSE(v.valid);
  CHECK(v.violations[0].find("4 lines") != std::string::npos);

  c = general_position();
  c.set(GroupElement2(1, 0, 0), L(2, 2, 2));
  CHECK_FALSE(validate_configuration(c).valid);

  c = general_position();
  c.erase(GroupElement2(1, 0, 0));
  const auto p = parity_check(c);
  CHECK_FALSE(p.consistent);
  CHECK(p.sums == std::array<int, 3>{3, 4, 4});
}

TEST_CASE("configuration text format") {
  const auto c = general_position();
  const auto back = LabeledConfiguration::parse(c.to_text());
  for (std::size_t i = 0; i < 7; ++i) CHECK(*back.lines[i] == *c.lines[i]);
  CHECK_THROWS_AS(LabeledConfiguration::parse("g=100 line=1,2\n"), ConfigurationParseError);
  CHECK_THROWS_AS(LabeledConfiguration::parse("g=000 line=1,2,3\n"), ConfigurationParseError);
  CHECK_THROWS_AS(LabeledConfiguration::parse("# ok\ng=100 line=1,2,3\ng=100 line=1,0,3\n"), ConfigurationParseError);
  try {
    LabeledConfiguration::parse("g=100 line=1,2,3\nbad\n");
  } catch (const ConfigurationParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("case constructions round-trip") {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
      const auto built = construct_case_config(n, seed);
      CHECK(built.validity.valid);
      CHECK(validate_configuration(built.config).valid);
      CHECK(find_triple_points(built.config).classification == static_cast<ConfigurationCase>(n));
      CHECK(parity_check(built.config).sums == std::array<int, 3>{4, 4, 4});
      for (const auto& t : built.triples.points) CHECK_FALSE(t.sum.is_zero());
      if (n > 1) CHECK(built.triples.common_sum == GroupElement2(1, 0, 0));
      // Same seed, same lines.
      CHECK(construct_case_config(n, seed).config.to_text() == built.config.to_text());
    }
  }
  CHECK_THROWS(construct_case_config(5));
}

TEST_CASE("four triple points with a common sum") {
  const auto g0 = GroupElement2(1, 0, 0);
  const auto report = four_point_search(g0);
  REQUIRE(report.subsets.size() == 1);
  const auto& led = report.subsets[0];
  CHECK_FALSE(led.rejected);
  CHECK(led.complete_quadrangle);
  CHECK(led.points_on_line[g0.index()].empty());
  std::size_t joining = 0;
  for (const auto& on : led.points_on_line) joining += on.size() == 2 ? 1 : 0;
  CHECK(joining == 6);
  if (report.realization_found) {
    CHECK(validate_configuration(*report.realization).valid);
    CHECK(find_triple_points(*report.realization).points.size() == 4);
    CHECK(report.parity.consistent);
  }

  // Two triples through the same pair of lines cannot sit at distinct points.
  const auto bad = incidence_structure({{GroupElement2(1, 1, 0), GroupElement2(0, 1, 0), GroupElement2(0, 0, 1)},
                                        {GroupElement2(1, 1, 0), GroupElement2(0, 1, 0), GroupElement2(1, 1, 1)}});
  CHECK(bad.rejected);
  CHECK_THROWS(four_point_search(GroupElement2(0, 0, 0)));
}
