#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "campedelli/fields.hpp"

namespace campedelli::cover {

/// Element of (Z/2)^3; bit i is the i-th coordinate.
struct GroupElement2 {
  std::uint8_t bits = 0;

  GroupElement2() = default;
  explicit GroupElement2(unsigned b) : bits(static_cast<std::uint8_t>(b & 7U)) {}
  GroupElement2(int a, int b, int c) : bits(static_cast<std::uint8_t>((a & 1) | ((b & 1) << 1) | ((c & 1) << 2))) {}

  bool is_zero() const { return bits == 0; }
  int bit(int i) const { return (bits >> i) & 1; }
  /// Position in the list of nonzero elements, 0..6.
  std::size_t index() const { return static_cast<std::size_t>(bits) - 1; }

  friend GroupElement2 operator+(GroupElement2 a, GroupElement2 b) { return GroupElement2(a.bits ^ b.bits); }
  friend bool operator==(GroupElement2 a, GroupElement2 b) = default;
  friend auto operator<=>(GroupElement2 a, GroupElement2 b) = default;

  /// "(a,b,c)".
  std::string to_string() const;
  /// Three binary digits, "abc".
  std::string to_bits() const;
  static GroupElement2 parse_bits(const std::string& s);

  static std::array<GroupElement2, 7> nonzero();
};

/// epsilon_i(g) for the characters chi_1, chi_2, chi_3 dual to the coordinate
/// basis: 0 where chi_i(g) = 1 and 1 where chi_i(g) = -1.
struct CharacterTable {
  static int epsilon(int i, GroupElement2 g) { return g.bit(i); }
  static std::array<std::array<int, 7>, 3> table();
};

using PlaneVector = std::array<Rational, 3>;
using Line = PlaneVector;
using PlanePoint = PlaneVector;

PlaneVector cross(const PlaneVector& a, const PlaneVector& b);
Rational dot(const PlaneVector& a, const PlaneVector& b);
bool is_null(const PlaneVector& v);
/// Scaled so that the first nonzero coordinate is 1.
PlaneVector normalized(const PlaneVector& v);
std::string to_string(const PlaneVector& v);

class ConfigurationParseError : public std::runtime_error {
 public:
  ConfigurationParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// One line D_g for each nonzero g; an absent entry is a deleted line.
struct LabeledConfiguration {
  std::array<std::optional<Line>, 7> lines;

  const std::optional<Line>& line(GroupElement2 g) const { return lines[g.index()]; }
  void set(GroupElement2 g, const Line& l) { lines[g.index()] = l; }
  void erase(GroupElement2 g) { lines[g.index()].reset(); }

  /// Records "g=<bits> line=<a,b,c>", one per line; blank lines and '#' comments skipped.
  static LabeledConfiguration parse(const std::string& text);
  std::string to_text() const;
};

struct ValidityReport {
  bool valid = true;
  std::vector<std::string> violations;
};

ValidityReport validate_configuration(const LabeledConfiguration& c);

struct ParityReport {
  std::array<int, 3> sums{};
  /// Each sum equals deg 2L_i = 4 for L_i = O(2).
  bool consistent = false;
};

ParityReport parity_check(const LabeledConfiguration& c);

using Triple = std::array<GroupElement2, 3>;

struct TriplePoint {
  PlanePoint point;
  Triple labels;
  GroupElement2 sum;
};

enum class ConfigurationCase { case1 = 1, case2 = 2, case3 = 3, case4 = 4, other = 0 };
std::string to_string(ConfigurationCase c);

struct TriplePointReport {
  std::vector<TriplePoint> points;
  ConfigurationCase classification = ConfigurationCase::other;
  std::optional<GroupElement2> common_sum;
};

TriplePointReport find_triple_points(const LabeledConfiguration& c);

/// All 3-subsets of the nonzero elements with sum g0, in lexicographic order.
std::vector<Triple> compatible_triples(GroupElement2 g0);

struct CaseConstruction {
  int requested = 0;
  LabeledConfiguration config;
  std::optional<GroupElement2> g0;
  std::uint64_t seed = 0;
  int attempts = 0;
  ValidityReport validity;
  ParityReport parity;
  TriplePointReport triples;
};

/// Explicit rational lines realizing case n (1..4). Triple points sit at
/// (1:0:0), (0:1:0), (0:0:1) and (1:1:1); free lines are drawn from a seeded
/// generator and redrawn until the configuration validates.
CaseConstruction construct_case_config(int n, std::uint64_t seed = 1);

struct IncidenceLedger {
  std::vector<Triple> triples;
  /// For each nonzero g (by index), the triple indices whose point lies on D_g.
  std::array<std::vector<std::size_t>, 7> points_on_line;
  bool rejected = false;
  std::string rejection;
  bool complete_quadrangle = false;
};

/// Incidences forced by letting triple i be concurrent at a point P_i.
IncidenceLedger incidence_structure(const std::vector<Triple>& triples);

struct FourPointReport {
  GroupElement2 g0;
  std::vector<IncidenceLedger> subsets;
  bool realization_found = false;
  std::optional<LabeledConfiguration> realization;
  ValidityReport validity;
  ParityReport parity;
  TriplePointReport triples;
  std::string verdict;
};

/// Enumerates the 4-subsets of compatible_triples(g0) and tries to realize each
/// over Q. Reports what it finds; the outcome is not assumed.
FourPointReport four_point_search(GroupElement2 g0, std::uint64_t seed = 1);

}  // namespace campedelli::cover
