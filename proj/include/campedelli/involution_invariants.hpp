#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace campedelli::invariants {

class InvalidK : public std::runtime_error {
 public:
  explicit InvalidK(int k) : std::runtime_error("k = " + std::to_string(k) + " violates k in {4,6}"), k_(k) {}
  int k() const { return k_; }

 private:
  int k_;
};

class RangeViolation : public std::runtime_error {
 public:
  explicit RangeViolation(std::string constraint)
      : std::runtime_error("violates " + constraint), constraint_(std::move(constraint)) {}
  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

/// Constraint names, as they appear in violation lists.
namespace constraint {
inline constexpr const char* k_values = "k in {4,6}";
inline constexpr const char* k6_range = "-4 <= K_W^2 <= 0";
inline constexpr const char* k4_range = "-2 <= K_W^2 <= 1";
inline constexpr const char* pa_range = "-1 <= p_a(Gamma) <= 3";
inline constexpr const char* h_nonnegative = "h = p_a(Gamma) - K_W^2 - 3 >= 0";
inline constexpr const char* r2_range = "-6 <= R^2 <= 2";
inline constexpr const char* wprime_range = "-4 <= K_W'^2 <= 0";
inline constexpr const char* wprime_dominates = "K_W'^2 >= K_W^2";
}  // namespace constraint

struct InvolutionNumerics {
  int k = 0;
  int K2_W = 0;
  std::optional<int> p_a_gamma;
  int D2 = 4;
  std::optional<int> KW_D;
  // k = 6
  std::optional<int> R2;
  std::optional<int> KS_R;
  std::optional<int> h;
  std::optional<int> gamma2;
  // k = 4
  std::optional<int> m;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Fills every derived quantity the inputs determine and lists every violated
/// constraint. Never throws.
InvolutionNumerics derive(int k, int K2_W, std::optional<int> p_a_gamma = std::nullopt);

/// Throws InvalidK or RangeViolation for the first listed violation.
void require_valid(const InvolutionNumerics& n);

enum class QuotientType { enriques, rational, numerical_godeaux, properly_elliptic, not_general_type };
std::string to_string(QuotientType t);

struct Fact {
  std::string statement;
  std::string citation;
};

struct QuotientOutcome {
  std::string case_label;
  QuotientType type = QuotientType::rational;
  std::vector<Fact> facts;
};

/// k = 6: K2 is K_W'^2. k = 4: K2 is K_W^2, which fixes the type of W.
QuotientOutcome classify_quotient(int k, int K2);

struct GammaShape {
  std::string description;
  std::vector<int> component_genera;
  std::vector<int> component_self_intersections;
  int gamma2 = 0;
  bool torsion_nontrivial = false;
};

/// Shapes of Gamma compatible with p_a(Gamma) in the k = 6 setting.
std::vector<GammaShape> gamma_decompositions(int p_a_gamma, int K2_W);

struct BranchComponents {
  int m = 0;
  bool ks_not_ample = false;
};

BranchComponents branch_components(int K2_W);

struct GridCell {
  int k = 0;
  int K2_W = 0;
  int K2_Wprime = 0;
  int p_a_gamma = 0;
  bool valid = false;
  std::vector<std::string> violations;
  InvolutionNumerics numerics;
  std::optional<QuotientOutcome> quotient;
};

struct GridRanges {
  int k_min = 3, k_max = 7;
  int K2W_min = -6, K2W_max = 3;
  int K2Wp_min = -6, K2Wp_max = 2;
  int pa_min = -1, pa_max = 4;
};

/// One cell per (k, K_W^2, K_W'^2, p_a). For k = 4 the p_a coordinate is not
/// used and the quotient type comes from K_W^2.
std::vector<GridCell> invariant_grid(const GridRanges& ranges = {});

}  // namespace campedelli::invariants
