#include "campedelli/involution_invariants.hpp"

namespace campedelli::invariants {

InvolutionNumerics derive(int k, int K2_W, std::optional<int> p_a_gamma) {
  InvolutionNumerics n;
  n.k = k;
  n.K2_W = K2_W;
  n.p_a_gamma = p_a_gamma;
  if (k != 4 && k != 6) {
    n.violations.emplace_back(constraint::k_values);
    return n;
  }
  if (k == 6) {
    n.KW_D = 0;
    if (K2_W < -4 || K2_W > 0) n.violations.emplace_back(constraint::k6_range);
    n.R2 = 2 * K2_W + 2;
    n.KS_R = 2;
    if (*n.R2 < -6 || *n.R2 > 2) n.violations.emplace_back(constraint::r2_range);
    if (p_a_gamma) {
      if (*p_a_gamma < -1 || *p_a_gamma > 3) n.violations.emplace_back(constraint::pa_range);
      n.h = *p_a_gamma - K2_W - 3;
      if (*n.h < 0) n.violations.emplace_back(constraint::h_nonnegative);
      n.gamma2 = 2 * *p_a_gamma - 4;
    }
    return n;
  }
  n.KW_D = 2;
  if (K2_W < -2 || K2_W > 1) n.violations.emplace_back(constraint::k4_range);
  n.m = 1 - K2_W;
  return n;
}

void require_valid(const InvolutionNumerics& n) {
  if (n.ok()) return;
  if (n.violations.front() == constraint::k_values) throw InvalidK(n.k);
  throw RangeViolation(n.violations.front());
}

std::string to_string(QuotientType t) {
  switch (t) {
    case QuotientType::enriques: return "Enriques";
    case QuotientType::rational: return "rational";
    case QuotientType::numerical_godeaux: return "numerical Godeaux";
    case QuotientType::properly_elliptic: return "properly elliptic";
    case QuotientType::not_general_type: return "not of general type";
  }
  return "";
}

QuotientOutcome classify_quotient(int k, int K2) {
  if (k != 4 && k != 6) throw InvalidK(k);
  QuotientOutcome out;
  if (k == 6) {
    if (K2 < -4 || K2 > 0) throw RangeViolation(constraint::wprime_range);
    out.case_label = "k=6, K_W'^2=" + std::to_string(K2);
    if (K2 == 0) {
      out.type = QuotientType::enriques;
      out.facts = {{"W' is an Enriques surface", "w-prime"},
                   {"|2K_S| is base point free", "enriques-case"},
                   {"torsion order in {4, 8}", "enriques-case"}};
      return out;
    }
    out.type = QuotientType::rational;
    out.facts = {{"W' is rational", "w-prime"}};
    switch (K2) {
      case -1:
        out.facts.push_back({"genus 3 hyperelliptic fibration with 3 double fibres", "rational-minus1"});
        out.facts.push_back({"torsion contains Z2^2", "rational-minus1"});
        break;
      case -2:
        out.facts.push_back({"genus 3 hyperelliptic fibration with 2 double fibres", "rational-minus2"});
        out.facts.push_back({"torsion contains Z2", "rational-minus2"});
        break;
      case -3:
        out.facts.push_back({"|K_W' + D'| is birational onto P2", "rational-minus3"});
        out.facts.push_back({"branch curve of degree 10 with six [3,3] points", "rational-minus3"});
        break;
      default:
        out.facts.push_back({"W = W'", "genus-two"});
        out.facts.push_back({"genus 2 pencil with the involution hyperelliptic on fibres", "genus-two"});
        out.facts.push_back({"B_0 reducible with p_a(B_0) = -1", "genus-two"});
        break;
    }
    return out;
  }
  if (K2 < -2 || K2 > 1) throw RangeViolation(constraint::k4_range);
  out.case_label = "k=4, K_W^2=" + std::to_string(K2);
  const auto b = branch_components(K2);
  if (K2 == 1) {
    out.type = QuotientType::numerical_godeaux;
    out.facts = {{"W minimal of general type", "k4-quotient"}, {"B_0 = 0", "branch-minus4"}};
  } else if (K2 == 0) {
    out.type = QuotientType::properly_elliptic;
    out.facts = {{"W minimal and properly elliptic", "k4-quotient"}};
  } else {
    out.type = QuotientType::not_general_type;
    out.facts = {{"W not of general type", "k4-quotient"}};
  }
  if (b.m >= 1) {
    out.facts.push_back({"B_0 has " + std::to_string(b.m) + " disjoint -4-curves", "branch-minus4"});
    out.facts.push_back({"K_S not ample", "branch-minus4"});
  }
  return out;
}

std::vector<GammaShape> gamma_decompositions(int p_a_gamma, int K2_W) {
  if (K2_W < -4 || K2_W > 0) throw RangeViolation(constraint::k6_range);
  if (p_a_gamma < -1 || p_a_gamma > 3) throw RangeViolation(constraint::pa_range);
  if (p_a_gamma - K2_W - 3 < 0) throw RangeViolation(constraint::h_nonnegative);
  std::vector<GammaShape> out;
  if (p_a_gamma >= 0) {
    GammaShape s;
    s.description = "irreducible, p_a = " + std::to_string(p_a_gamma);
    s.component_genera = {p_a_gamma};
    s.gamma2 = 2 * p_a_gamma - 4;
    s.component_self_intersections = {s.gamma2};
    s.torsion_nontrivial = s.gamma2 == 2;
    out.push_back(s);
  }
  // Rational components have self-intersection -3, elliptic ones -1.
  for (int g1 = 0; g1 <= 1; ++g1) {
    for (int g2 = g1; g2 <= 1; ++g2) {
      if (g1 + g2 - 1 != p_a_gamma) continue;
      GammaShape s;
      auto name = [](int g) { return g == 0 ? std::string("rational (-3)") : std::string("elliptic (-1)"); };
      s.description = "two components: " + name(g1) + " + " + name(g2);
      s.component_genera = {g1, g2};
      s.component_self_intersections = {g1 == 0 ? -3 : -1, g2 == 0 ? -3 : -1};
      s.gamma2 = s.component_self_intersections[0] + s.component_self_intersections[1];
      out.push_back(s);
    }
  }
  return out;
}

BranchComponents branch_components(int K2_W) {
  if (K2_W < -2 || K2_W > 1) throw RangeViolation(constraint::k4_range);
  return {1 - K2_W, 1 - K2_W >= 1};
}

std::vector<GridCell> invariant_grid(const GridRanges& r) {
  std::vector<GridCell> out;
  for (int k = r.k_min; k <= r.k_max; ++k) {
    for (int K2 = r.K2W_min; K2 <= r.K2W_max; ++K2) {
      for (int K2p = r.K2Wp_min; K2p <= r.K2Wp_max; ++K2p) {
        for (int pa = r.pa_min; pa <= r.pa_max; ++pa) {
          GridCell c;
          c.k = k;
          c.K2_W = K2;
          c.K2_Wprime = K2p;
          c.p_a_gamma = pa;
          c.numerics = derive(k, K2, k == 6 ? std::optional<int>(pa) : std::nullopt);
          c.violations = c.numerics.violations;
          if (k == 4 || k == 6) {
            if (k == 6 && (K2p < -4 || K2p > 0)) c.violations.emplace_back(constraint::wprime_range);
            if (K2p < K2) c.violations.emplace_back(constraint::wprime_dominates);
          }
          c.valid = c.violations.empty();
          if (c.valid) c.quotient = classify_quotient(k, k == 6 ? K2p : K2);
          out.push_back(std::move(c));
        }
      }
    }
  }
  return out;
}

}  // namespace campedelli::invariants
