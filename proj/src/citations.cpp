#include "campedelli/citations.hpp"

#include <algorithm>

namespace campedelli {

const std::vector<Citation>& citation_table() {
  static const std::vector<Citation> table = {
      {"dichotomy", "isolated fixed points",
       "An involution has k = 6 isolated fixed points when the bicanonical map factors through it, k = 4 otherwise."},
      {"d-numerics", "the divisor D = 2K_W + B_0",
       "D is nef and big with D^2 = 4; k = 6 gives K_W.D = 0 and -4 <= K_W^2 <= 0, k = 4 gives K_W.D = 2 and "
       "-2 <= K_W^2 <= 1."},
      {"ramification", "divisorial fixed locus, k = 6",
       "K_S.R = 2, R^2 = 2K_W^2 + 2 in [-6, 2], R = Gamma + h disjoint nodal curves with h = p_a(Gamma) - K_W^2 - 3."},
      {"gamma-shapes", "the curve Gamma, k = 6",
       "Gamma is irreducible with 0 <= p_a <= 3 and Gamma^2 = 2p_a - 4, or a sum of two disjoint curves each rational "
       "with self-intersection -3 or elliptic with self-intersection -1."},
      {"gamma-torsion", "the curve Gamma, k = 6", "Gamma^2 = 2 forces Gamma ~ K_S and nontrivial torsion."},
      {"w-prime", "the contraction W -> W'",
       "-4 <= K_W'^2 <= 0; W' is Enriques when K_W'^2 = 0 and rational when K_W'^2 < 0."},
      {"enriques-case", "K_W'^2 = 0", "|D'| and |2K_S| are base point free; the torsion group has order 4 or 8."},
      {"rational-minus1", "K_W'^2 = -1",
       "S carries a genus 3 hyperelliptic fibration with 3 double fibres; torsion contains Z2^2."},
      {"rational-minus2", "K_W'^2 = -2",
       "S carries a genus 3 hyperelliptic fibration with 2 double fibres; torsion contains Z2."},
      {"rational-minus3", "K_W'^2 = -3",
       "|K_W' + D'| maps W' birationally onto the plane; the branch curve has degree 10 with six [3,3] points."},
      {"genus-two", "K_W'^2 = -4",
       "W = W', S has a genus 2 pencil and the involution is hyperelliptic on its fibres; B_0 is reducible with "
       "p_a(B_0) = -1."},
      {"branch-minus4", "branch curves, k = 4",
       "B_0 is a disjoint union of m = 1 - K_W^2 curves of self-intersection -4; K_S is not ample when m >= 1."},
      {"k4-quotient", "quotient type, k = 4",
       "K_W^2 = 1: W minimal of general type and B_0 = 0; K_W^2 = 0: W minimal properly elliptic; K_W^2 = -1, -2: W "
       "not of general type."},
      {"z2cube-cover", "Z2^3 covers of the plane",
       "Seven distinct lines D_g, at most three through a point, concurrent labels with nonzero sum, L_i = O(2); a "
       "triple point gives an A1 point of the cover."},
      {"z2cube-cases", "Z2^3 cases 1-4",
       "Without triple points every quotient is Enriques; one, two or three triple points with common sum g0 give "
       "K_W^2 = -1, -2, -3 for the involution g0, with W rational."},
      {"z2cube-four", "Z2^3 four triple points",
       "Four triple points with one common nonzero label sum are asserted not to occur."},
      {"z3sq-free", "Z3^2 on P2 x P2",
       "For general lambda the surface is smooth and Z3^2 acts freely; sigma1 commutes with g1 and conjugates g2 to "
       "g2^2, giving a group of order 18."},
      {"z3sq-sigma1", "Z3^2 on P2 x P2, sigma1",
       "sigma1 has 12 fixed points on Y; sigma1 g for g outside <g2> squares to a nontrivial element of G, so it "
       "acts without fixed points."},
      {"z3sq-sigma2", "Z3^2 on P2 x P2, sigma2",
       "sigma2 g = g^-1 sigma2; nine involutions in one class; Gamma1, Gamma2 lie on Y and Gamma3 meets it in 6 "
       "points, so K_W^2 = -4."},
      {"node-one", "Z8 quotient with one node",
       "The singular scheme has dimension 0 and degree 8, misses the two fixed spaces of t^4 and meets the fixed P3 "
       "of a in 8 points; at P1 the tangent space has dimension 3, a acts as -1 and the point is an ordinary double "
       "point."},
      {"node-two", "Z8 quotient with two nodes",
       "The singular scheme has dimension 0 and degree 16 and meets the fixed P2 of a at P1, P2, Q1, Q2."},
      {"order-sixteen", "the group <a, t>", "t has order 8, ata = t^3, and <a, t> has order 16."},
      {"openness", "one surface suffices",
       "The checked conditions are open in the parameters, so verifying one member certifies the general one. Not "
       "computed here."},
  };
  return table;
}

const Citation& find_citation(const std::string& key) {
  const auto& t = citation_table();
  const auto it = std::find_if(t.begin(), t.end(), [&](const Citation& c) { return c.key == key; });
  if (it == t.end()) throw UnknownCitation(key);
  return *it;
}

bool has_citation(const std::string& key) {
  const auto& t = citation_table();
  return std::any_of(t.begin(), t.end(), [&](const Citation& c) { return c.key == key; });
}

}  // namespace campedelli
