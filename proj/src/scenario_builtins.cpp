#include <map>

#include "campedelli/scenario.hpp"

namespace campedelli::scenario {

namespace {

const char* const kBarlowOneNode = R"(
[scenario]
name = barlow-one-node
description = Four quadrics in P6 invariant under <a, t>, with a node at P1 and its t-orbit
cite = node-one, order-sixteen, openness

[ring]
variables = x1 x2 x3 x4 x5 x6 x7
field = cyclotomic:8

[params]
a = -1
b = 1
c = 1
d = 1
e = -1
g = 1
k = 1

[ideal]
b*(x1*x7 + x3*x5) + a*x4^2 - 2*b*x2*x6
c*x1^2 + d*x3*x7 + e*x4*x6 - (c + d)*x5^2
k*(x2^2 + x6^2) + g*x1*x3 + (2*k - g)*x5*x7
c*x3^2 + d*x1*x5 + e*x4*x2 - (c + d)*x7^2

[group]
t = diag(zeta, zeta^2, zeta^3, zeta^4, zeta^5, zeta^6, zeta^7)
a = perm(3, 6, 1, 4, 7, 2, 5)

[points]
P1 = 1, 1, -1, 0, 1, -1, -1

[checks]
singular: singular 4 expect dim=0 deg=8 cite node-one
singular-orbit: singular-support 4 [orbit(t, P1)] expect true cite node-one
miss-H1: empty Y+[x1, x3, x5, x7] expect true cite node-one
miss-H2: empty Y+[x2, x4, x6] expect true cite node-one
t-free: free t expect true cite node-one
fixed-P3: dimdeg Y+[x1 - x3, x2 - x6, x5 - x7] expect dim=0 deg=8 cite node-one
tangent: tangent-dim P1 expect 3 cite node-one
tangent-action: tangent-action a P1 expect -identity cite node-one
node: node P1 expect A1 cite node-one
order-t: order t expect 8 cite order-sixteen
order-G: order [a, t] expect 16 cite order-sixteen
ata: relation a*t*a t^3 expect true cite order-sixteen
openness: note cite openness
)";

const char* const kBarlowTwoNode = R"(
[scenario]
name = barlow-two-node
description = Four quadrics in P6 invariant under <a, t>, with nodes at the t-orbits of P1 and Q1
cite = node-two, openness

[ring]
variables = x1 x2 x3 x4 x5 x6 x7
field = cyclotomic:8

[params]
a = -1
b = 1
c = 4
e = -1

[ideal]
b*(x1*x7 + x3*x5) + a*x4^2 - 2*b*x2*x6
c*x1^2 - 5/4*c*x3*x7 + e*x4*x6 + 1/4*c*x5^2
5*(x2^2 + x6^2) + 8*x1*x3 + 2*x5*x7
c*x3^2 - 5/4*c*x1*x5 + e*x4*x2 + 1/4*c*x7^2

[group]
t = diag(zeta, zeta^2, zeta^3, zeta^4, zeta^5, zeta^6, zeta^7)
a = perm(3, 6, 1, 4, 7, 2, 5)

[points]
P1 = 1, 1, -1, 0, 1, -1, -1
P2 = t^4 . P1
Q1 = 1, 2, -1, 0, 4, -2, -4
Q2 = t^4 . Q1

[checks]
singular: singular 4 expect dim=0 deg=16 cite node-two
singular-orbits: singular-support 4 [orbit(t, P1), orbit(t, Q1)] expect true cite node-two
fixed-P2-support: support singular(4)+[x4, x1 + x3, x2 + x6, x5 + x7] expect {P1, P2, Q1, Q2} cite node-two
fixed-P3: dimdeg Y+[x1 - x3, x2 - x6, x5 - x7] expect dim=0 deg=8 cite node-two
t-free: free t expect true cite node-two
node-P1: node P1 expect A1 cite node-two
node-Q1: node Q1 expect A1 cite node-two
openness: note cite openness
)";

const char* const kBeauvilleXiao = R"(
[scenario]
name = beauville-xiao
description = Z3^2 acting freely on a family of surfaces in P2 x P2, with the involutions sigma1 and sigma2
cite = z3sq-free, z3sq-sigma1, z3sq-sigma2
require = smooth, gamma3

[ring]
blocks = x0 x1 x2 | y0 y1 y2
field = cyclotomic:3

[params]
lambda = 1 | 2 | 3 | 4 | 5 | 6 | 7 | 8

[ideal]
x0*y0 + x1*y1 + x2*y2
(x0^3 + x1^3 + x2^3)*(y0^3 + y1^3 + y2^3) + lambda*x0*x1*x2*y0*y1*y2

[group]
g1 = block(perm(2, 3, 1), perm(2, 3, 1))
g2 = block(diag(1, zeta, zeta^2), diag(1, zeta^2, zeta))
sigma1 = swap(identity(3), identity(3))
sigma2 = block(perm(1, 3, 2), perm(1, 3, 2))

[checks]
smooth: smooth 2 expect true cite z3sq-free
gamma1: curve [0, 1, -1, a, b, b] expect contained cite z3sq-sigma2
gamma2: curve [a, b, b, 0, 1, -1] expect contained cite z3sq-sigma2
gamma3: curve [a, b, b, -2*b, a, a] expect deg=6 distinct cite z3sq-sigma2
order-G: order [g1, g2] expect 9 cite z3sq-free
order-G0: order [g1, g2, sigma1] expect 18 cite z3sq-free
commute-g1: relation sigma1*g1 g1*sigma1 expect true cite z3sq-free
conjugate-g2: relation sigma1*g2 g2^2*sigma1 expect true cite z3sq-free
free: free [g1, g2] expect true cite z3sq-free
sigma1-fixed: fixed sigma1 expect dim=0 deg=12 cite z3sq-sigma1
square-shortcut: square-shortcut sigma1 [g1, g2] g2 expect true cite z3sq-sigma1
order-G0-sigma2: order [g1, g2, sigma2] expect 18 cite z3sq-sigma2
invert-g1: relation sigma2*g1 g1^-1*sigma2 expect true cite z3sq-sigma2
invert-g2: relation sigma2*g2 g2^-1*sigma2 expect true cite z3sq-sigma2
involutions: involutions [g1, g2, sigma2] expect count=9 classes=1 cite z3sq-sigma2
sigma2-numerics: derive 6 -4 -1 expect ok cite genus-two
sigma1-quotient: classify 4 1 expect numerical Godeaux cite k4-quotient
)";

std::string z2cube_case(int n) {
  const int K2 = -(n - 1);
  const std::string k2 = std::to_string(K2);
  const std::string type = n == 1 ? "Enriques" : "rational";
  const char* triples[] = {"", "one triple point", "two triple points", "three triple points"};
  const std::string cite = n == 1 ? "enriques-case" : "rational-minus" + std::to_string(n - 1);
  return "[scenario]\n"
         "name = z2cube-case" + std::to_string(n) + "\n"
         "description = " +
         (n == 1 ? std::string("Seven lines with no triple point")
                 : std::string("Seven lines with ") + triples[n - 1] + " of label sum 100") + "\n"
         "cite = z2cube-cover, z2cube-cases\n\n"
         "[checks]\n"
         "case: cover-case " + std::to_string(n) + " expect case " + std::to_string(n) + " cite z2cube-cases\n"
         "parity: cover-parity " + std::to_string(n) + " expect 4,4,4 cite z2cube-cover\n"
         "numerics: derive 6 " + k2 + " 3 expect ok cite ramification\n"
         "quotient: classify 6 " + k2 + " expect " + type + " cite " + cite + "\n";
}

const char* const kRemarkSearch = R"(
[scenario]
name = z2cube-remark-search
description = Label triples with a common sum, and the attempt to place four triple points
cite = z2cube-four

[checks]
triples-nonzero: cover-triples 100 expect 4 cite z2cube-cases
triples-zero: cover-triples 000 expect 7 cite z2cube-cover
four-point: cover-four-point 100 expect complete-quadrangle cite z2cube-four
)";

const char* const kInvariantGrid = R"(
[scenario]
name = invariant-grid
description = Numerical invariants of the involution over a grid of (k, K_W^2, K_W'^2, p_a)
cite = dichotomy, d-numerics, ramification, w-prime, k4-quotient

[checks]
grid: grid expect consistent cite d-numerics
k5: derive 5 0 expect k in {4,6} cite dichotomy
k6-enriques: classify 6 0 expect Enriques cite w-prime
k6-rational: classify 6 -2 expect rational cite w-prime
k6-low: derive 6 -5 3 expect -4 <= K_W^2 <= 0; -6 <= R^2 <= 2 cite d-numerics
k4-godeaux: classify 4 1 expect numerical Godeaux cite k4-quotient
k4-elliptic: classify 4 0 expect properly elliptic cite k4-quotient
k4-low: classify 4 -1 expect not of general type cite k4-quotient
)";

const std::map<std::string, std::string>& sources() {
  static const std::map<std::string, std::string> s = [] {
    std::map<std::string, std::string> m;
    m.emplace("barlow-one-node", kBarlowOneNode);
    m.emplace("barlow-two-node", kBarlowTwoNode);
    m.emplace("beauville-xiao", kBeauvilleXiao);
    for (int n = 1; n <= 4; ++n) m.emplace("z2cube-case" + std::to_string(n), z2cube_case(n));
    m.emplace("z2cube-remark-search", kRemarkSearch);
    m.emplace("invariant-grid", kInvariantGrid);
    return m;
  }();
  return s;
}

const std::vector<std::string>& catalog_order() {
  static const std::vector<std::string> order = {
      "barlow-one-node", "barlow-two-node", "beauville-xiao",       "z2cube-case1",  "z2cube-case2",
      "z2cube-case3",    "z2cube-case4",    "z2cube-remark-search", "invariant-grid"};
  return order;
}

}  // namespace

std::vector<CatalogEntry> list_builtin() {
  std::vector<CatalogEntry> out;
  for (const auto& name : catalog_order()) {
    const Scenario s = builtin_scenario(name);
    out.push_back({s.name, s.description, s.cites});
  }
  return out;
}

const std::string& builtin_source(const std::string& name) {
  const auto& m = sources();
  const auto it = m.find(name);
  if (it == m.end()) throw std::out_of_range("no built-in scenario '" + name + "'");
  return it->second;
}

Scenario builtin_scenario(const std::string& name) { return parse_scenario(builtin_source(name)); }

}  // namespace campedelli::scenario
