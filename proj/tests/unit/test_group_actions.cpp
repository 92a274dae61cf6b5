#include <random>

#include "doctest.h"
#include "fixtures.hpp"

using namespace campedelli;
using fixtures::involution_a;
using fixtures::order_eight_t;
using C = Cyclotomic;

namespace {

const C kOne8(8, Rational(1));

Polynomial<C> random_poly(const RingPtr& r, std::mt19937_64& rng) {
  std::vector<Term<C>> terms;
  for (int k = 0; k < 5; ++k) {
    std::vector<int> e(static_cast<std::size_t>(r->nvars()), 0);
    for (int j = 0; j < 3; ++j) e[rng() % e.size()] += 1;
    terms.push_back({Monomial(e), C(8, Rational(static_cast<long>(rng() % 7) - 3))});
  }
  return Polynomial<C>::from_terms(r, terms);
}

}  // namespace

TEST_CASE("projective equality") {
  const auto id = ProjAutomorphism<Rational>::identity({3}, Rational(1));
  const auto two = ProjAutomorphism<Rational>::diagonal({Rational(2), Rational(2), Rational(2)});
  CHECK(projective_equal(two, id));
  CHECK_FALSE(projective_equal(involution_a(kOne8), order_eight_t()));
  CHECK_THROWS_AS(projective_equal(id, ProjAutomorphism<Rational>::identity({4}, Rational(1))), ShapeMismatch);

  const auto g = fixtures::p2p2_generators();
  CHECK(projective_equal(g.s1 * g.g2 * g.s1, g.g2 * g.g2));
  CHECK(projective_equal(g.s1 * g.g1, g.g1 * g.s1));
  // Swap flags must agree.
  CHECK_FALSE(projective_equal(g.s1, ProjAutomorphism<C>::identity({3, 3}, C(3, Rational(1)))));
}

TEST_CASE("closure of the order sixteen group") {
  const auto t = order_eight_t();
  const auto a = involution_a(kOne8);
  CHECK(FiniteMatrixGroup<C>::closure({t}).order() == 8);
  const auto G = FiniteMatrixGroup<C>::closure({a, t});
  CHECK(G.order() == 16);
  CHECK(projective_equal(a * t * a, t.pow(3)));
  CHECK(G.table_is_group());
  CHECK_FALSE(G.is_abelian());
  CHECK_FALSE(G.is_cyclic());
  CHECK(FiniteMatrixGroup<C>::closure({t}).is_cyclic());
  CHECK_THROWS_AS(FiniteMatrixGroup<C>::closure({a, t}, 10), OrderOverflow);
}

TEST_CASE("groups on the product of two planes") {
  const auto g = fixtures::p2p2_generators();
  const auto G = FiniteMatrixGroup<C>::closure({g.g1, g.g2});
  CHECK(G.order() == 9);
  CHECK(G.is_abelian());
  const auto G1 = FiniteMatrixGroup<C>::closure({g.g1, g.g2, g.s1});
  CHECK(G1.order() == 18);
  CHECK(G1.table_is_group());
  const auto G2 = FiniteMatrixGroup<C>::closure({g.g1, g.g2, g.s2});
  CHECK(G2.order() == 18);
  CHECK(G2.table_is_group());
  // sigma2 g = g^-1 sigma2 for every g in G.
  for (const auto& h : G.elements()) CHECK(projective_equal(g.s2 * h, h.inverse() * g.s2));
  // Nine involutions, all conjugate.
  const auto inv = G2.involutions();
  CHECK(inv.size() == 9);
  std::size_t classes_with_involutions = 0;
  for (const auto& c : G2.conjugacy_classes()) {
    if (G2.element_order(c.front()) == 2) {
      ++classes_with_involutions;
      CHECK(c.size() == 9);
    }
  }
  CHECK(classes_with_involutions == 1);
  // With the factor swap instead, (s1 g2)^2 is trivial and (s1 g1)^2 = g1^2.
  CHECK(is_projectively_trivial((g.s1 * g.g2).pow(2)));
  CHECK(projective_equal((g.s1 * g.g1).pow(2), g.g1.pow(2)));
  CHECK_FALSE(is_projectively_trivial(g.g1.pow(2)));
  CHECK(G1.involutions().size() == 3);
}

TEST_CASE("action on polynomials") {
  const auto r = fixtures::p6(FieldDescriptor::cyclotomic(8));
  const auto t = order_eight_t();
  const auto a = involution_a(kOne8);
  const auto eq = fixtures::parse_all<C>(r, fixtures::one_node_equations());
  CHECK(act_on_polynomial(t, eq[0]) == eq[0]);
  CHECK(act_on_polynomial(a, eq[1]) == eq[3]);
  // Symbolic coefficients: a * (c x1^2 + d x3 x7 + e x4 x6 + h x5^2) = c x3^2 + d x1 x5 + e x4 x2 + h x7^2.
  const auto f2 = parse_polynomial<C>(r, "2*x1^2 + 3*x3*x7 + 5*x4*x6 + 7*x5^2");
  CHECK(act_on_polynomial(a, f2) == parse_polynomial<C>(r, "2*x3^2 + 3*x1*x5 + 5*x4*x2 + 7*x7^2"));
  const auto id = ProjAutomorphism<C>::identity({7}, kOne8);
  CHECK(act_on_polynomial(id, eq[3]) == eq[3]);

  // The matrix convention is a right action, the inverse convention a left one.
  const auto G = FiniteMatrixGroup<C>::closure({a, t});
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    const auto f = random_poly(r, rng);
    const auto& g = G.element(rng() % G.order());
    const auto& h = G.element(rng() % G.order());
    CHECK(act_on_polynomial(g * h, f) == act_on_polynomial(h, act_on_polynomial(g, f)));
    CHECK(act_on_polynomial(g * h, f, ActionConvention::inverse) ==
          act_on_polynomial(g, act_on_polynomial(h, f, ActionConvention::inverse), ActionConvention::inverse));
  }
  CHECK_THROWS_AS(act_on_polynomial(ProjAutomorphism<C>::identity({3}, kOne8), eq[0]), ShapeMismatch);
}

TEST_CASE("ideal invariance") {
  const auto r = fixtures::p6(FieldDescriptor::cyclotomic(8));
  const auto Y = fixtures::one_node<C>(r);
  CHECK(is_ideal_invariant(Y, order_eight_t()));
  CHECK(is_ideal_invariant(Y, involution_a(kOne8)));
  CHECK_FALSE(is_ideal_invariant(Ideal<C>(r, {Polynomial<C>::variable(r, "x1")}), involution_a(kOne8)));
  CHECK(is_ideal_invariant(Y, ProjAutomorphism<C>::identity({7}, kOne8)));
}

TEST_CASE("fixed loci") {
  const auto r = fixtures::p6(FieldDescriptor::rational());
  const Rational one(1);
  auto P = [&](const char* s) { return parse_polynomial<Rational>(r, s); };

  // t^4 = diag(-1, 1, -1, 1, -1, 1, -1) over Q.
  const auto t4 = order_eight_t().pow(4).canonical().map_entries<Rational>([](const C& c) { return c.rational_part(); });
  auto fl = fixed_locus(t4, r);
  REQUIRE(fl.components.size() == 2);
  CHECK(Ideal<Rational>(r, fl.components[0].equations) == Ideal<Rational>(r, {P("x2"), P("x4"), P("x6")}));
  CHECK(Ideal<Rational>(r, fl.components[1].equations) ==
        Ideal<Rational>(r, {P("x1"), P("x3"), P("x5"), P("x7")}));

  fl = fixed_locus(involution_a(one), r);
  REQUIRE(fl.components.size() == 2);
  std::vector<Ideal<Rational>> comps;
  for (const auto& c : fl.components) comps.emplace_back(r, c.equations);
  const Ideal<Rational> p3(r, {P("x1 - x3"), P("x2 - x6"), P("x5 - x7")});
  const Ideal<Rational> p2(r, {P("x1 + x3"), P("x2 + x6"), P("x5 + x7"), P("x4")});
  CHECK(((comps[0] == p3 && comps[1] == p2) || (comps[0] == p2 && comps[1] == p3)));

  fl = fixed_locus(ProjAutomorphism<Rational>::identity({7}, one), r);
  REQUIRE(fl.components.size() == 1);
  CHECK(fl.components[0].equations.empty());

  // The general eigenspace path over Q(zeta_8) splits t into seven points.
  const auto r8 = fixtures::p6(FieldDescriptor::cyclotomic(8));
  const auto t = order_eight_t();
  const auto dense = t * involution_a(kOne8) * t.inverse() * involution_a(kOne8);
  CHECK(fixed_locus(t, r8).components.size() == 7);
  std::size_t total = 0;
  for (const auto& c : fixed_locus(dense, r8).components) total += 7 - c.equations.size();
  CHECK(total == 7);

  // Eigenvalues i = zeta_4 are not rational.
  Matrix<Rational> rot(2, 2);
  rot << Rational(0), Rational(-1), Rational(1), Rational(0);
  Matrix<Rational> rot2 = Matrix<Rational>::Zero(3, 3);
  rot2.block(0, 0, 2, 2) = rot;
  rot2(2, 2) = one;
  const auto r3 = Ring::create({"u", "v", "w"}, FieldDescriptor::rational());
  CHECK_THROWS_AS(fixed_locus(ProjAutomorphism<Rational>(rot2), r3), EigenvalueOutsideField);
}

TEST_CASE("free actions and fixed points on the surfaces") {
  const auto r = fixtures::p6(FieldDescriptor::cyclotomic(8));
  const auto Y = fixtures::one_node<C>(r);
  const auto T = FiniteMatrixGroup<C>::closure({order_eight_t()});
  const auto cert = verify_free_action(T, Y);
  std::size_t checked = 0;
  for (const auto& e : cert.entries) {
    if (e.reason == FreenessReason::checked) {
      ++checked;
      CHECK(T.element_order(e.element) == 2);
    }
    if (e.element != 0 && e.reason != FreenessReason::checked) CHECK(e.reason == FreenessReason::cyclic_shortcut);
  }
  CHECK(checked == 1);

  const auto a = involution_a(kOne8);
  CHECK_THROWS_AS(verify_free_action(FiniteMatrixGroup<C>::closure({a}), Y), NotFree);
  const auto trivial = FiniteMatrixGroup<C>::closure({ProjAutomorphism<C>::identity({7}, kOne8)});
  CHECK(verify_free_action(trivial, Y).entries.size() == 1);

  const auto rq = fixtures::p6(FieldDescriptor::rational());
  const auto Yq = fixtures::one_node<Rational>(rq);
  const auto report = fixed_points_on_variety(involution_a(Rational(1)), Yq);
  REQUIRE(report.components.size() == 2);
  for (const auto& [label, hd] : report.components) {
    CHECK(hd.dimension == 0);
    // Eigenvalue 1 is the P^3 component.
    if (label == "E(1)") CHECK(hd.degree == 8);
  }
  CHECK(fixed_points_on_variety(ProjAutomorphism<Rational>::identity({7}, Rational(1)), Yq).total.dimension == 2);
}

TEST_CASE("the product of planes at a sample parameter") {
  const auto r = fixtures::p2p2(FieldDescriptor::cyclotomic(3));
  const auto Y = fixtures::p2p2_surface<C>(r, 1);
  const auto g = fixtures::p2p2_generators();
  const auto G = FiniteMatrixGroup<C>::closure({g.g1, g.g2});
  const auto cert = verify_free_action(G, Y);
  CHECK(cert.entries.size() == 9);
  const auto hd = fixed_points_on_variety(g.s1, Y).total;
  CHECK(hd.dimension == 0);
  CHECK(hd.degree == 12);
}
