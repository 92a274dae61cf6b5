#include <random>

#include "campedelli/polynomial.hpp"
#include "doctest.h"

using namespace campedelli;
using P = Polynomial<Rational>;

namespace {

RingPtr ring_xyz(MonomialOrder order = MonomialOrder::grevlex()) {
  return Ring::create({"x", "y", "z"}, FieldDescriptor::rational(), order);
}

P parse(const RingPtr& r, const char* s) { return parse_polynomial<Rational>(r, s); }

P random_poly(const RingPtr& r, std::mt19937_64& rng, int terms, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<Term<Rational>> ts;
  for (int k = 0; k < terms; ++k) {
    std::vector<int> ex;
    for (int i = 0; i < r->nvars(); ++i) ex.push_back(e(rng));
    ts.push_back({Monomial(ex), Rational(c(rng), 1 + std::abs(c(rng)))});
  }
  return P::from_terms(r, ts);
}

}  // namespace

TEST_CASE("multiplication and canonical printing") {
  auto r = ring_xyz();
  CHECK((parse(r, "x+y") * parse(r, "x-y")) == parse(r, "x^2-y^2"));
  CHECK((parse(r, "x+y") * parse(r, "x-y")).to_string() == "x^2 - y^2");
  const P f = parse(r, "3*x*y - 1/2*z^2 + 7");
  CHECK(f * P::one(r) == f);
  CHECK(parse(r, "-x").to_string() == "-x");
  CHECK(parse(r, "2^3*x").to_string() == "8*x");
}

TEST_CASE("parser precedence and errors") {
  auto r = ring_xyz();
  CHECK(parse(r, "-x^2") == -(parse(r, "x") * parse(r, "x")));
  CHECK(parse(r, "x - y - z") == parse(r, "x") - parse(r, "y") - parse(r, "z"));
  CHECK(parse(r, "2*x^2*3") == parse(r, "6*x^2"));
  CHECK(parse(r, "x^0") == P::one(r));
  CHECK_THROWS_AS(parse(r, "x + "), SyntaxError);
  CHECK_THROWS_AS(parse(r, "x + w"), UnknownVariable);
  try {
    parse(r, "x * * y");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("print then parse round-trips") {
  auto r = Ring::create({"x0", "x1", "x2"}, FieldDescriptor::rational());
  const P f = parse(r, "x0^2 + 2/3*x1*x2");
  CHECK(f.to_string() == "x0^2 + 2/3*x1*x2");
  CHECK(parse(r, f.to_string().c_str()) == f);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 30; ++k) {
    const P g = random_poly(r, rng, 6, 3);
    CHECK(parse_polynomial<Rational>(r, g.to_string()) == g);
  }
}

TEST_CASE("parameters resolve to field constants") {
  auto r = Ring::create({"x1", "x2", "x3", "x4", "x5", "x6", "x7"}, FieldDescriptor::rational());
  const std::map<std::string, Rational> params{{"a", Rational(-1)}, {"b", Rational(1)}, {"f", Rational(-2)}};
  const P f0 = parse_polynomial<Rational>(r, "b*(x1*x7+x3*x5)+a*x4^2+f*x2*x6", params);
  CHECK(f0 == parse(r, "x1*x7 + x3*x5 - x4^2 - 2*x2*x6"));
  CHECK(f0.is_homogeneous());
  CHECK(f0.total_degree() == 2);
}

TEST_CASE("substitution") {
  auto r = Ring::create({"x1", "x2", "x3", "x4", "x5", "x6", "x7"}, FieldDescriptor::rational());
  // F4 with k = g = 1 through the one-node point.
  const P f4 = parse(r, "(x2^2+x6^2) + x1*x3 + (2-1)*x5*x7");
  const std::vector<Rational> p1{1, 1, -1, 0, 1, -1, -1};
  CHECK(f4.evaluate(p1).is_zero());
  // Identity substitution.
  CHECK(f4.substitute({}) == f4);
  // Curve substitution into a parameter ring.
  auto x = Ring::create({"x0", "x1", "x2", "y0", "y1", "y2"}, FieldDescriptor::rational(), MonomialOrder::grevlex(),
                        {{0, 1, 2}, {3, 4, 5}});
  auto ab = Ring::create({"a", "b"}, FieldDescriptor::rational());
  const P q = parse_polynomial<Rational>(x, "x0*y0 + x1*y1 + x2*y2");
  const auto A = P::variable(ab, "a");
  const auto B = P::variable(ab, "b");
  const std::map<std::string, P> gamma1{{"x0", P(ab)},      {"x1", P::one(ab)}, {"x2", -P::one(ab)},
                                        {"y0", A},          {"y1", B},          {"y2", B}};
  CHECK(q.substitute(gamma1, ab).is_zero());
  CHECK_THROWS_AS(q.substitute({{"x0", A}}, ab), UnboundVariable);
}

TEST_CASE("bigrading") {
  auto x = Ring::create({"x0", "x1", "x2", "y0", "y1", "y2"}, FieldDescriptor::rational(), MonomialOrder::grevlex(),
                        {{0, 1, 2}, {3, 4, 5}});
  const P q = parse_polynomial<Rational>(x, "x0*y0 + x1*y1 + x2*y2");
  CHECK(*q.multidegree() == std::vector<int>{1, 1});
  CHECK(*(q * q).multidegree() == std::vector<int>{2, 2});
  const P c = parse_polynomial<Rational>(x, "(x0^3+x1^3+x2^3)*(y0^3+y1^3+y2^3) + 5*x0*x1*x2*y0*y1*y2");
  CHECK(*c.multidegree() == std::vector<int>{3, 3});
  CHECK_FALSE(parse_polynomial<Rational>(x, "x0 + y0^2").is_multihomogeneous());
}

TEST_CASE("leading terms") {
  auto r = ring_xyz();
  CHECK(leading_term(parse(r, "x*y + z^2"), MonomialOrder::grevlex()).monomial == Monomial({1, 1, 0}));
  auto r2 = Ring::create({"x", "y"}, FieldDescriptor::rational(), MonomialOrder::lex());
  CHECK(leading_term(parse(r2, "y^5 + x"), MonomialOrder::lex()).monomial == Monomial({1, 0}));
  const auto t = leading_term(parse(r, "7"), MonomialOrder::grevlex());
  CHECK(t.monomial.is_one());
  CHECK(t.coefficient == Rational(7));
  CHECK_THROWS_AS(leading_term(P(r), MonomialOrder::lex()), ZeroPolynomial);
}

TEST_CASE("ring axioms, multiplicativity of leading terms, derivative rules") {
  std::mt19937_64 rng(11);
  const std::vector<MonomialOrder> orders{MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::deglex(),
                                          MonomialOrder::block(0b001), MonomialOrder::weighted({{1, 2, 3}})};
  for (const auto& ord : orders) {
    auto r = ring_xyz(ord);
    for (int k = 0; k < 15; ++k) {
      const P f = random_poly(r, rng, 4, 3), g = random_poly(r, rng, 4, 3), h = random_poly(r, rng, 3, 2);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
      CHECK(f * g == g * f);
      if (!f.is_zero() && !g.is_zero()) {
        const auto lf = leading_term(f, ord), lg = leading_term(g, ord), lfg = leading_term(f * g, ord);
        CHECK(lfg.monomial == lf.monomial * lg.monomial);
        CHECK(lfg.coefficient == lf.coefficient * lg.coefficient);
      }
      CHECK((f * g).derivative(0) == f.derivative(0) * g + f * g.derivative(0));
      // Differentiate in x, then fix y: same as fixing y first.
      const std::map<std::string, P> fix_y{{"y", P::from_int(r, 3)}};
      CHECK(f.derivative(0).substitute(fix_y) == f.substitute(fix_y).derivative(0));
    }
  }
}

TEST_CASE("polynomials over prime and cyclotomic fields") {
  const std::uint64_t p = kDefaultPrimes[0];
  auto rp = Ring::create({"x", "y"}, FieldDescriptor::prime(p));
  const auto f = parse_polynomial<Fp>(rp, "1/2*x - y");
  CHECK((f * Fp(2, p)) == parse_polynomial<Fp>(rp, "x - 2*y"));
  auto rc = Ring::create({"x", "y"}, FieldDescriptor::cyclotomic(8));
  const auto g = parse_polynomial<Cyclotomic>(rc, "zeta^2*x + y");
  CHECK(g.to_string() == "(zeta^2)*x + y");
  CHECK(parse_polynomial<Cyclotomic>(rc, g.to_string()) == g);
  CHECK((g * g * g * g) == parse_polynomial<Cyclotomic>(rc, "(zeta^2*x + y)^4"));
}
