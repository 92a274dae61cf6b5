#include <random>

#include "campedelli/ideal.hpp"
#include "doctest.h"

using namespace campedelli;
using P = Polynomial<Rational>;
using I = Ideal<Rational>;

namespace {

P parse(const RingPtr& r, const char* s) { return parse_polynomial<Rational>(r, s); }

I ideal(const RingPtr& r, std::initializer_list<const char*> src) {
  std::vector<P> g;
  for (const char* s : src) g.push_back(parse(r, s));
  return I(r, std::move(g));
}

/// Determinant by cofactor expansion along the first row.
P cofactor_determinant(const std::vector<std::vector<P>>& m, const RingPtr& r) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  P det(r);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<P>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<P> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    const P term = m[0][j] * cofactor_determinant(minor, r);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

/// Monomials of degree d outside the monomial ideal, counted one by one.
long brute_force_count(const std::vector<Monomial>& gens, int nvars, int d) {
  long count = 0;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars - 1) {
      e[static_cast<std::size_t>(i)] = left;
      const Monomial m(e);
      for (const auto& g : gens) {
        if (g.divides(m)) return;
      }
      ++count;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return count;
}

Polynomial<Fp> random_form(const RingPtr& r, int degree, std::mt19937_64& rng) {
  const std::uint64_t p = r->field().parameter;
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  std::vector<Term<Fp>> terms;
  std::vector<int> e(static_cast<std::size_t>(r->nvars()), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == r->nvars() - 1) {
      e[static_cast<std::size_t>(i)] = left;
      terms.push_back({Monomial(e), Fp::from_residue(dist(rng), p)});
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return Polynomial<Fp>::from_terms(r, std::move(terms));
}

}  // namespace

TEST_CASE("elimination") {
  auto r = Ring::create({"t", "x", "y"}, FieldDescriptor::rational());
  const auto e = eliminate(ideal(r, {"x - t^2", "y - t^3"}), {0});
  // Oracle: the Sylvester resultant of t^2 - x and t^3 - y in t.
  const P one = P::one(r);
  const P zero(r);
  const P x = parse(r, "x");
  const P y = parse(r, "y");
  std::vector<std::vector<P>> syl = {
      {one, zero, -x, zero, zero},
      {zero, one, zero, -x, zero},
      {zero, zero, one, zero, -x},
      {one, zero, zero, -y, zero},
      {zero, one, zero, zero, -y},
  };
  const P res = cofactor_determinant(syl, r);
  CHECK(e == I(r, {res}));
  CHECK(e == ideal(r, {"y^2 - x^3"}));

  CHECK(eliminate(ideal(r, {"t*x - 1"}), {0}).is_zero());
  const auto same = ideal(r, {"x^2 + y", "x*y"});
  CHECK(eliminate(same, {}) == same);
}

TEST_CASE("saturation") {
  auto r = Ring::create({"x", "y"}, FieldDescriptor::rational());
  const auto y = I(r, {parse(r, "y")});
  CHECK(saturate(ideal(r, {"x^2*y"}), y) == ideal(r, {"x^2"}));
  CHECK(saturate(ideal(r, {"x^2*y", "y^2"}), y).is_unit());
  CHECK(saturate(ideal(r, {"x^2*y"}), I::unit(r)) == ideal(r, {"x^2*y"}));
  CHECK(saturate(I::unit(r), y).is_unit());

  auto r3 = Ring::create({"x", "y", "z"}, FieldDescriptor::rational());
  const auto base = ideal(r3, {"x*y^2 - x*z^2", "x^2*z*y", "y^3*z - x^3"});
  const auto J = ideal(r3, {"x", "y"});
  const auto s = saturate(base, J);
  CHECK(s.contains(base));
  CHECK(saturate(s, J) == s);
}

TEST_CASE("intersection and colon") {
  auto r = Ring::create({"x", "y"}, FieldDescriptor::rational());
  CHECK(intersect(ideal(r, {"x"}), ideal(r, {"y"})) == ideal(r, {"x*y"}));
  CHECK(intersect(ideal(r, {"x^2", "y"}), ideal(r, {"x", "y^2"})) == ideal(r, {"x^2", "x*y", "y^2"}));
  CHECK(colon(ideal(r, {"x*y", "y^2"}), parse(r, "y")) == ideal(r, {"x", "y"}));
  CHECK(colon(ideal(r, {"x^2"}), ideal(r, {"x"})) == ideal(r, {"x"}));
}

TEST_CASE("hilbert dimension and degree") {
  auto p6 = Ring::create({"x0", "x1", "x2", "x3", "x4", "x5", "x6"}, FieldDescriptor::rational());
  auto hd = hilbert_dimension_degree(I::zero(p6));
  CHECK(hd.dimension == 6);
  CHECK(hd.degree == 1);
  CHECK(hilbert_dimension_degree(I::irrelevant(p6)).dimension == -1);
  CHECK(hilbert_dimension_degree(I::unit(p6)).degree == 0);

  auto fp6 = Ring::create({"x0", "x1", "x2", "x3", "x4", "x5", "x6"}, FieldDescriptor::prime(kDefaultPrimes[0]));
  std::mt19937_64 rng(11);
  std::vector<Polynomial<Fp>> quadrics;
  for (int i = 0; i < 4; ++i) quadrics.push_back(random_form(fp6, 2, rng));
  hd = hilbert_dimension_degree(Ideal<Fp>(fp6, quadrics));
  CHECK(hd.dimension == 2);
  CHECK(hd.degree == 16);

  auto r = Ring::create({"x", "y"}, FieldDescriptor::rational());
  CHECK_THROWS_AS(hilbert_dimension_degree(ideal(r, {"x^2 + y"})), NotHomogeneous);
}

TEST_CASE("hilbert function matches monomial counting") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    std::vector<Monomial> gens;
    const int ngens = 1 + static_cast<int>(rng() % 5);
    for (int g = 0; g < ngens; ++g) {
      std::vector<int> e(static_cast<std::size_t>(n));
      for (auto& x : e) x = static_cast<int>(rng() % 4);
      if (Monomial(e).is_one()) e[0] = 1;
      gens.emplace_back(e);
    }
    const auto num = hilbert_numerator(gens, n);
    for (int d = 0; d <= 8; ++d) CHECK(hilbert_function(num, n, d) == brute_force_count(gens, n, d));
  }
}

TEST_CASE("complete intersections have product degree") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    auto r = Ring::create(names, FieldDescriptor::prime(kDefaultPrimes[1]));
    const int c = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    std::vector<Polynomial<Fp>> gens;
    long product = 1;
    for (int i = 0; i < c; ++i) {
      const int d = 1 + static_cast<int>(rng() % 3);
      product *= d;
      gens.push_back(random_form(r, d, rng));
    }
    const auto hd = hilbert_dimension_degree(Ideal<Fp>(r, gens));
    CHECK(hd.dimension == n - 1 - c);
    CHECK(hd.degree == product);
  }
}

TEST_CASE("projective emptiness agrees with the hilbert dimension") {
  auto p6 = Ring::create({"x0", "x1", "x2", "x3", "x4", "x5", "x6"}, FieldDescriptor::rational());
  CHECK(is_projectively_empty(I::irrelevant(p6)));
  auto r = Ring::create({"x", "y", "z"}, FieldDescriptor::rational());
  CHECK_FALSE(is_projectively_empty(ideal(r, {"x - y", "z"})));
  CHECK_THROWS_AS(is_projectively_empty(ideal(r, {"x - 1"})), NotHomogeneous);

  auto fr = Ring::create({"x", "y", "z", "w"}, FieldDescriptor::prime(kDefaultPrimes[2]));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Polynomial<Fp>> gens;
    const int c = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < c; ++i) {
      auto f = random_form(fr, 1 + static_cast<int>(rng() % 2), rng);
      // Sparsify so that some systems keep common zeros.
      std::vector<Term<Fp>> kept;
      for (const auto& t : f.terms()) {
        if (rng() % 3 == 0) kept.push_back(t);
      }
      if (kept.empty()) kept.push_back(f.terms().front());
      gens.push_back(Polynomial<Fp>::from_terms(fr, kept));
    }
    const Ideal<Fp> J(fr, gens);
    CHECK(is_projectively_empty(J) == (hilbert_dimension_degree(J).dimension == -1));
  }
}

TEST_CASE("multigraded emptiness uses product charts") {
  auto r = Ring::create({"x0", "x1", "y0", "y1"}, FieldDescriptor::rational(), MonomialOrder::grevlex(),
                        {{0, 1}, {2, 3}});
  // x0 = x1 = 0 is empty in P1 x P1 but not in P3.
  CHECK(is_projectively_empty(ideal(r, {"x0", "x1"})));
  CHECK_FALSE(is_projectively_empty(ideal(r, {"x0*y0 + x1*y1"})));
}

TEST_CASE("support of zero-dimensional schemes") {
  auto p1 = Ring::create({"x", "y"}, FieldDescriptor::rational());
  auto s = zero_dim_support(ideal(p1, {"x^2"}));
  CHECK(s.reduced_degree == 1);
  REQUIRE(s.points.size() == 1);
  CHECK(s.points[0] == std::vector<Rational>{Rational(0), Rational(1)});

  auto p2 = Ring::create({"x", "y", "z"}, FieldDescriptor::rational());
  s = zero_dim_support(ideal(p2, {"x^2 - y^2", "z"}));
  CHECK(s.reduced_degree == 2);
  REQUIRE(s.points.size() == 2);
  CHECK(s.points[0] == std::vector<Rational>{Rational(1), Rational(-1), Rational(0)});
  CHECK(s.points[1] == std::vector<Rational>{Rational(1), Rational(1), Rational(0)});

  // x^2 + y^2 has no rational points but two geometric ones.
  s = zero_dim_support(ideal(p2, {"x^2 + y^2", "z"}));
  CHECK(s.reduced_degree == 2);
  CHECK(s.points.empty());

  CHECK_THROWS_AS(zero_dim_support(ideal(p2, {"x"})), DimensionNotZero);
}
