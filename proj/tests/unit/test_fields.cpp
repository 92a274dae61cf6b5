#include <random>

#include "campedelli/fields.hpp"
#include "campedelli/expression.hpp"
#include "doctest.h"

using namespace campedelli;

TEST_CASE("rational inverse and normalization") {
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK(Rational(4, -6).to_string() == "-2/3");
  CHECK(Rational(0, 5).denominator() == 1);
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational(0).inverse(), ZeroInverse);
  CHECK_THROWS_AS(Rational::parse("1/"), SyntaxError);
}

TEST_CASE("prime field inverse") {
  const Fp five(5, 7);
  CHECK(five.inverse().residue() == 3);
  CHECK_THROWS_AS(Fp(0, 7).inverse(), ZeroInverse);
  CHECK_THROWS_AS(Fp(1, 7) + Fp(1, 11), IncompatibleField);
  CHECK_THROWS_AS(FieldDescriptor::prime(15), BadPrime);
  for (std::uint64_t p : kDefaultPrimes) {
    CHECK(is_prime(p));
    CHECK(p % 24 == 1);
  }
}

TEST_CASE("unbound integer constants adopt the bound field") {
  const Fp a(3, 7);
  CHECK((a + Fp(5)).residue() == 1);
  CHECK((Fp(2) * a).residue() == 6);
  CHECK(Fp(0) == Fp(0, 7));
  const Cyclotomic z = Cyclotomic::generator(3);
  CHECK((z + Cyclotomic(1)).order() == 3);
}

TEST_CASE("cyclotomic minimal polynomials") {
  auto as_long = [](std::uint64_t n) {
    std::vector<long> out;
    for (const auto& c : cyclotomic_minimal_poly(n)) out.push_back(c.get_si());
    return out;
  };
  CHECK(as_long(3) == std::vector<long>{1, 1, 1});
  CHECK(as_long(8) == std::vector<long>{1, 0, 0, 0, 1});
  CHECK(as_long(4) == std::vector<long>{1, 0, 1});
  CHECK(as_long(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(as_long(1) == std::vector<long>{-1, 1});
  for (std::uint64_t n = 1; n <= 30; ++n) CHECK(cyclotomic_minimal_poly(n).size() - 1 == euler_phi(n));
}

TEST_CASE("cyclotomic arithmetic") {
  const Cyclotomic z = Cyclotomic::generator(3);
  CHECK(z.inverse() == Cyclotomic::parse("-zeta - 1", 3));
  CHECK((Cyclotomic(3, Rational(1)) + z + z * z).is_zero());
  const Cyclotomic w = Cyclotomic::generator(8);
  CHECK(w.pow(4) == Cyclotomic(8, Rational(-1)));
  CHECK(w.pow(8).is_one());
  const Cyclotomic u = Cyclotomic::parse("1 - zeta^2", 8);
  CHECK(u.to_string() == "1 - zeta^2");
  CHECK((u * u.inverse()).is_one());
  CHECK(Cyclotomic::parse("2/3*zeta^5", 8).to_string() == "-2/3*zeta");
  CHECK_THROWS_AS(Cyclotomic::parse("zeta + y", 8), UnknownSymbol);
}

TEST_CASE("reduction to prime fields") {
  CHECK(reduce_to_prime_field(Rational(2, 3), 7).residue() == 3);
  CHECK(reduce_to_prime_field(Rational(0), 101).is_zero());
  CHECK_THROWS_AS(reduce_to_prime_field(Rational(1, 7), 7), BadPrime);
  const std::uint64_t p = kDefaultPrimes[0];
  const Fp root = primitive_root_of_unity(8, p);
  CHECK(root.pow(4) == Fp(-1, p));
  const Fp w3 = primitive_root_of_unity(3, p);
  CHECK((w3 * w3 + w3 + Fp(1, p)).is_zero());
  CHECK_THROWS_AS(primitive_root_of_unity(5, 7), BadPrime);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(-20, 20);
  auto rnd_q = [&] { return Rational(small(rng), 1 + std::abs(small(rng))); };
  auto rnd_c = [&] {
    return Cyclotomic(8, std::vector<mpq_class>{rnd_q().value(), rnd_q().value(), rnd_q().value(), rnd_q().value()});
  };
  const std::uint64_t p = kDefaultPrimes[1];
  const Fp root = primitive_root_of_unity(8, p);
  for (int it = 0; it < 50; ++it) {
    const Rational a = rnd_q(), b = rnd_q(), c = rnd_q();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    // reduction is a ring homomorphism
    CHECK(reduce_to_prime_field(a * b + c, p) ==
          reduce_to_prime_field(a, p) * reduce_to_prime_field(b, p) + reduce_to_prime_field(c, p));
    if (!a.is_zero()) CHECK(reduce_to_prime_field(a.inverse(), p) == reduce_to_prime_field(a, p).inverse());
    const Cyclotomic x = rnd_c(), y = rnd_c(), w = rnd_c();
    CHECK((x * y) * w == x * (y * w));
    CHECK(x * (y + w) == x * y + x * w);
    if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
    CHECK(reduce_to_prime_field(x * y - w, root) ==
          reduce_to_prime_field(x, root) * reduce_to_prime_field(y, root) - reduce_to_prime_field(w, root));
    const Fp fa(small(rng), p), fb(small(rng), p), fc(small(rng), p);
    CHECK(fa * (fb + fc) == fa * fb + fa * fc);
    if (!fa.is_zero()) CHECK((fa * fa.inverse()).is_one());
  }
}
