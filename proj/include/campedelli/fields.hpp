#pragma once

// Exact coefficient fields: arbitrary-precision rationals, prime fields and
// cyclotomic quotients Q[z]/Phi_n(z).
//
// Every scalar type exposes the same small surface (is_zero, inverse,
// descriptor, the four operators) so that the polynomial and Groebner layers
// can be templated on the scalar.  Prime-field and cyclotomic values carry
// their field parameter with them; a value built from a bare integer is
// "unbound" and adopts the field of the first bound operand it meets.  That is
// what lets Eigen's Scalar(0) / Scalar(1) work for these types.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace campedelli {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroInverse : public FieldError {
 public:
  ZeroInverse() : FieldError("inverse of zero") {}
};

class IncompatibleField : public FieldError {
 public:
  using FieldError::FieldError;
};

class BadPrime : public FieldError {
 public:
  using FieldError::FieldError;
};

enum class FieldKind { rational, prime, cyclotomic };

struct FieldDescriptor {
  FieldKind kind = FieldKind::rational;
  // p for prime fields, n for cyclotomic fields, 0 for Q.
  std::uint64_t parameter = 0;

  static FieldDescriptor rational() { return {}; }
  static FieldDescriptor prime(std::uint64_t p);
  static FieldDescriptor cyclotomic(std::uint64_t n);

  std::uint64_t characteristic() const { return kind == FieldKind::prime ? parameter : 0; }
  // Degree over the prime field.
  std::uint64_t degree() const;
  std::string to_string() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

bool is_prime(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// Primes used by the modular verification policy.  All are congruent to 1
/// modulo 24, so they contain primitive 3rd and 8th roots of unity.
inline constexpr std::uint64_t kDefaultPrimes[3] = {2147483497ULL, 2147483353ULL, 2147483137ULL};

// ---------------------------------------------------------------------------

class Rational {
 public:
  Rational() = default;
  Rational(int n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

  /// "p/q" or "p", optional leading sign.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  FieldDescriptor descriptor() const { return FieldDescriptor::rational(); }

  Rational inverse() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

  std::string to_string() const { return value_.get_str(); }

 private:
  mpq_class value_;
};

// ---------------------------------------------------------------------------

class PrimeFieldElement {
 public:
  PrimeFieldElement() = default;
  PrimeFieldElement(int n) : raw_(static_cast<std::int64_t>(n)) {}  // NOLINT(google-explicit-constructor)
  PrimeFieldElement(long n) : raw_(static_cast<std::int64_t>(n)) {}  // NOLINT(google-explicit-constructor)
  PrimeFieldElement(std::int64_t n, std::uint64_t p);

  static PrimeFieldElement from_residue(std::uint64_t r, std::uint64_t p) {
    PrimeFieldElement e;
    e.residue_ = r;
    e.modulus_ = p;
    return e;
  }

  bool bound() const { return modulus_ != 0; }
  std::uint64_t residue() const;
  std::uint64_t modulus() const { return modulus_; }

  bool is_zero() const { return bound() ? residue_ == 0 : raw_ == 0; }
  bool is_one() const { return bound() ? residue_ == 1 : raw_ == 1; }
  FieldDescriptor descriptor() const;

  PrimeFieldElement inverse() const;
  PrimeFieldElement pow(std::uint64_t e) const;

  PrimeFieldElement& operator+=(const PrimeFieldElement& o);
  PrimeFieldElement& operator-=(const PrimeFieldElement& o);
  PrimeFieldElement& operator*=(const PrimeFieldElement& o);
  PrimeFieldElement& operator/=(const PrimeFieldElement& o) { return *this *= o.inverse(); }

  friend PrimeFieldElement operator+(PrimeFieldElement a, const PrimeFieldElement& b) { return a += b; }
  friend PrimeFieldElement operator-(PrimeFieldElement a, const PrimeFieldElement& b) { return a -= b; }
  friend PrimeFieldElement operator*(PrimeFieldElement a, const PrimeFieldElement& b) { return a *= b; }
  friend PrimeFieldElement operator/(PrimeFieldElement a, const PrimeFieldElement& b) { return a /= b; }
  PrimeFieldElement operator-() const;

  friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b);

  std::string to_string() const;

 private:
  void bind_to(std::uint64_t p);
  static std::uint64_t common_modulus(const PrimeFieldElement& a, const PrimeFieldElement& b);

  std::uint64_t residue_ = 0;
  std::uint64_t modulus_ = 0;
  std::int64_t raw_ = 0;  // value while unbound
};

// ---------------------------------------------------------------------------

/// Element of Q[z]/Phi_n(z), stored as the canonical representative of degree
/// below phi(n).  Order 0 marks an unbound rational constant.
class CyclotomicElement {
 public:
  CyclotomicElement() : coeffs_(1) {}
  CyclotomicElement(int n) : coeffs_{mpq_class(n)} {}  // NOLINT(google-explicit-constructor)
  CyclotomicElement(long n) : coeffs_{mpq_class(n)} {}  // NOLINT(google-explicit-constructor)
  CyclotomicElement(std::uint64_t order, const Rational& constant);
  CyclotomicElement(std::uint64_t order, std::vector<mpq_class> coeffs);

  static CyclotomicElement generator(std::uint64_t order);
  /// Literal in the reserved symbol "zeta", e.g. "1 - zeta^2".
  static CyclotomicElement parse(std::string_view text, std::uint64_t order);

  std::uint64_t order() const { return order_; }
  bool bound() const { return order_ != 0; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }
  bool is_rational() const;
  Rational rational_part() const { return Rational(coeffs_[0]); }

  bool is_zero() const;
  bool is_one() const;
  FieldDescriptor descriptor() const;

  CyclotomicElement inverse() const;
  CyclotomicElement pow(std::uint64_t e) const;

  CyclotomicElement& operator+=(const CyclotomicElement& o);
  CyclotomicElement& operator-=(const CyclotomicElement& o);
  CyclotomicElement& operator*=(const CyclotomicElement& o);
  CyclotomicElement& operator/=(const CyclotomicElement& o) { return *this *= o.inverse(); }

  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
  friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
  friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) { return a *= b; }
  friend CyclotomicElement operator/(CyclotomicElement a, const CyclotomicElement& b) { return a /= b; }
  CyclotomicElement operator-() const;

  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

  std::string to_string() const;

 private:
  void bind_to(std::uint64_t order);
  static std::uint64_t common_order(const CyclotomicElement& a, const CyclotomicElement& b);

  std::uint64_t order_ = 0;
  std::vector<mpq_class> coeffs_;
};

using Fp = PrimeFieldElement;
using Cyclotomic = CyclotomicElement;

std::ostream& operator<<(std::ostream& os, const Rational& a);
std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& a);
std::ostream& operator<<(std::ostream& os, const CyclotomicElement& a);

/// Phi_n as ascending integer coefficients.
std::vector<mpz_class> cyclotomic_minimal_poly(std::uint64_t n);

PrimeFieldElement reduce_to_prime_field(const Rational& a, std::uint64_t p);

/// A residue of exact multiplicative order n modulo p: c^((p-1)/n) for the
/// smallest base c that works.  BadPrime when n does not divide p - 1.
PrimeFieldElement primitive_root_of_unity(std::uint64_t n, std::uint64_t p);

/// Ring map Q[z]/Phi_n -> F_p sending z to `root` (a root of Phi_n mod p).
PrimeFieldElement reduce_to_prime_field(const CyclotomicElement& a, const PrimeFieldElement& root);

// ---------------------------------------------------------------------------
// Uniform construction of scalars inside a named field.

template <class K>
struct Scalar;

template <>
struct Scalar<Rational> {
  static Rational from_rational(const FieldDescriptor& f, const Rational& q);
  static Rational from_int(const FieldDescriptor&, long n) { return Rational(n); }
};

template <>
struct Scalar<PrimeFieldElement> {
  static PrimeFieldElement from_rational(const FieldDescriptor& f, const Rational& q);
  static PrimeFieldElement from_int(const FieldDescriptor& f, long n);
};

template <>
struct Scalar<CyclotomicElement> {
  static CyclotomicElement from_rational(const FieldDescriptor& f, const Rational& q);
  static CyclotomicElement from_int(const FieldDescriptor& f, long n);
};

template <class K>
K scalar_from_rational(const FieldDescriptor& f, const Rational& q) {
  return Scalar<K>::from_rational(f, q);
}

template <class K>
K scalar_from_int(const FieldDescriptor& f, long n) {
  return Scalar<K>::from_int(f, n);
}

/// The multiplicative identity in the field of `a`.
template <class K>
K unit_like(const K& a) {
  return a * K(0) + K(1);
}

template <class K>
K pow(const K& a, std::uint64_t e) {
  K result = unit_like(a);
  K base = a;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace campedelli
