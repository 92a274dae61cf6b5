#include "campedelli/fields.hpp"

#include <map>
#include <ostream>
#include <sstream>

#include "campedelli/expression.hpp"

namespace campedelli {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1U) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1U;
  }
  return r;
}

std::uint64_t reduce_signed(std::int64_t n, std::uint64_t p) {
  const std::int64_t r = n % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Phi_n, cached per thread.
const std::vector<mpq_class>& modulus_poly(std::uint64_t n) {
  thread_local std::map<std::uint64_t, std::vector<mpq_class>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<mpq_class> q;
  for (const mpz_class& c : cyclotomic_minimal_poly(n)) q.emplace_back(c);
  return cache.emplace(n, std::move(q)).first->second;
}

// Reduce an ascending coefficient vector modulo the monic polynomial `m`.
void reduce_mod(std::vector<mpq_class>& v, const std::vector<mpq_class>& m) {
  const std::size_t d = m.size() - 1;
  for (std::size_t i = v.size(); i-- > d;) {
    if (sgn(v[i]) == 0) continue;
    const mpq_class c = v[i];
    for (std::size_t j = 0; j <= d; ++j) v[i - d + j] -= c * m[j];
  }
  v.resize(d);
}

}  // namespace

// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t q : prime_factors(n)) result = result / q * (q - 1);
  return result;
}

FieldDescriptor FieldDescriptor::prime(std::uint64_t p) {
  if (p >= (1ULL << 32U)) throw BadPrime("modulus " + std::to_string(p) + " exceeds 2^32");
  if (!is_prime(p)) throw BadPrime(std::to_string(p) + " is not prime");
  return {FieldKind::prime, p};
}

FieldDescriptor FieldDescriptor::cyclotomic(std::uint64_t n) {
  if (n == 0) throw FieldError("cyclotomic order must be positive");
  return {FieldKind::cyclotomic, n};
}

std::uint64_t FieldDescriptor::degree() const {
  return kind == FieldKind::cyclotomic ? euler_phi(parameter) : 1;
}

std::string FieldDescriptor::to_string() const {
  switch (kind) {
    case FieldKind::rational:
      return "QQ";
    case FieldKind::prime:
      return "GF(" + std::to_string(parameter) + ")";
    case FieldKind::cyclotomic:
      return "QQ(zeta_" + std::to_string(parameter) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw ZeroInverse();
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start])) != 0) ++start;
  std::size_t end = s.size();
  while (end > start && std::isspace(static_cast<unsigned char>(s[end - 1])) != 0) --end;
  s = s.substr(start, end - start);
  bool negative = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    negative = s[i] == '-';
    ++i;
  }
  const std::size_t slash = s.find('/', i);
  const std::string num = s.substr(i, slash == std::string::npos ? std::string::npos : slash - i);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t) {
      if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
    }
    return true;
  };
  if (!digits(num)) throw SyntaxError("malformed rational '" + std::string(text) + "'", i);
  if (!digits(den)) throw SyntaxError("malformed rational '" + std::string(text) + "'", slash + 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (negative) n = -n;
  return Rational(n, d);
}

Rational Rational::inverse() const {
  if (is_zero()) throw ZeroInverse();
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ZeroInverse();
  value_ /= o.value_;
  return *this;
}

// ---------------------------------------------------------------------------

PrimeFieldElement::PrimeFieldElement(std::int64_t n, std::uint64_t p) : modulus_(p) {
  if (p == 0) throw BadPrime("modulus 0");
  residue_ = reduce_signed(n, p);
}

std::uint64_t PrimeFieldElement::residue() const {
  if (!bound()) throw IncompatibleField("prime-field constant not bound to a modulus");
  return residue_;
}

FieldDescriptor PrimeFieldElement::descriptor() const {
  if (!bound()) throw IncompatibleField("prime-field constant not bound to a modulus");
  return {FieldKind::prime, modulus_};
}

void PrimeFieldElement::bind_to(std::uint64_t p) {
  if (bound() || p == 0) return;
  residue_ = reduce_signed(raw_, p);
  modulus_ = p;
  raw_ = 0;
}

std::uint64_t PrimeFieldElement::common_modulus(const PrimeFieldElement& a, const PrimeFieldElement& b) {
  if (a.bound() && b.bound() && a.modulus_ != b.modulus_) {
    throw IncompatibleField("GF(" + std::to_string(a.modulus_) + ") vs GF(" + std::to_string(b.modulus_) + ")");
  }
  return a.bound() ? a.modulus_ : b.modulus_;
}

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (is_zero()) throw ZeroInverse();
  if (!bound()) {
    if (raw_ == 1 || raw_ == -1) return *this;
    throw IncompatibleField("cannot invert an unbound prime-field constant");
  }
  return from_residue(powmod64(residue_, modulus_ - 2, modulus_), modulus_);
}

PrimeFieldElement PrimeFieldElement::pow(std::uint64_t e) const {
  if (!bound()) return campedelli::pow(*this, e);
  return from_residue(powmod64(residue_, e, modulus_), modulus_);
}

PrimeFieldElement& PrimeFieldElement::operator+=(const PrimeFieldElement& o) {
  const std::uint64_t p = common_modulus(*this, o);
  if (p == 0) {
    if (__builtin_add_overflow(raw_, o.raw_, &raw_)) throw FieldError("unbound constant overflow");
    return *this;
  }
  bind_to(p);
  PrimeFieldElement b = o;
  b.bind_to(p);
  residue_ += b.residue_;
  if (residue_ >= p) residue_ -= p;
  return *this;
}

PrimeFieldElement& PrimeFieldElement::operator-=(const PrimeFieldElement& o) { return *this += -o; }

PrimeFieldElement& PrimeFieldElement::operator*=(const PrimeFieldElement& o) {
  const std::uint64_t p = common_modulus(*this, o);
  if (p == 0) {
    if (__builtin_mul_overflow(raw_, o.raw_, &raw_)) throw FieldError("unbound constant overflow");
    return *this;
  }
  bind_to(p);
  PrimeFieldElement b = o;
  b.bind_to(p);
  residue_ = mulmod64(residue_, b.residue_, p);
  return *this;
}

PrimeFieldElement PrimeFieldElement::operator-() const {
  PrimeFieldElement r = *this;
  if (!bound()) {
    r.raw_ = -raw_;
  } else if (residue_ != 0) {
    r.residue_ = modulus_ - residue_;
  }
  return r;
}

bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
  const std::uint64_t p = PrimeFieldElement::common_modulus(a, b);
  if (p == 0) return a.raw_ == b.raw_;
  PrimeFieldElement x = a;
  PrimeFieldElement y = b;
  x.bind_to(p);
  y.bind_to(p);
  return x.residue_ == y.residue_;
}

std::string PrimeFieldElement::to_string() const {
  return bound() ? std::to_string(residue_) : std::to_string(raw_);
}

// ---------------------------------------------------------------------------

CyclotomicElement::CyclotomicElement(std::uint64_t order, const Rational& constant) : order_(order) {
  if (order == 0) {
    coeffs_ = {constant.value()};
    return;
  }
  coeffs_.assign(euler_phi(order), mpq_class(0));
  coeffs_[0] = constant.value();
}

CyclotomicElement::CyclotomicElement(std::uint64_t order, std::vector<mpq_class> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order == 0) throw FieldError("cyclotomic order must be positive");
  const auto& m = modulus_poly(order);
  if (coeffs_.size() < m.size() - 1) coeffs_.resize(m.size() - 1);
  reduce_mod(coeffs_, m);
}

CyclotomicElement CyclotomicElement::generator(std::uint64_t order) {
  std::vector<mpq_class> c(2);
  c[1] = 1;
  return CyclotomicElement(order, std::move(c));
}

CyclotomicElement CyclotomicElement::parse(std::string_view text, std::uint64_t order) {
  const CyclotomicElement z = generator(order);
  return read_expression<CyclotomicElement>(
      text,
      [&](const std::string& name) -> CyclotomicElement {
        if (name == "zeta") return z;
        throw UnknownSymbol(name);
      },
      [&](std::string_view lit) { return CyclotomicElement(order, Rational::parse(lit)); });
}

bool CyclotomicElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

bool CyclotomicElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool CyclotomicElement::is_one() const { return is_rational() && coeffs_[0] == 1; }

FieldDescriptor CyclotomicElement::descriptor() const {
  if (!bound()) throw IncompatibleField("cyclotomic constant not bound to an order");
  return FieldDescriptor::cyclotomic(order_);
}

void CyclotomicElement::bind_to(std::uint64_t order) {
  if (bound() || order == 0) return;
  mpq_class c = coeffs_[0];
  coeffs_.assign(euler_phi(order), mpq_class(0));
  coeffs_[0] = c;
  order_ = order;
}

std::uint64_t CyclotomicElement::common_order(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.bound() && b.bound() && a.order_ != b.order_) {
    throw IncompatibleField("QQ(zeta_" + std::to_string(a.order_) + ") vs QQ(zeta_" + std::to_string(b.order_) + ")");
  }
  return a.bound() ? a.order_ : b.order_;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
  const std::uint64_t n = common_order(*this, o);
  bind_to(n);
  if (!o.bound() || n == 0) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) { return *this += -o; }

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& o) {
  const std::uint64_t n = common_order(*this, o);
  if (!o.bound() || n == 0) {
    bind_to(n);
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (!bound()) {
    const mpq_class c = coeffs_[0];
    *this = o;
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  std::vector<mpq_class> prod(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  reduce_mod(prod, modulus_poly(n));
  coeffs_ = std::move(prod);
  return *this;
}

CyclotomicElement CyclotomicElement::operator-() const {
  CyclotomicElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
  const std::uint64_t n = CyclotomicElement::common_order(a, b);
  CyclotomicElement x = a;
  CyclotomicElement y = b;
  x.bind_to(n);
  y.bind_to(n);
  return x.coeffs_ == y.coeffs_;
}

CyclotomicElement CyclotomicElement::inverse() const {
  if (is_zero()) throw ZeroInverse();
  if (is_rational()) {
    CyclotomicElement r = *this;
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  // Solve (multiplication by *this) * c = e_0 by Gaussian elimination.
  const std::size_t d = coeffs_.size();
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1));
  CyclotomicElement basis = CyclotomicElement(order_, Rational(1));
  const CyclotomicElement z = generator(order_);
  for (std::size_t j = 0; j < d; ++j) {
    const CyclotomicElement col = *this * basis;
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coeffs_[i];
    basis *= z;
  }
  m[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (piv < d && sgn(m[piv][c]) == 0) ++piv;
    if (piv == d) throw ZeroInverse();
    std::swap(m[piv], m[c]);
    const mpq_class inv = 1 / m[c][c];
    for (std::size_t k = c; k <= d; ++k) m[c][k] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      const mpq_class f = m[r][c];
      for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<mpq_class> out(d);
  for (std::size_t i = 0; i < d; ++i) out[i] = m[i][d];
  return CyclotomicElement(order_, std::move(out));
}

CyclotomicElement CyclotomicElement::pow(std::uint64_t e) const { return campedelli::pow(*this, e); }

std::string CyclotomicElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "zeta";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.to_string(); }
std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& a) { return os << a.to_string(); }
std::ostream& operator<<(std::ostream& os, const CyclotomicElement& a) { return os << a.to_string(); }

std::vector<mpz_class> cyclotomic_minimal_poly(std::uint64_t n) {
  if (n == 0) throw FieldError("cyclotomic order must be positive");
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  std::vector<mpz_class> num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<mpz_class> div = cyclotomic_minimal_poly(d);
    const std::size_t dd = div.size() - 1;
    std::vector<mpz_class> quot(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
      const mpz_class c = num[i];  // divisor is monic
      quot[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * div[j];
    }
    num = std::move(quot);
  }
  return num;
}

PrimeFieldElement reduce_to_prime_field(const Rational& a, std::uint64_t p) {
  const mpz_class pz(static_cast<unsigned long>(p));
  const mpz_class den = a.denominator();
  if (den % pz == 0) throw BadPrime(std::to_string(p) + " divides the denominator of " + a.to_string());
  mpz_class num = a.numerator() % pz;
  if (num < 0) num += pz;
  mpz_class d = den % pz;
  mpz_class dinv;
  mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
  const mpz_class r = num * dinv % pz;
  return PrimeFieldElement::from_residue(r.get_ui(), p);
}

PrimeFieldElement primitive_root_of_unity(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || (p - 1) % n != 0) {
    throw BadPrime("GF(" + std::to_string(p) + ") has no primitive " + std::to_string(n) + "-th root of unity");
  }
  const auto factors = prime_factors(n);
  for (std::uint64_t c = 2; c < p; ++c) {
    const std::uint64_t r = powmod64(c, (p - 1) / n, p);
    bool exact = true;
    for (std::uint64_t q : factors) {
      if (powmod64(r, n / q, p) == 1) {
        exact = false;
        break;
      }
    }
    if (exact) return PrimeFieldElement::from_residue(r, p);
  }
  return PrimeFieldElement::from_residue(1, p);  // n == 1
}

PrimeFieldElement reduce_to_prime_field(const CyclotomicElement& a, const PrimeFieldElement& root) {
  const std::uint64_t p = root.modulus();
  PrimeFieldElement result(0, p);
  PrimeFieldElement power(1, p);
  for (const auto& c : a.coefficients()) {
    if (sgn(c) != 0) result += reduce_to_prime_field(Rational(c), p) * power;
    power *= root;
  }
  return result;
}

// ---------------------------------------------------------------------------

Rational Scalar<Rational>::from_rational(const FieldDescriptor& f, const Rational& q) {
  if (f.kind != FieldKind::rational) throw IncompatibleField("expected QQ, got " + f.to_string());
  return q;
}

PrimeFieldElement Scalar<PrimeFieldElement>::from_rational(const FieldDescriptor& f, const Rational& q) {
  if (f.kind != FieldKind::prime) throw IncompatibleField("expected a prime field, got " + f.to_string());
  return reduce_to_prime_field(q, f.parameter);
}

PrimeFieldElement Scalar<PrimeFieldElement>::from_int(const FieldDescriptor& f, long n) {
  if (f.kind != FieldKind::prime) throw IncompatibleField("expected a prime field, got " + f.to_string());
  return PrimeFieldElement(static_cast<std::int64_t>(n), f.parameter);
}

CyclotomicElement Scalar<CyclotomicElement>::from_rational(const FieldDescriptor& f, const Rational& q) {
  if (f.kind != FieldKind::cyclotomic) throw IncompatibleField("expected a cyclotomic field, got " + f.to_string());
  return CyclotomicElement(f.parameter, q);
}

CyclotomicElement Scalar<CyclotomicElement>::from_int(const FieldDescriptor& f, long n) {
  return from_rational(f, Rational(n));
}

}  // namespace campedelli
