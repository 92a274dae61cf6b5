#pragma once

// Sparse multivariate polynomials over the exact scalar types.  Terms are kept
// strictly decreasing under the ring's monomial order with no zero
// coefficients, so equality is term-list equality.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "campedelli/expression.hpp"
#include "campedelli/fields.hpp"
#include "campedelli/monomial.hpp"
#include "campedelli/ring.hpp"

namespace campedelli {

class ZeroPolynomial : public std::runtime_error {
 public:
  ZeroPolynomial() : std::runtime_error("operation undefined on the zero polynomial") {}
};

class UnboundVariable : public std::runtime_error {
 public:
  explicit UnboundVariable(const std::string& name)
      : std::runtime_error("variable '" + name + "' has no image in the target ring") {}
};

using UnknownVariable = UnknownSymbol;

template <class K>
struct Term {
  Monomial monomial;
  K coefficient;

  friend bool operator==(const Term& a, const Term& b) {
    return a.monomial == b.monomial && a.coefficient == b.coefficient;
  }
};

// Coefficient formatting shared by the printers.
inline bool coefficient_is_negative(const Rational& c) { return c.sign() < 0; }
inline bool coefficient_is_negative(const PrimeFieldElement&) { return false; }
inline bool coefficient_is_negative(const CyclotomicElement& c) { return c.is_rational() && c.rational_part().sign() < 0; }

inline std::string coefficient_magnitude(const Rational& c) { return c.sign() < 0 ? (-c).to_string() : c.to_string(); }
inline std::string coefficient_magnitude(const PrimeFieldElement& c) { return c.to_string(); }
inline std::string coefficient_magnitude(const CyclotomicElement& c) {
  if (c.is_rational()) return coefficient_magnitude(c.rational_part());
  return "(" + c.to_string() + ")";
}

template <class K>
class Polynomial {
 public:
  using Scalar = K;
  using TermType = Term<K>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const K& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
    return p;
  }
  static Polynomial from_int(RingPtr ring, long n) {
    const K c = scalar_from_int<K>(ring->field(), n);
    return constant(std::move(ring), c);
  }
  static Polynomial one(RingPtr ring) { return from_int(std::move(ring), 1); }
  static Polynomial variable(RingPtr ring, int i) {
    if (i < 0 || i >= ring->nvars()) throw std::out_of_range("variable index out of range");
    return monomial(ring, Monomial::variable(i), scalar_from_int<K>(ring->field(), 1));
  }
  static Polynomial variable(RingPtr ring, const std::string& name) {
    const int i = ring->index_of(name);
    if (i < 0) throw UnknownVariable(name);
    return variable(std::move(ring), i);
  }
  static Polynomial monomial(RingPtr ring, const Monomial& m, const K& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  /// Terms in any order; equal monomials are combined.
  static Polynomial from_terms(RingPtr ring, std::vector<TermType> terms) {
    Polynomial p(std::move(ring));
    const MonomialOrder& ord = p.ring_->order();
    std::sort(terms.begin(), terms.end(),
              [&](const TermType& a, const TermType& b) { return ord.compare(a.monomial, b.monomial) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coefficient += t.coefficient;
        if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
      } else if (!t.coefficient.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }
  /// Terms already strictly decreasing with nonzero coefficients.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<TermType> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<TermType>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coefficient.is_one(); }

  const Monomial& leading_monomial() const {
    if (is_zero()) throw ZeroPolynomial();
    return terms_.front().monomial;
  }
  const K& leading_coefficient() const {
    if (is_zero()) throw ZeroPolynomial();
    return terms_.front().coefficient;
  }

  /// -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
    return d;
  }
  int degree_in(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial[var]));
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_) {
      if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
    }
    return true;
  }

  /// Degree per grading block of a monomial.
  std::vector<int> multidegree_of(const Monomial& m) const {
    std::vector<int> d;
    for (std::size_t b = 0; b < ring_->blocks().size(); ++b) d.push_back(static_cast<int>(m.degree_in(ring_->block_mask(b))));
    return d;
  }
  /// Empty for the zero polynomial or when not multihomogeneous.
  std::optional<std::vector<int>> multidegree() const {
    if (is_zero()) return std::nullopt;
    const auto d = multidegree_of(terms_.front().monomial);
    for (const auto& t : terms_) {
      if (multidegree_of(t.monomial) != d) return std::nullopt;
    }
    return d;
  }
  bool is_multihomogeneous() const { return is_zero() || multidegree().has_value(); }

  // -- arithmetic -------------------------------------------------------------

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    const RingPtr ring = common_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(ring);
    if (a.size() == 1) return b.mul_term(a.terms_[0].monomial, a.terms_[0].coefficient);
    if (b.size() == 1) return a.mul_term(b.terms_[0].monomial, b.terms_[0].coefficient);
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& large = a.size() <= b.size() ? b : a;
    // Pairwise merging of the shifted copies keeps every step a linear merge.
    std::vector<Polynomial> parts;
    parts.reserve(small.size());
    for (const auto& t : small.terms_) parts.push_back(large.mul_term(t.monomial, t.coefficient));
    while (parts.size() > 1) {
      std::vector<Polynomial> next;
      next.reserve((parts.size() + 1) / 2);
      for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
      if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
      parts = std::move(next);
    }
    Polynomial r = std::move(parts.front());
    r.ring_ = ring;
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const K& c, const Polynomial& p) { return p.scaled(c); }
  friend Polynomial operator*(const Polynomial& p, const K& c) { return p.scaled(c); }

  Polynomial scaled(const K& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial, t.coefficient * c});
    return r;
  }

  /// c * m * this.  Multiplying by a monomial preserves the term order.
  Polynomial mul_term(const Monomial& m, const K& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coefficient * c});
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = one(ring_);
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ && b.ring_ && a.ring_ != b.ring_ && !a.ring_->compatible_with(*b.ring_)) return false;
    if (a.ring_ && b.ring_ && !(a.ring_->order() == b.ring_->order())) {
      return a.terms_.size() == b.terms_.size() && (a - b.change_ring(a.ring_)).is_zero();
    }
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Divide by the leading coefficient.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient().inverse());
  }

  // -- calculus and evaluation -------------------------------------------------

  Polynomial derivative(int var) const {
    std::vector<TermType> out;
    for (const auto& t : terms_) {
      const std::uint16_t e = t.monomial[var];
      if (e == 0) continue;
      Monomial m = t.monomial;
      m.set(var, static_cast<std::uint16_t>(e - 1));
      K c = t.coefficient * scalar_from_int<K>(ring_->field(), static_cast<long>(e));
      if (!c.is_zero()) out.push_back({m, std::move(c)});
    }
    // Lowering one exponent can reorder terms under non-graded orders.
    return from_terms(ring_, std::move(out));
  }

  /// Value at a point given by one field element per variable.
  K evaluate(const std::vector<K>& point) const {
    if (static_cast<int>(point.size()) != ring_->nvars()) throw std::invalid_argument("point has the wrong length");
    K result = scalar_from_int<K>(ring_->field(), 0);
    std::vector<std::vector<K>> powers(point.size());
    for (const auto& t : terms_) {
      K v = t.coefficient;
      for (int i = 0; i < ring_->nvars(); ++i) {
        const std::uint16_t e = t.monomial[i];
        if (e == 0) continue;
        auto& pw = powers[static_cast<std::size_t>(i)];
        if (pw.empty()) pw.push_back(scalar_from_int<K>(ring_->field(), 1));
        while (pw.size() <= e) pw.push_back(pw.back() * point[static_cast<std::size_t>(i)]);
        v *= pw[e];
      }
      result += v;
    }
    return result;
  }

  /// Replace every variable by its image; all images live in `target`.
  Polynomial substitute_all(const RingPtr& target, const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != ring_->nvars()) throw std::invalid_argument("one image per variable required");
    for (const auto& img : images) {
      if (img.ring_ && img.ring_ != target && !img.ring_->same_as(*target)) {
        throw RingMismatch("substitution image lives in " + img.ring_->to_string());
      }
    }
    std::vector<std::vector<Polynomial>> powers(images.size());
    Polynomial result(target);
    for (const auto& t : terms_) {
      Polynomial v = constant(target, t.coefficient);
      for (int i = 0; i < ring_->nvars() && !v.is_zero(); ++i) {
        const std::uint16_t e = t.monomial[i];
        if (e == 0) continue;
        auto& pw = powers[static_cast<std::size_t>(i)];
        if (pw.empty()) pw.push_back(one(target));
        while (pw.size() <= e) pw.push_back(pw.back() * images[static_cast<std::size_t>(i)]);
        v = v * pw[e];
      }
      result += v;
    }
    result.ring_ = target;
    return result;
  }

  /// Substitute by variable name.  Variables without an image map to the
  /// variable of the same name in `target` (UnboundVariable when absent).
  Polynomial substitute(const std::map<std::string, Polynomial>& assignment, RingPtr target = nullptr) const {
    if (!target) target = ring_;
    std::vector<Polynomial> images;
    for (int i = 0; i < ring_->nvars(); ++i) {
      const std::string& name = ring_->variable(i);
      auto it = assignment.find(name);
      if (it != assignment.end()) {
        images.push_back(it->second);
      } else if (target->index_of(name) >= 0) {
        images.push_back(variable(target, name));
      } else if (degree_in(i) > 0) {
        throw UnboundVariable(name);
      } else {
        images.push_back(Polynomial(target));
      }
    }
    return substitute_all(target, images);
  }

  /// Same polynomial in a ring with the same variables, field and grading but
  /// possibly another monomial order.
  Polynomial change_ring(const RingPtr& target) const {
    if (target == ring_) return *this;
    if (!ring_->compatible_with(*target)) throw RingMismatch("cannot move " + ring_->to_string() + " to " + target->to_string());
    if (ring_->order() == target->order()) return from_sorted_terms(target, terms_);
    return from_terms(target, terms_);
  }

  /// Apply `f` to every coefficient; the result lives in `target`, which must
  /// have the same number of variables.
  template <class K2, class F>
  Polynomial<K2> map_coefficients(const RingPtr& target, F f) const {
    if (target->nvars() != ring_->nvars()) throw RingMismatch("variable count differs");
    std::vector<Term<K2>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      K2 c = f(t.coefficient);
      if (!c.is_zero()) out.push_back({t.monomial, std::move(c)});
    }
    return Polynomial<K2>::from_terms(target, std::move(out));
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      const bool neg = coefficient_is_negative(t.coefficient);
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      const std::string mag = coefficient_magnitude(t.coefficient);
      const std::string mono = monomial_string(t.monomial);
      if (mono.empty()) {
        os << mag;
      } else {
        if (mag != "1") os << mag << "*";
        os << mono;
      }
    }
    return os.str();
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (int i = 0; i < ring_->nvars(); ++i) {
      const std::uint16_t e = m[i];
      if (e == 0) continue;
      if (!s.empty()) s += "*";
      s += ring_->variable(i);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  static RingPtr common_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_) return b.ring_;
    if (!b.ring_) return a.ring_;
    require_same_ring(a.ring_, b.ring_);
    return a.ring_;
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    const RingPtr ring = common_ring(a, b);
    Polynomial r(ring);
    if (b.is_zero()) {
      r.terms_ = a.terms_;
      return r;
    }
    if (a.is_zero()) return subtract ? -Polynomial(b) : Polynomial::with_ring(b, ring);
    const MonomialOrder& ord = ring->order();
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
      const int c = ord.compare(a.terms_[i].monomial, b.terms_[j].monomial);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.monomial, subtract ? -t.coefficient : t.coefficient});
      } else {
        K s = subtract ? a.terms_[i].coefficient - b.terms_[j].coefficient
                       : a.terms_[i].coefficient + b.terms_[j].coefficient;
        if (!s.is_zero()) r.terms_.push_back({a.terms_[i].monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.size(); ++j) {
      const auto& t = b.terms_[j];
      r.terms_.push_back({t.monomial, subtract ? -t.coefficient : t.coefficient});
    }
    return r;
  }

  static Polynomial with_ring(Polynomial p, const RingPtr& ring) {
    p.ring_ = ring;
    return p;
  }

  RingPtr ring_;
  std::vector<TermType> terms_;
};

template <class K>
Polynomial<K> unit_like(const Polynomial<K>& p) {
  return Polynomial<K>::one(p.ring());
}

/// Order-maximal term of f under `order` (which need not be f's ring order).
template <class K>
Term<K> leading_term(const Polynomial<K>& f, const MonomialOrder& order) {
  if (f.is_zero()) throw ZeroPolynomial();
  const Term<K>* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  }
  return *best;
}

/// Parse a polynomial.  Identifiers resolve to ring variables first, then to
/// `parameters`, then (in cyclotomic rings) to "zeta".
template <class K>
Polynomial<K> parse_polynomial(const RingPtr& ring, std::string_view text,
                               const std::map<std::string, K>& parameters = {}) {
  using P = Polynomial<K>;
  return read_expression<P>(
      text,
      [&](const std::string& name) -> P {
        if (ring->index_of(name) >= 0) return P::variable(ring, name);
        auto it = parameters.find(name);
        if (it != parameters.end()) return P::constant(ring, it->second);
        if constexpr (std::is_same_v<K, CyclotomicElement>) {
          if (name == "zeta") return P::constant(ring, CyclotomicElement::generator(ring->field().parameter));
        }
        throw UnknownVariable(name);
      },
      [&](std::string_view lit) { return P::constant(ring, scalar_from_rational<K>(ring->field(), Rational::parse(lit))); });
}

template <class K>
std::ostream& operator<<(std::ostream& os, const Polynomial<K>& p) {
  return os << p.to_string();
}

using RationalPolynomial = Polynomial<Rational>;

}  // namespace campedelli
