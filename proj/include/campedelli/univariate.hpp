#pragma once

// Dense univariate polynomials as ascending coefficient vectors: gcd,
// squarefree parts and roots in the coefficient field.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "campedelli/fields.hpp"

namespace campedelli::univariate {

template <class K>
using Poly = std::vector<K>;

template <class K>
void trim(Poly<K>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

/// -1 for the zero polynomial.
template <class K>
int degree(const Poly<K>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class K>
Poly<K> sub(Poly<K> a, const Poly<K>& b) {
  if (a.size() < b.size()) a.resize(b.size(), b.back() * K(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

template <class K>
Poly<K> mul(const Poly<K>& a, const Poly<K>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<K> r(a.size() + b.size() - 1, a[0] * K(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

/// Quotient and remainder.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(Poly<K> a, const Poly<K>& b) {
  if (b.empty()) throw ZeroInverse();
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  const K inv = b.back().inverse();
  Poly<K> q(a.size() - b.size() + 1, inv * K(0));
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    if (a[static_cast<std::size_t>(i)].is_zero()) continue;
    const K c = a[static_cast<std::size_t>(i)] * inv;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

template <class K>
Poly<K> monic(Poly<K> p) {
  trim(p);
  if (p.empty()) return p;
  const K inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly<K> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class K>
Poly<K> derivative(const Poly<K>& p) {
  Poly<K> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * K(static_cast<int>(i)));
  trim(d);
  return d;
}

/// p / gcd(p, p'), monic.  Valid in characteristic 0 and for degree below p.
template <class K>
Poly<K> squarefree_part(const Poly<K>& p) {
  Poly<K> q = p;
  trim(q);
  if (q.size() <= 1) return monic(q);
  const Poly<K> g = gcd(q, derivative(q));
  return monic(divmod(q, g).first);
}

template <class K>
bool is_squarefree(const Poly<K>& p) {
  Poly<K> q = p;
  trim(q);
  if (q.size() <= 2) return !q.empty();
  return gcd(q, derivative(q)).size() == 1;
}

template <class K>
K evaluate(const Poly<K>& p, const K& x) {
  K r = x * K(0);
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

/// Distinct roots lying in the coefficient field, sorted canonically.
std::vector<Rational> roots(const Poly<Rational>& p);
/// `seed` drives the randomized equal-degree splitting.
std::vector<PrimeFieldElement> roots(const Poly<PrimeFieldElement>& p, std::uint64_t seed = 0x5eed);
/// Only roots of the form q * zeta^k with q rational are found.
std::vector<CyclotomicElement> roots(const Poly<CyclotomicElement>& p);

}  // namespace campedelli::univariate
