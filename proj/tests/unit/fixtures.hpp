#pragma once

// Shared test data: the P^6 quadric families and the P^2 x P^2 family.

#include <string>
#include <vector>

#include "campedelli/group_actions.hpp"

namespace fixtures {

using namespace campedelli;

inline std::vector<std::string> p6_names() { return {"x1", "x2", "x3", "x4", "x5", "x6", "x7"}; }

inline RingPtr p6(const FieldDescriptor& f) { return Ring::create(p6_names(), f); }

template <class K>
std::vector<Polynomial<K>> parse_all(const RingPtr& r, const std::vector<std::string>& src) {
  std::vector<Polynomial<K>> out;
  for (const auto& s : src) out.push_back(parse_polynomial<K>(r, s));
  return out;
}

/// One node: a = e = -1, b = c = d = g = k = 1.
inline std::vector<std::string> one_node_equations() {
  return {"(x1*x7 + x3*x5) - x4^2 - 2*x2*x6", "x1^2 + x3*x7 - x4*x6 - 2*x5^2", "(x2^2 + x6^2) + x1*x3 + x5*x7",
          "x3^2 + x1*x5 - x4*x2 - 2*x7^2"};
}

/// Two nodes: a = -1, b = 1, c = 4, e = -1.
inline std::vector<std::string> two_node_equations() {
  return {"(x1*x7 + x3*x5) - x4^2 - 2*x2*x6", "4*x1^2 - 5*x3*x7 - x4*x6 + x5^2", "5*(x2^2 + x6^2) + 8*x1*x3 + 2*x5*x7",
          "4*x3^2 - 5*x1*x5 - x4*x2 + x7^2"};
}

template <class K>
Ideal<K> one_node(const RingPtr& r) {
  return Ideal<K>(r, parse_all<K>(r, one_node_equations()));
}

template <class K>
Ideal<K> two_node(const RingPtr& r) {
  return Ideal<K>(r, parse_all<K>(r, two_node_equations()));
}

/// (x1..x7) -> (x3, x6, x1, x4, x7, x2, x5)
template <class K>
ProjAutomorphism<K> involution_a(const K& one) {
  return ProjAutomorphism<K>::permutation({2, 5, 0, 3, 6, 1, 4}, one);
}

/// diag(zeta, ..., zeta^7) with zeta a primitive 8th root of unity.
inline ProjAutomorphism<Cyclotomic> order_eight_t() {
  const auto z = Cyclotomic::generator(8);
  std::vector<Cyclotomic> d;
  for (unsigned k = 1; k <= 7; ++k) d.push_back(z.pow(k));
  return ProjAutomorphism<Cyclotomic>::diagonal(d);
}

inline RingPtr p2p2(const FieldDescriptor& f) {
  return Ring::create({"x0", "x1", "x2", "y0", "y1", "y2"}, f, MonomialOrder::grevlex(), {{0, 1, 2}, {3, 4, 5}});
}

template <class K>
Ideal<K> p2p2_surface(const RingPtr& r, long lambda) {
  const std::string l = std::to_string(lambda);
  return Ideal<K>(r, parse_all<K>(r, {"x0*y0 + x1*y1 + x2*y2",
                                      "(x0^3 + x1^3 + x2^3)*(y0^3 + y1^3 + y2^3) + " + l + "*x0*x1*x2*y0*y1*y2"}));
}

/// g1, g2, the factor swap and the transposition of the last two coordinates.
struct P2P2Group {
  ProjAutomorphism<Cyclotomic> g1, g2, s1, s2;
};

inline P2P2Group p2p2_generators() {
  const Cyclotomic one(3, Rational(1));
  const auto w = Cyclotomic::generator(3);
  const auto shift = ProjAutomorphism<Cyclotomic>::permutation({1, 2, 0}, one).blocks()[0];
  const auto transp = ProjAutomorphism<Cyclotomic>::permutation({0, 2, 1}, one).blocks()[0];
  const auto d1 = ProjAutomorphism<Cyclotomic>::diagonal({one, w, w * w}).blocks()[0];
  const auto d2 = ProjAutomorphism<Cyclotomic>::diagonal({one, w * w, w}).blocks()[0];
  const auto id = identity<Cyclotomic>(3, one);
  return {ProjAutomorphism<Cyclotomic>({shift, shift}, false), ProjAutomorphism<Cyclotomic>({d1, d2}, false),
          ProjAutomorphism<Cyclotomic>({id, id}, true), ProjAutomorphism<Cyclotomic>({transp, transp}, false)};
}

}  // namespace fixtures
