#include "campedelli/univariate.hpp"

#include <algorithm>
#include <random>

namespace campedelli::univariate {

namespace {

using ZPoly = std::vector<mpz_class>;

int sign_at(const ZPoly& f, const mpq_class& x) {
  mpq_class v = 0;
  for (std::size_t i = f.size(); i-- > 0;) v = v * x + f[i];
  return sgn(v);
}

ZPoly to_primitive_integer(const Poly<Rational>& p) {
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  ZPoly f;
  for (const auto& c : p) f.push_back(mpz_class(c.value() * l));
  mpz_class g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0) {
    for (auto& c : f) c /= g;
  }
  return f;
}

class SturmChain {
 public:
  explicit SturmChain(const Poly<Rational>& f) {
    Poly<Rational> a = f;
    Poly<Rational> b = derivative(f);
    chain_.push_back(to_primitive_integer(a));
    while (!b.empty()) {
      chain_.push_back(to_primitive_integer(b));
      Poly<Rational> r = divmod(a, b).second;
      for (auto& c : r) c = -c;
      a = std::move(b);
      b = std::move(r);
    }
  }

  int variations(const mpq_class& x) const {
    int count = 0;
    int last = 0;
    for (const auto& s : chain_) {
      const int v = sign_at(s, x);
      if (v == 0) continue;
      if (last != 0 && v != last) ++count;
      last = v;
    }
    return count;
  }

 private:
  std::vector<ZPoly> chain_;
};

}  // namespace

std::vector<Rational> roots(const Poly<Rational>& p) {
  Poly<Rational> f = squarefree_part(p);
  std::vector<Rational> out;
  if (f.size() <= 1) return out;
  if (f[0].is_zero()) {
    out.emplace_back(0);
    f.erase(f.begin());
  }
  if (f.size() <= 1) return out;
  const ZPoly z = to_primitive_integer(f);
  const mpz_class lead = abs(z.back());
  mpq_class bound = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) bound = std::max(bound, mpq_class(abs(f[i].value() / f.back().value())));
  bound += 1;
  const SturmChain chain(f);
  // Roots in (l, r] number V(l) - V(r).
  auto isolate = [&](auto&& self, const mpq_class& l, const mpq_class& r, int vl, int vr) -> void {
    const int count = vl - vr;
    if (count <= 0) return;
    if (count == 1 && (r - l) * lead < 1) {
      mpq_class lo = l * lead;
      mpq_class hi = r * lead;
      mpz_class n;
      mpz_cdiv_q(n.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
      mpz_class top;
      mpz_fdiv_q(top.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
      for (; n <= top; ++n) {
        const mpq_class x(n, lead);
        mpq_class xc = x;
        xc.canonicalize();
        if (xc > l && xc <= r && sign_at(z, xc) == 0) out.emplace_back(xc);
      }
      return;
    }
    const mpq_class mid = (l + r) / 2;
    const int vm = chain.variations(mid);
    self(self, l, mid, vl, vm);
    self(self, mid, r, vm, vr);
  };
  const mpq_class lo = -bound;
  isolate(isolate, lo, bound, chain.variations(lo), chain.variations(bound));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using FPoly = Poly<PrimeFieldElement>;

FPoly mulmod(const FPoly& a, const FPoly& b, const FPoly& m) { return divmod(mul(a, b), m).second; }

FPoly powmod(FPoly base, std::uint64_t e, const FPoly& m) {
  const std::uint64_t p = m.back().modulus();
  FPoly result{PrimeFieldElement(1, p)};
  base = divmod(base, m).second;
  while (e > 0) {
    if (e & 1U) result = mulmod(result, base, m);
    e >>= 1U;
    if (e > 0) base = mulmod(base, base, m);
  }
  return result;
}

void split(const FPoly& g, std::mt19937_64& rng, std::vector<PrimeFieldElement>& out) {
  if (g.size() <= 1) return;
  const std::uint64_t p = g.back().modulus();
  if (g.size() == 2) {
    out.push_back(-(g[0] / g[1]));
    return;
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (;;) {
    const FPoly lin{PrimeFieldElement::from_residue(dist(rng), p), PrimeFieldElement(1, p)};
    FPoly h = powmod(lin, (p - 1) / 2, g);
    h = sub(h, FPoly{PrimeFieldElement(1, p)});
    const FPoly d = gcd(g, h);
    if (d.size() > 1 && d.size() < g.size()) {
      split(d, rng, out);
      split(monic(divmod(g, d).first), rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<PrimeFieldElement> roots(const Poly<PrimeFieldElement>& p, std::uint64_t seed) {
  FPoly f = monic(p);
  std::vector<PrimeFieldElement> out;
  if (f.size() <= 1) return out;
  const std::uint64_t q = f.back().modulus();
  // gcd(f, x^q - x) collects the distinct linear factors.
  const FPoly x{PrimeFieldElement(0, q), PrimeFieldElement(1, q)};
  FPoly xq = powmod(x, q, f);
  const FPoly g = gcd(f, sub(xq, x));
  std::mt19937_64 rng(seed);
  split(g, rng, out);
  std::sort(out.begin(), out.end(),
            [](const PrimeFieldElement& a, const PrimeFieldElement& b) { return a.residue() < b.residue(); });
  return out;
}

std::vector<CyclotomicElement> roots(const Poly<CyclotomicElement>& p) {
  Poly<CyclotomicElement> f = monic(p);
  std::vector<CyclotomicElement> out;
  if (f.size() <= 1) return out;
  const std::uint64_t n = f.back().order();
  const CyclotomicElement z = CyclotomicElement::generator(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    // f(zeta^k y), made monic, may have rational coefficients.
    const CyclotomicElement zk = z.pow(k);
    Poly<CyclotomicElement> g;
    CyclotomicElement w = CyclotomicElement(n, Rational(1));
    for (const auto& c : f) {
      g.push_back(c * w);
      w *= zk;
    }
    g = monic(g);
    Poly<Rational> gq;
    bool rational = true;
    for (const auto& c : g) {
      if (!c.is_rational()) {
        rational = false;
        break;
      }
      gq.push_back(c.rational_part());
    }
    if (!rational) continue;
    for (const auto& r : roots(gq)) {
      const CyclotomicElement root = CyclotomicElement(n, r) * zk;
      if (std::find(out.begin(), out.end(), root) == out.end()) out.push_back(root);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CyclotomicElement& a, const CyclotomicElement& b) { return a.to_string() < b.to_string(); });
  return out;
}

}  // namespace campedelli::univariate
