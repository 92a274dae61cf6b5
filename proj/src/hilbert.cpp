#include "campedelli/hilbert.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "campedelli/deadline.hpp"

namespace campedelli {

namespace {

using Poly = std::vector<mpz_class>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly shift(const Poly& a, std::size_t k) {
  Poly r(a.size() + k);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  trim(r);
  return r;
}

bool lex_less(const Monomial& a, const Monomial& b) { return a.exponents() < b.exponents(); }

struct KeyLess {
  bool operator()(const std::vector<Monomial>& a, const std::vector<Monomial>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
  }
};

class Recursion {
 public:
  Poly run(std::vector<Monomial> gens) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return {1};
    if (gens.front().is_one()) return {0};
    auto it = memo_.find(gens);
    if (it != memo_.end()) return it->second;
    Deadline::check();

    Poly result;
    if (pairwise_coprime(gens)) {
      result = {1};
      for (const auto& g : gens) {
        Poly f(g.degree() + 1);
        f[0] = 1;
        f[g.degree()] -= 1;
        result = mul(result, f);
      }
    } else {
      // Pivot on the variable occurring in the most generators.
      int best = 0;
      int best_count = -1;
      for (int v = 0; v < kMaxVariables; ++v) {
        int count = 0;
        for (const auto& g : gens) count += g[v] > 0 ? 1 : 0;
        if (count > best_count) {
          best = v;
          best_count = count;
        }
      }
      std::vector<std::uint16_t> exps;
      for (const auto& g : gens) {
        if (g[best] > 0) exps.push_back(g[best]);
      }
      std::sort(exps.begin(), exps.end());
      std::uint16_t e = exps[exps.size() / 2];
      // The pivot must stay outside the ideal.
      for (const auto& g : gens) {
        if (g.support() == (1U << best) && g[best] <= e) e = static_cast<std::uint16_t>(g[best] - 1);
      }
      const Monomial pivot = Monomial::variable(best, e);
      std::vector<Monomial> with = gens;
      with.push_back(pivot);
      std::vector<Monomial> colon;
      for (const auto& g : gens) colon.push_back(g / Monomial::gcd(g, pivot));
      result = add(run(std::move(with)), shift(run(std::move(colon)), pivot.degree()));
    }
    memo_.emplace(std::move(gens), result);
    return result;
  }

 private:
  static bool pairwise_coprime(const std::vector<Monomial>& gens) {
    std::uint32_t seen = 0;
    for (const auto& g : gens) {
      if ((seen & g.support()) != 0) return false;
      seen |= g.support();
    }
    return true;
  }

  std::map<std::vector<Monomial>, Poly, KeyLess> memo_;
};

}  // namespace

std::string HilbertData::numerator_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    const mpz_class& c = numerator[i];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) os << (mag != 1 ? "*" : "") << "t" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  if (first) os << "0";
  return os.str();
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_less(a, b);
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<mpz_class> hilbert_numerator(const std::vector<Monomial>& gens, int /*nvars*/) {
  return Recursion().run(gens);
}

HilbertData hilbert_data(const std::vector<Monomial>& gens, int nvars) {
  HilbertData h;
  h.nvars = nvars;
  h.numerator = hilbert_numerator(gens, nvars);
  Poly q = h.numerator;
  trim(q);
  if (q.size() == 1 && q[0] == 0) {
    h.dimension = -1;
    h.degree = 0;
    return h;
  }
  // Divide out (1 - t) while it divides.
  int k = 0;
  for (;;) {
    mpz_class at_one = 0;
    for (const auto& c : q) at_one += c;
    if (at_one != 0) {
      h.degree = at_one;
      break;
    }
    // Synthetic division by (1 - t): q = (1 - t) * r, r_i = sum_{j <= i} q_j.
    Poly r(q.size() - 1);
    mpz_class acc = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      acc += q[i];
      r[i] = acc;
    }
    q = r;
    trim(q);
    ++k;
  }
  h.dimension = nvars - k - 1;
  return h;
}

mpz_class hilbert_function(const std::vector<mpz_class>& numerator, int nvars, int d) {
  // Coefficient of t^j in 1/(1-t)^n is C(j + n - 1, n - 1).
  mpz_class total = 0;
  for (std::size_t i = 0; i < numerator.size() && static_cast<int>(i) <= d; ++i) {
    if (numerator[i] == 0) continue;
    const int j = d - static_cast<int>(i);
    mpz_class binom;
    if (nvars == 0) {
      binom = j == 0 ? 1 : 0;
    } else {
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(j + nvars - 1), static_cast<unsigned long>(nvars - 1));
    }
    total += numerator[i] * binom;
  }
  return total;
}

std::optional<std::size_t> count_standard_monomials(const std::vector<Monomial>& gens, int nvars) {
  // Finite iff every variable has a pure power among the generators.
  const auto minimal = minimalize_monomials(gens);
  std::vector<int> bound(static_cast<std::size_t>(nvars), -1);
  for (const auto& g : minimal) {
    if (__builtin_popcount(g.support()) == 1) {
      const int v = __builtin_ctz(g.support());
      if (v < nvars) bound[static_cast<std::size_t>(v)] = g[v];
    }
    if (g.is_one()) return 0;
  }
  for (int b : bound) {
    if (b < 0) return std::nullopt;
  }
  // Depth-first walk over the staircase.
  std::size_t count = 0;
  Monomial m;
  auto inside = [&](const Monomial& x) {
    for (const auto& g : minimal) {
      if (g.divides(x)) return true;
    }
    return false;
  };
  auto walk = [&](auto&& self, int v) -> void {
    if (v == nvars) {
      ++count;
      return;
    }
    for (int e = 0; e < bound[static_cast<std::size_t>(v)]; ++e) {
      m.set(v, static_cast<std::uint16_t>(e));
      if (inside(m)) break;
      self(self, v + 1);
    }
    m.set(v, 0);
  };
  walk(walk, 0);
  return count;
}

}  // namespace campedelli
