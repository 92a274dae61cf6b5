#pragma once

// Ideals with cached Groebner bases, and the operations built on them:
// elimination, saturation, intersection, Hilbert dimension and degree,
// projective emptiness and the points of zero-dimensional schemes.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "campedelli/groebner.hpp"
#include "campedelli/hilbert.hpp"
#include "campedelli/linalg.hpp"
#include "campedelli/univariate.hpp"

namespace campedelli {

class NotHomogeneous : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionNotZero : public std::runtime_error {
 public:
  explicit DimensionNotZero(int dim)
      : std::runtime_error("expected a zero-dimensional scheme, got dimension " + std::to_string(dim)), dimension(dim) {}
  int dimension;
};

template <class K>
class Ideal {
 public:
  using Poly = Polynomial<K>;

  Ideal(RingPtr ring, std::vector<Poly> generators) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
      if (g.is_zero()) continue;
      gens_.push_back(g.ring() == ring_ ? std::move(g) : g.change_ring(ring_));
    }
  }

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring) {
    auto one = Poly::one(ring);
    return Ideal(std::move(ring), {one});
  }
  /// The ideal generated by the variables in `vars`.
  static Ideal of_variables(RingPtr ring, const std::vector<int>& vars) {
    std::vector<Poly> g;
    for (int v : vars) g.push_back(Poly::variable(ring, v));
    return Ideal(std::move(ring), std::move(g));
  }
  /// The irrelevant ideal: all variables.
  static Ideal irrelevant(RingPtr ring) {
    std::vector<int> vars;
    for (int i = 0; i < ring->nvars(); ++i) vars.push_back(i);
    return of_variables(std::move(ring), vars);
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }

  /// Reduced Groebner basis for `order` (the ring order by default).  Bases
  /// are cached per order; copies of an ideal share the cache.
  const GroebnerBasis<K>& groebner(const std::optional<MonomialOrder>& order = std::nullopt) const {
    const MonomialOrder o = order.value_or(ring_->order());
    const std::string key = o.to_string();
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find(key);
    if (it == cache_->bases.end()) {
      GroebnerBasis<K> gb = gens_.empty() ? GroebnerBasis<K>{ring_->with_order(o), o, {}, true, {}}
                                          : reduced_groebner_basis(gens_, o);
      it = cache_->bases.emplace(key, std::make_shared<GroebnerBasis<K>>(std::move(gb))).first;
    }
    return *it->second;
  }

  bool is_unit() const { return groebner().is_unit(); }
  bool is_zero() const { return gens_.empty(); }
  bool contains(const Poly& f) const { return groebner().contains(f); }
  bool contains(const Ideal& o) const {
    for (const auto& g : o.gens_) {
      if (!contains(g)) return false;
    }
    return true;
  }

  /// Homogeneous for the total grading.
  bool is_homogeneous() const {
    for (const auto& g : gens_) {
      if (!g.is_homogeneous()) return false;
    }
    return true;
  }
  /// Homogeneous in every grading block.
  bool is_multihomogeneous() const {
    for (const auto& g : gens_) {
      if (!g.is_multihomogeneous()) return false;
    }
    return true;
  }

  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring_, b.ring_);
    std::vector<Poly> g = a.gens_;
    g.insert(g.end(), b.gens_.begin(), b.gens_.end());
    return Ideal(a.ring_, std::move(g));
  }
  friend Ideal operator*(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring_, b.ring_);
    std::vector<Poly> g;
    for (const auto& x : a.gens_) {
      for (const auto& y : b.gens_) g.push_back(x * y);
    }
    return Ideal(a.ring_, std::move(g));
  }
  Ideal with(const std::vector<Poly>& extra) const {
    std::vector<Poly> g = gens_;
    g.insert(g.end(), extra.begin(), extra.end());
    return Ideal(ring_, std::move(g));
  }

  /// Equality of ideals, through reduced bases in the ring order.
  friend bool operator==(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring_, b.ring_);
    return a.groebner().basis == b.groebner().basis;
  }

  std::string to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i > 0 ? ", " : "") + gens_[i].to_string();
    return s + ">";
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<GroebnerBasis<K>>> bases;
  };

  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

namespace detail {

template <class K>
Polynomial<K> move_terms(const Polynomial<K>& p, const RingPtr& target) {
  return Polynomial<K>::from_terms(target, p.terms());
}

/// Generators of `gb` free of the variables in `mask`, moved into `target`.
template <class K>
std::vector<Polynomial<K>> free_of(const GroebnerBasis<K>& gb, std::uint32_t mask, const RingPtr& target) {
  std::vector<Polynomial<K>> out;
  for (const auto& g : gb.basis) {
    bool ok = true;
    for (const auto& t : g.terms()) {
      if ((t.monomial.support() & mask) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(move_terms(g, target));
  }
  return out;
}

/// Exact quotient a / b; throws when b does not divide a.
template <class K>
Polynomial<K> exact_quotient(Polynomial<K> a, const Polynomial<K>& b) {
  if (b.is_zero()) throw ZeroPolynomial();
  const K inv = b.leading_coefficient().inverse();
  std::vector<Term<K>> q;
  while (!a.is_zero()) {
    const Monomial& lm = a.leading_monomial();
    if (!b.leading_monomial().divides(lm)) throw std::domain_error("polynomial division is not exact");
    const Monomial m = lm / b.leading_monomial();
    const K c = a.leading_coefficient() * inv;
    q.push_back({m, c});
    a -= b.mul_term(m, c);
  }
  return Polynomial<K>::from_terms(b.ring(), std::move(q));
}

}  // namespace detail

/// I intersected with the subring without `vars`, generated in the same ring.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<int>& vars) {
  std::uint32_t mask = 0;
  for (int v : vars) mask |= 1U << v;
  if (mask == 0) return Ideal<K>(I.ring(), I.groebner().basis);
  const auto& gb = I.groebner(MonomialOrder::block(mask));
  return Ideal<K>(I.ring(), detail::free_of(gb, mask, I.ring()));
}

/// I : f^infinity, by adjoining u with 1 - u*f and eliminating u.
template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Polynomial<K>& f) {
  if (f.is_zero()) return Ideal<K>::unit(I.ring());
  if (f.is_constant()) return I;
  const RingPtr big = I.ring()->with_extra_variable("_sat");
  const int u = big->nvars() - 1;
  std::vector<Polynomial<K>> gens;
  for (const auto& g : I.generators()) gens.push_back(detail::move_terms(g, big));
  const auto fu = detail::move_terms(f, big);
  gens.push_back(Polynomial<K>::one(big) - Polynomial<K>::variable(big, u) * fu);
  const std::uint32_t mask = 1U << u;
  const auto gb = reduced_groebner_basis(gens, MonomialOrder::block(mask));
  return Ideal<K>(I.ring(), detail::free_of(gb, mask, I.ring()));
}

/// I intersected with J, via t*I + (1 - t)*J.
template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J) {
  require_same_ring(I.ring(), J.ring());
  if (I.is_zero() || J.is_zero()) return Ideal<K>::zero(I.ring());
  const RingPtr big = I.ring()->with_extra_variable("_int");
  const int t = big->nvars() - 1;
  const auto tp = Polynomial<K>::variable(big, t);
  const auto one = Polynomial<K>::one(big);
  std::vector<Polynomial<K>> gens;
  for (const auto& g : I.generators()) gens.push_back(tp * detail::move_terms(g, big));
  for (const auto& g : J.generators()) gens.push_back((one - tp) * detail::move_terms(g, big));
  const std::uint32_t mask = 1U << t;
  const auto gb = reduced_groebner_basis(gens, MonomialOrder::block(mask));
  return Ideal<K>(I.ring(), detail::free_of(gb, mask, I.ring()));
}

/// I : f.
template <class K>
Ideal<K> colon(const Ideal<K>& I, const Polynomial<K>& f) {
  if (f.is_zero()) return Ideal<K>::unit(I.ring());
  const auto both = intersect(I, Ideal<K>(I.ring(), {f}));
  std::vector<Polynomial<K>> out;
  for (const auto& g : both.generators()) out.push_back(detail::exact_quotient(g.change_ring(I.ring()), f.change_ring(I.ring())));
  return Ideal<K>(I.ring(), std::move(out));
}

/// I : J.
template <class K>
Ideal<K> colon(const Ideal<K>& I, const Ideal<K>& J) {
  if (J.is_zero()) return Ideal<K>::unit(I.ring());
  std::optional<Ideal<K>> acc;
  for (const auto& g : J.generators()) {
    auto part = colon(I, g);
    acc = acc ? intersect(*acc, part) : part;
  }
  return *acc;
}

/// I : J^infinity, intersected over the generators of J.
template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Ideal<K>& J) {
  if (J.is_zero()) return Ideal<K>::unit(I.ring());
  std::optional<Ideal<K>> acc;
  for (const auto& g : J.generators()) {
    auto part = saturate(I, g);
    if (part.is_unit()) continue;
    acc = acc ? intersect(*acc, part) : part;
  }
  return acc ? *acc : Ideal<K>::unit(I.ring());
}

/// Dimension and degree of Proj(R / I) from the leading-term ideal.
template <class K>
HilbertData hilbert_dimension_degree(const Ideal<K>& I) {
  if (!I.is_homogeneous()) throw NotHomogeneous("ideal is not homogeneous: " + I.to_string());
  const auto& gb = I.groebner(MonomialOrder::grevlex());
  return hilbert_data(gb.leading_monomials(), I.ring()->nvars());
}

namespace detail {

/// Affine chart ideals for each choice of one coordinate per grading block
/// set to 1.
template <class K>
std::vector<Ideal<K>> chart_ideals(const Ideal<K>& I) {
  const RingPtr& ring = I.ring();
  std::vector<std::vector<int>> choices{{}};
  for (const auto& block : ring->blocks()) {
    std::vector<std::vector<int>> next;
    for (const auto& c : choices) {
      for (int v : block) {
        auto d = c;
        d.push_back(v);
        next.push_back(std::move(d));
      }
    }
    choices = std::move(next);
  }
  std::vector<Ideal<K>> out;
  for (const auto& c : choices) {
    std::vector<Polynomial<K>> extra;
    for (int v : c) extra.push_back(Polynomial<K>::variable(ring, v) - Polynomial<K>::one(ring));
    out.push_back(I.with(extra));
  }
  return out;
}

}  // namespace detail

/// True when the projective (or multiprojective) scheme is empty, decided on
/// the affine charts.  Independent of the Hilbert series.
template <class K>
bool is_projectively_empty(const Ideal<K>& I) {
  const bool multi = I.ring()->blocks().size() > 1;
  if (multi ? !I.is_multihomogeneous() : !I.is_homogeneous()) {
    throw NotHomogeneous("ideal is not homogeneous: " + I.to_string());
  }
  for (const auto& chart : detail::chart_ideals(I)) {
    Deadline::check();
    if (!chart.is_unit()) return false;
  }
  return true;
}

namespace detail {

/// Disjoint affine charts: in each grading block, the first i coordinates
/// vanish and the next one is 1.  Every point lies in exactly one chart.
template <class K>
std::vector<Ideal<K>> disjoint_chart_ideals(const Ideal<K>& I) {
  const RingPtr& ring = I.ring();
  std::vector<std::vector<Polynomial<K>>> choices{{}};
  for (const auto& block : ring->blocks()) {
    std::vector<std::vector<Polynomial<K>>> next;
    for (const auto& c : choices) {
      for (std::size_t i = 0; i < block.size(); ++i) {
        auto d = c;
        for (std::size_t j = 0; j < i; ++j) d.push_back(Polynomial<K>::variable(ring, block[j]));
        d.push_back(Polynomial<K>::variable(ring, block[i]) - Polynomial<K>::one(ring));
        next.push_back(std::move(d));
      }
    }
    choices = std::move(next);
  }
  std::vector<Ideal<K>> out;
  for (const auto& c : choices) out.push_back(I.with(c));
  return out;
}

}  // namespace detail

/// Dimension and degree of the (multi)projective scheme.  One grading block
/// uses the Hilbert series.  Several blocks use the disjoint affine charts:
/// the dimension is the largest affine chart dimension, and for a
/// zero-dimensional scheme the degree is the total length over the charts.
/// Positive-dimensional multiprojective schemes report degree 0.
template <class K>
HilbertData projective_dimension_degree(const Ideal<K>& I) {
  if (I.ring()->blocks().size() == 1) return hilbert_dimension_degree(I);
  if (!I.is_multihomogeneous()) throw NotHomogeneous("ideal is not multihomogeneous: " + I.to_string());
  const int n = I.ring()->nvars();
  HilbertData out;
  out.nvars = n;
  mpz_class length = 0;
  for (const auto& chart : detail::disjoint_chart_ideals(I)) {
    Deadline::check();
    const auto& gb = chart.groebner(MonomialOrder::grevlex());
    if (gb.is_unit()) continue;
    const auto lms = gb.leading_monomials();
    // Krull dimension of R / in(J) is one more than its projective dimension.
    const int affine = hilbert_data(lms, n).dimension + 1;
    out.dimension = std::max(out.dimension, affine);
    if (affine == 0) length += static_cast<unsigned long>(*count_standard_monomials(lms, n));
  }
  out.degree = out.dimension == 0 ? length : mpz_class(0);
  return out;
}

template <class K>
struct ZeroDimSupport {
  /// Degree of the reduced scheme: the number of geometric points.
  std::size_t reduced_degree = 0;
  /// Points with coordinates in the base field, first nonzero coordinate 1.
  std::vector<std::vector<K>> points;
};

namespace detail {

/// Coefficient vectors of normal forms, indexed by a growing monomial list.
template <class K>
struct NormalFormSpan {
  std::vector<Monomial> monomials;
  std::vector<std::map<std::size_t, K>> vectors;

  void add(const Polynomial<K>& p) {
    std::map<std::size_t, K> v;
    for (const auto& t : p.terms()) {
      std::size_t idx = 0;
      while (idx < monomials.size() && !(monomials[idx] == t.monomial)) ++idx;
      if (idx == monomials.size()) monomials.push_back(t.monomial);
      v.emplace(idx, t.coefficient);
    }
    vectors.push_back(std::move(v));
  }

  Matrix<K> matrix(const K& zero) const {
    Matrix<K> m(static_cast<Eigen::Index>(monomials.size()), static_cast<Eigen::Index>(vectors.size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = zero;
    }
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      for (const auto& [i, c] : vectors[j]) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = c;
    }
    return m;
  }
};

/// Minimal polynomial of variable v modulo a zero-dimensional ideal, as
/// ascending coefficients.
template <class K>
univariate::Poly<K> minimal_polynomial(const GroebnerBasis<K>& gb, int v, std::size_t bound) {
  const RingPtr& ring = gb.ring;
  const auto x = Polynomial<K>::variable(ring, v);
  const K zero = scalar_from_int<K>(ring->field(), 0);
  const K one = scalar_from_int<K>(ring->field(), 1);
  NormalFormSpan<K> span;
  Polynomial<K> power = gb.normal_form(Polynomial<K>::one(ring));
  span.add(power);
  for (std::size_t k = 1; k <= bound + 1; ++k) {
    Deadline::check();
    power = gb.normal_form(power * x);
    span.add(power);
    const Matrix<K> ker = kernel(span.matrix(zero), one);
    if (ker.cols() == 0) continue;
    univariate::Poly<K> mp;
    for (Eigen::Index i = 0; i < ker.rows(); ++i) mp.push_back(ker(i, 0));
    univariate::trim(mp);
    return univariate::monic(mp);
  }
  throw DimensionNotZero(1);
}

template <class K>
std::vector<K> field_roots(const univariate::Poly<K>& p) {
  return univariate::roots(p);
}

}  // namespace detail

/// Reduced degree and base-field points of a zero-dimensional projective
/// scheme.  The radical comes from squarefree parts of minimal polynomials on
/// the disjoint charts x_0 = .. = x_{i-1} = 0, x_i = 1.
template <class K>
ZeroDimSupport<K> zero_dim_support(const Ideal<K>& I) {
  const HilbertData hd = hilbert_dimension_degree(I);
  if (hd.dimension != 0) throw DimensionNotZero(hd.dimension);
  const RingPtr& ring = I.ring();
  const int n = ring->nvars();
  const K zero = scalar_from_int<K>(ring->field(), 0);
  ZeroDimSupport<K> out;
  for (int i = 0; i < n; ++i) {
    std::vector<Polynomial<K>> extra;
    for (int j = 0; j < i; ++j) extra.push_back(Polynomial<K>::variable(ring, j));
    extra.push_back(Polynomial<K>::variable(ring, i) - Polynomial<K>::one(ring));
    const Ideal<K> chart = I.with(extra);
    const auto& gb = chart.groebner(MonomialOrder::grevlex());
    if (gb.is_unit()) continue;
    const auto count = count_standard_monomials(gb.leading_monomials(), n);
    if (!count) throw DimensionNotZero(1);
    std::vector<Polynomial<K>> squarefree;
    std::vector<std::vector<K>> candidates(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      const auto mp = univariate::squarefree_part(detail::minimal_polynomial(gb, v, *count));
      Polynomial<K> sq(gb.ring);
      const auto x = Polynomial<K>::variable(gb.ring, v);
      for (std::size_t k = mp.size(); k-- > 0;) sq = sq * x + Polynomial<K>::constant(gb.ring, mp[k]);
      squarefree.push_back(sq);
      candidates[static_cast<std::size_t>(v)] = detail::field_roots(mp);
    }
    const Ideal<K> radical(gb.ring, [&] {
      auto g = gb.basis;
      g.insert(g.end(), squarefree.begin(), squarefree.end());
      return g;
    }());
    const auto& rgb = radical.groebner();
    out.reduced_degree += *count_standard_monomials(rgb.leading_monomials(), n);
    std::vector<std::uint32_t> supports;
    for (const auto& g : rgb.basis) {
      std::uint32_t s = 0;
      for (const auto& t : g.terms()) s |= t.monomial.support();
      supports.push_back(s);
    }
    // Depth-first search over candidate coordinates, pruning with the
    // generators whose variables are all assigned.
    std::vector<K> point(static_cast<std::size_t>(n), zero);
    auto search = [&](auto&& self, int v, std::uint32_t assigned) -> void {
      Deadline::check();
      for (std::size_t k = 0; k < rgb.basis.size(); ++k) {
        if ((supports[k] & ~assigned) != 0) continue;
        if (!rgb.basis[k].evaluate(point).is_zero()) return;
      }
      if (v == n) {
        out.points.push_back(point);
        return;
      }
      for (const auto& c : candidates[static_cast<std::size_t>(v)]) {
        point[static_cast<std::size_t>(v)] = c;
        self(self, v + 1, assigned | (1U << v));
      }
      point[static_cast<std::size_t>(v)] = zero;
    };
    search(search, 0, 0);
  }
  return out;
}

}  // namespace campedelli
