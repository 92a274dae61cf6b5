#pragma once

// Buchberger's algorithm with the Gebauer-Moeller pair criteria, normal or
// sugar pair selection, and geobucket reduction.  Results are reduced, monic
// and sorted by increasing leading monomial, hence canonical.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "campedelli/deadline.hpp"
#include "campedelli/polynomial.hpp"

namespace campedelli {

enum class SelectionStrategy { normal, sugar };

struct GroebnerOptions {
  SelectionStrategy strategy = SelectionStrategy::sugar;
};

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_skipped = 0;
};

/// Sum of sorted term lists with cheap leading-term extraction.  Buckets hold
/// terms in increasing order so that the leading term sits at the back.
template <class K>
class Geobucket {
 public:
  using Terms = std::vector<Term<K>>;

  explicit Geobucket(const MonomialOrder& order) : order_(&order) {}

  /// Add terms given in decreasing order.
  void add_descending(const Terms& p) {
    Terms q(p.rbegin(), p.rend());
    add_ascending(std::move(q));
  }

  /// Add c * m * (terms[first..]) for terms in decreasing order.
  void add_scaled(const Terms& p, std::size_t first, const Monomial& m, const K& c) {
    Terms q;
    q.reserve(p.size() - first);
    for (std::size_t k = p.size(); k-- > first;) q.push_back({p[k].monomial * m, p[k].coefficient * c});
    add_ascending(std::move(q));
  }

  /// Remove and return the leading term; false when the sum is zero.
  bool pop_leading(Term<K>& out) {
    for (;;) {
      int best = -1;
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].empty()) continue;
        if (best < 0 || order_->compare(buckets_[i].back().monomial, buckets_[static_cast<std::size_t>(best)].back().monomial) > 0) {
          best = static_cast<int>(i);
        }
      }
      if (best < 0) return false;
      Term<K> lead = std::move(buckets_[static_cast<std::size_t>(best)].back());
      buckets_[static_cast<std::size_t>(best)].pop_back();
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (static_cast<int>(i) == best || buckets_[i].empty()) continue;
        if (buckets_[i].back().monomial == lead.monomial) {
          lead.coefficient += buckets_[i].back().coefficient;
          buckets_[i].pop_back();
        }
      }
      if (!lead.coefficient.is_zero()) {
        out = std::move(lead);
        return true;
      }
    }
  }

 private:
  static std::size_t capacity(std::size_t i) { return std::size_t{8} << (2 * i); }

  Terms merge(Terms a, Terms b) const {
    Terms r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
      const int c = order_->compare(a[i].monomial, b[j].monomial);
      if (c < 0) {
        r.push_back(std::move(a[i++]));
      } else if (c > 0) {
        r.push_back(std::move(b[j++]));
      } else {
        a[i].coefficient += b[j].coefficient;
        if (!a[i].coefficient.is_zero()) r.push_back(std::move(a[i]));
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) r.push_back(std::move(a[i]));
    for (; j < b.size(); ++j) r.push_back(std::move(b[j]));
    return r;
  }

  void add_ascending(Terms p) {
    if (p.empty()) return;
    std::size_t i = 0;
    while (capacity(i) < p.size()) ++i;
    for (;;) {
      if (buckets_.size() <= i) buckets_.resize(i + 1);
      if (buckets_[i].empty()) {
        buckets_[i] = std::move(p);
        return;
      }
      p = merge(std::move(p), std::move(buckets_[i]));
      buckets_[i].clear();
      while (capacity(i) < p.size()) ++i;
    }
  }

  const MonomialOrder* order_;
  std::vector<Terms> buckets_;
};

namespace detail {

template <class K>
const Polynomial<K>* find_reducer(const Monomial& m, const std::vector<const Polynomial<K>*>& reducers) {
  for (const auto* g : reducers) {
    if (g->leading_monomial().divides(m)) return g;
  }
  return nullptr;
}

/// Full reduction of f by the reducers (all in the same ring as f).
template <class K>
Polynomial<K> reduce_full(const Polynomial<K>& f, const std::vector<const Polynomial<K>*>& reducers) {
  const MonomialOrder& order = f.ring()->order();
  Geobucket<K> bucket(order);
  bucket.add_descending(f.terms());
  std::vector<Term<K>> remainder;
  Term<K> lead;
  std::size_t steps = 0;
  while (bucket.pop_leading(lead)) {
    if ((++steps & 0x3FFU) == 0) Deadline::check();
    const Polynomial<K>* g = find_reducer(lead.monomial, reducers);
    if (g == nullptr) {
      remainder.push_back(std::move(lead));
      continue;
    }
    const K c = -(lead.coefficient / g->leading_coefficient());
    bucket.add_scaled(g->terms(), 1, lead.monomial / g->leading_monomial(), c);
  }
  return Polynomial<K>::from_sorted_terms(f.ring(), std::move(remainder));
}

}  // namespace detail

/// The standard S-polynomial of f and g with respect to `order`.
template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial();
  require_same_ring(f.ring(), g.ring());
  const RingPtr ring = f.ring()->with_order(order);
  const Polynomial<K> a = f.change_ring(ring);
  const Polynomial<K> b = g.change_ring(ring);
  const Monomial l = Monomial::lcm(a.leading_monomial(), b.leading_monomial());
  return a.mul_term(l / a.leading_monomial(), a.leading_coefficient().inverse()) -
         b.mul_term(l / b.leading_monomial(), b.leading_coefficient().inverse());
}

/// Remainder of f on full division by `basis` under `order`.  The result
/// lives in f's variables with the ring order replaced by `order`.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis, const MonomialOrder& order) {
  const RingPtr ring = f.ring()->with_order(order);
  std::vector<Polynomial<K>> converted;
  converted.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) throw ZeroPolynomial();
    if (!g.ring()->compatible_with(*f.ring())) throw RingMismatch("basis element from another ring");
    converted.push_back(g.change_ring(ring));
  }
  std::vector<const Polynomial<K>*> reducers;
  for (const auto& g : converted) reducers.push_back(&g);
  return detail::reduce_full(f.change_ring(ring), reducers);
}

template <class K>
struct GroebnerBasis {
  RingPtr ring;  // the input ring with `order` installed
  MonomialOrder order;
  std::vector<Polynomial<K>> basis;
  bool reduced = true;
  GroebnerStats stats;

  bool is_unit() const { return basis.size() == 1 && basis.front().is_constant(); }
  bool is_zero_ideal() const { return basis.empty(); }

  Polynomial<K> normal_form(const Polynomial<K>& f) const {
    std::vector<const Polynomial<K>*> reducers;
    for (const auto& g : basis) reducers.push_back(&g);
    return detail::reduce_full(f.change_ring(ring), reducers);
  }
  bool contains(const Polynomial<K>& f) const { return normal_form(f).is_zero(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : basis) out.push_back(g.leading_monomial());
    return out;
  }
};

namespace detail {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t sugar;
};

struct PairLess {
  const MonomialOrder* order;
  SelectionStrategy strategy;
  bool operator()(const Pair& a, const Pair& b) const {
    if (strategy == SelectionStrategy::sugar && a.sugar != b.sugar) return a.sugar < b.sugar;
    if (int c = order->compare(a.lcm, b.lcm); c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

template <class K>
class Buchberger {
 public:
  Buchberger(RingPtr ring, GroebnerOptions options)
      : ring_(std::move(ring)), pairs_(PairLess{&ring_->order(), options.strategy}) {}

  GroebnerBasis<K> run(const std::vector<Polynomial<K>>& generators) {
    std::vector<Polynomial<K>> gens;
    for (const auto& g : generators) {
      if (!g.is_zero()) gens.push_back(g.change_ring(ring_).monic());
    }
    const MonomialOrder& order = ring_->order();
    std::sort(gens.begin(), gens.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
      if (int c = order.compare(a.leading_monomial(), b.leading_monomial()); c != 0) return c < 0;
      return a.size() < b.size();
    });
    for (const auto& g : gens) {
      Polynomial<K> h = reduce_full(g, active_reducers());
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit();
      insert(h.monic(), static_cast<std::uint32_t>(h.total_degree()));
    }
    while (!pairs_.empty()) {
      Deadline::check();
      const Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      ++stats_.pairs_processed;
      const Polynomial<K>& f = polys_[p.i];
      const Polynomial<K>& g = polys_[p.j];
      Polynomial<K> s = f.mul_term(p.lcm / f.leading_monomial(), f.leading_coefficient().inverse()) -
                        g.mul_term(p.lcm / g.leading_monomial(), g.leading_coefficient().inverse());
      Polynomial<K> h = reduce_full(s, active_reducers());
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (h.is_constant()) return unit();
      insert(h.monic(), p.sugar);
    }
    return finish();
  }

 private:
  GroebnerBasis<K> unit() {
    GroebnerBasis<K> gb{ring_, ring_->order(), {Polynomial<K>::one(ring_)}, true, stats_};
    return gb;
  }

  std::vector<const Polynomial<K>*> active_reducers() const {
    std::vector<const Polynomial<K>*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(&polys_[k]);
    }
    return out;
  }

  // Gebauer-Moeller update with the new element h.
  void insert(Polynomial<K> h, std::uint32_t sugar) {
    const std::size_t hi = polys_.size();
    const Monomial lh = h.leading_monomial();
    polys_.push_back(std::move(h));
    sugars_.push_back(sugar);
    active_.push_back(true);

    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < hi; ++k) {
      if (!active_[k]) continue;
      const Monomial& lk = polys_[k].leading_monomial();
      const Monomial l = Monomial::lcm(lk, lh);
      const std::uint32_t s = std::max(sugars_[k] + (l.degree() - lk.degree()), sugar + (l.degree() - lh.degree()));
      candidates.push_back({k, hi, l, s});
    }
    // Criterion M/F: keep a pair unless another candidate's lcm properly divides it
    // (or equals it and comes earlier); coprime pairs are kept at this stage.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      const bool coprime = Monomial::coprime(polys_[p.i].leading_monomial(), lh);
      bool drop = false;
      if (!coprime) {
        for (std::size_t b = 0; b < candidates.size() && !drop; ++b) {
          if (b == a) continue;
          const Pair& q = candidates[b];
          if (!q.lcm.divides(p.lcm)) continue;
          if (!(q.lcm == p.lcm)) {
            drop = true;
          } else {
            // Equal lcms: keep a single representative, preferring a coprime one.
            const bool q_coprime = Monomial::coprime(polys_[q.i].leading_monomial(), lh);
            if (q_coprime || b < a) drop = true;
          }
        }
      }
      if (!drop) kept.push_back(p);
    }
    // Criterion B on old pairs.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& l = it->lcm;
      if (lh.divides(l)) {
        const Monomial li = Monomial::lcm(polys_[it->i].leading_monomial(), lh);
        const Monomial lj = Monomial::lcm(polys_[it->j].leading_monomial(), lh);
        if (!(li == l) && !(lj == l)) {
          it = pairs_.erase(it);
          ++stats_.pairs_skipped;
          continue;
        }
      }
      ++it;
    }
    for (const auto& p : kept) {
      if (Monomial::coprime(polys_[p.i].leading_monomial(), lh)) {
        ++stats_.pairs_skipped;
        continue;
      }
      pairs_.insert(p);
    }
    stats_.pairs_skipped += candidates.size() - kept.size();
    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k] && lh.divides(polys_[k].leading_monomial())) active_[k] = false;
    }
  }

  GroebnerBasis<K> finish() {
    const MonomialOrder& order = ring_->order();
    std::vector<Polynomial<K>> g;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) g.push_back(polys_[k]);
    }
    // Minimalize.
    std::vector<Polynomial<K>> minimal;
    for (std::size_t a = 0; a < g.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
        if (a == b) continue;
        const Monomial& la = g[a].leading_monomial();
        const Monomial& lb = g[b].leading_monomial();
        if (lb.divides(la) && (!(la == lb) || b < a)) redundant = true;
      }
      if (!redundant) minimal.push_back(g[a]);
    }
    // Interreduce.
    std::vector<Polynomial<K>> reduced;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<const Polynomial<K>*> others;
      for (std::size_t b = 0; b < minimal.size(); ++b) {
        if (b != a) others.push_back(&minimal[b]);
      }
      reduced.push_back(reduce_full(minimal[a], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
      return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return GroebnerBasis<K>{ring_, order, std::move(reduced), true, stats_};
  }

  RingPtr ring_;
  std::vector<Polynomial<K>> polys_;
  std::vector<std::uint32_t> sugars_;
  std::vector<bool> active_;
  std::set<Pair, PairLess> pairs_;
  GroebnerStats stats_;
};

}  // namespace detail

/// The reduced Groebner basis of the ideal generated by `gens` under `order`.
/// Generators must share a ring (up to monomial order).
template <class K>
GroebnerBasis<K> reduced_groebner_basis(const std::vector<Polynomial<K>>& gens, const MonomialOrder& order,
                                        const GroebnerOptions& options = {}) {
  if (gens.empty()) throw std::invalid_argument("reduced_groebner_basis needs at least one generator to fix the ring");
  const RingPtr ring = gens.front().ring()->with_order(order);
  for (const auto& g : gens) {
    if (!g.ring()->compatible_with(*ring)) throw RingMismatch("generators live in different rings");
  }
  return detail::Buchberger<K>(ring, options).run(gens);
}

template <class K>
GroebnerBasis<K> reduced_groebner_basis(const RingPtr& ring, const std::vector<Polynomial<K>>& gens,
                                        const GroebnerOptions& options = {}) {
  if (gens.empty()) return GroebnerBasis<K>{ring, ring->order(), {}, true, {}};
  return reduced_groebner_basis(gens, ring->order(), options);
}

template <class K>
bool ideal_member(const Polynomial<K>& f, const std::vector<Polynomial<K>>& gens, const MonomialOrder& order) {
  if (f.is_zero()) return true;
  std::vector<Polynomial<K>> nonzero;
  for (const auto& g : gens) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) return false;
  return reduced_groebner_basis(nonzero, order).contains(f);
}

}  // namespace campedelli
