#pragma once

// Finite groups of projective automorphisms of P^n and of products of
// projective spaces, their action on polynomials and ideals, fixed loci and
// free-action certificates.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "campedelli/ideal.hpp"
#include "campedelli/linalg.hpp"
#include "campedelli/univariate.hpp"

namespace campedelli {

class ShapeMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrderOverflow : public std::runtime_error {
 public:
  explicit OrderOverflow(std::size_t cutoff)
      : std::runtime_error("group closure exceeded " + std::to_string(cutoff) + " elements") {}
};

class EigenvalueOutsideField : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotInvariant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Which way a matrix acts on polynomials: `matrix` sends f to f(Mx),
/// `inverse` to f(M^-1 x).
enum class ActionConvention { matrix, inverse };

/// A projective automorphism of P^{n_1} x ... x P^{n_k}, given by one matrix
/// per factor.  With `swap` set (two factors of equal size) the map is
/// (x, y) -> (A y, B x); otherwise (x, y) -> (A x, B y).
template <class K>
class ProjAutomorphism {
 public:
  ProjAutomorphism() = default;
  explicit ProjAutomorphism(Matrix<K> m) : blocks_{std::move(m)} { validate(); }
  ProjAutomorphism(std::vector<Matrix<K>> blocks, bool swap) : blocks_(std::move(blocks)), swap_(swap) { validate(); }

  static ProjAutomorphism identity(const std::vector<int>& sizes, const K& one) {
    std::vector<Matrix<K>> b;
    for (int s : sizes) b.push_back(campedelli::identity<K>(s, one));
    return ProjAutomorphism(std::move(b), false);
  }
  static ProjAutomorphism diagonal(const std::vector<K>& entries) {
    const auto n = static_cast<Eigen::Index>(entries.size());
    const K zero = entries.front() * K(0);
    Matrix<K> m = Matrix<K>::Constant(n, n, zero);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
    return ProjAutomorphism(std::move(m));
  }
  /// x_i -> x_{perm[i]}: row i has a 1 in column perm[i].
  static ProjAutomorphism permutation(const std::vector<int>& perm, const K& one) {
    const auto n = static_cast<Eigen::Index>(perm.size());
    Matrix<K> m = Matrix<K>::Constant(n, n, one * K(0));
    for (Eigen::Index i = 0; i < n; ++i) m(i, perm[static_cast<std::size_t>(i)]) = one;
    return ProjAutomorphism(std::move(m));
  }

  const std::vector<Matrix<K>>& blocks() const { return blocks_; }
  bool swap() const { return swap_; }
  std::vector<int> sizes() const {
    std::vector<int> s;
    for (const auto& b : blocks_) s.push_back(static_cast<int>(b.rows()));
    return s;
  }
  bool is_diagonal() const {
    if (swap_) return false;
    for (const auto& b : blocks_) {
      for (Eigen::Index i = 0; i < b.rows(); ++i) {
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
          if (i != j && !b(i, j).is_zero()) return false;
        }
      }
    }
    return true;
  }
  K one() const { return unit_like(blocks_.front()(0, 0)); }

  /// Composition: (g * h)(p) = g(h(p)).
  friend ProjAutomorphism operator*(const ProjAutomorphism& g, const ProjAutomorphism& h) {
    if (g.sizes() != h.sizes()) throw ShapeMismatch("automorphisms act on different spaces");
    std::vector<Matrix<K>> out;
    if (g.swap_) {
      out.push_back(g.blocks_[0] * h.blocks_[1]);
      out.push_back(g.blocks_[1] * h.blocks_[0]);
    } else {
      for (std::size_t b = 0; b < g.blocks_.size(); ++b) out.push_back(g.blocks_[b] * h.blocks_[b]);
    }
    return ProjAutomorphism(std::move(out), g.swap_ != h.swap_);
  }

  ProjAutomorphism inverse() const {
    std::vector<Matrix<K>> out;
    if (swap_) {
      // (x, y) -> (A y, B x) has inverse (u, v) -> (B^-1 v, A^-1 u).
      out.push_back(campedelli::inverse(blocks_[1]));
      out.push_back(campedelli::inverse(blocks_[0]));
    } else {
      for (const auto& b : blocks_) out.push_back(campedelli::inverse(b));
    }
    return ProjAutomorphism(std::move(out), swap_);
  }

  ProjAutomorphism pow(std::uint64_t e) const {
    ProjAutomorphism r = identity(sizes(), one());
    ProjAutomorphism base = *this;
    while (e > 0) {
      if (e & 1U) r = r * base;
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return r;
  }

  /// Image of a point given as concatenated block coordinates.
  std::vector<K> apply(const std::vector<K>& point) const {
    const auto sz = sizes();
    if (static_cast<int>(point.size()) != std::accumulate(sz.begin(), sz.end(), 0)) {
      throw ShapeMismatch("point has the wrong number of coordinates");
    }
    std::vector<Vector<K>> parts;
    std::size_t offset = 0;
    for (int s : sz) {
      Vector<K> v(s);
      for (int i = 0; i < s; ++i) v(i) = point[offset + static_cast<std::size_t>(i)];
      parts.push_back(v);
      offset += static_cast<std::size_t>(s);
    }
    if (swap_) std::swap(parts[0], parts[1]);
    std::vector<K> out;
    for (std::size_t b = 0; b < parts.size(); ++b) {
      const Vector<K> w = blocks_[b] * parts[b];
      for (Eigen::Index i = 0; i < w.size(); ++i) out.push_back(w(i));
    }
    return out;
  }

  /// Each block scaled so that its first nonzero entry (row-major) is 1.
  ProjAutomorphism canonical() const {
    std::vector<Matrix<K>> out;
    for (const auto& b : blocks_) {
      K lead = b(0, 0);
      for (Eigen::Index i = 0; i < b.rows() && lead.is_zero(); ++i) {
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
          if (!b(i, j).is_zero()) {
            lead = b(i, j);
            break;
          }
        }
      }
      const K inv = lead.inverse();
      Matrix<K> c = b;
      for (Eigen::Index i = 0; i < c.rows(); ++i) {
        for (Eigen::Index j = 0; j < c.cols(); ++j) c(i, j) *= inv;
      }
      out.push_back(std::move(c));
    }
    return ProjAutomorphism(std::move(out), swap_);
  }

  /// Text key of the canonical form, used for lookups.
  std::string key() const {
    const auto c = canonical();
    std::string s = swap_ ? "S" : "N";
    for (const auto& b : c.blocks_) {
      s += "|";
      for (Eigen::Index i = 0; i < b.rows(); ++i) {
        for (Eigen::Index j = 0; j < b.cols(); ++j) s += b(i, j).to_string() + ",";
      }
    }
    return s;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (b > 0) s += " x ";
      s += "[";
      for (Eigen::Index i = 0; i < blocks_[b].rows(); ++i) {
        s += (i > 0 ? ", [" : "[");
        for (Eigen::Index j = 0; j < blocks_[b].cols(); ++j) s += (j > 0 ? ", " : "") + blocks_[b](i, j).to_string();
        s += "]";
      }
      s += "]";
    }
    if (swap_) s += " swap";
    return s;
  }

  template <class K2, class F>
  ProjAutomorphism<K2> map_entries(F f) const {
    std::vector<Matrix<K2>> out;
    for (const auto& b : blocks_) {
      Matrix<K2> m(b.rows(), b.cols());
      for (Eigen::Index i = 0; i < b.rows(); ++i) {
        for (Eigen::Index j = 0; j < b.cols(); ++j) m(i, j) = f(b(i, j));
      }
      out.push_back(std::move(m));
    }
    return ProjAutomorphism<K2>(std::move(out), swap_);
  }

 private:
  void validate() const {
    if (blocks_.empty()) throw ShapeMismatch("automorphism without blocks");
    for (const auto& b : blocks_) {
      if (b.rows() != b.cols() || b.rows() == 0) throw ShapeMismatch("automorphism blocks must be square");
      if (determinant(b).is_zero()) throw SingularMatrix();
    }
    if (swap_ && (blocks_.size() != 2 || blocks_[0].rows() != blocks_[1].rows())) {
      throw ShapeMismatch("swap needs two factors of equal dimension");
    }
  }

  std::vector<Matrix<K>> blocks_;
  bool swap_ = false;
};

/// N = lambda M for a nonzero scalar, factor by factor, with equal swap flags.
template <class K>
bool projective_equal(const ProjAutomorphism<K>& m, const ProjAutomorphism<K>& n) {
  if (m.sizes() != n.sizes()) throw ShapeMismatch("automorphisms act on different spaces");
  if (m.swap() != n.swap()) return false;
  const auto a = m.canonical();
  const auto b = n.canonical();
  for (std::size_t i = 0; i < a.blocks().size(); ++i) {
    if (!matrices_equal(a.blocks()[i], b.blocks()[i])) return false;
  }
  return true;
}

template <class K>
bool is_projectively_trivial(const ProjAutomorphism<K>& g) {
  return projective_equal(g, ProjAutomorphism<K>::identity(g.sizes(), g.one()));
}

/// Elements of a finite group up to projective equality, in closure order
/// (identity first, then breadth-first in the generators), with the
/// multiplication table.
template <class K>
class FiniteMatrixGroup {
 public:
  static constexpr std::size_t kDefaultCutoff = 256;

  static FiniteMatrixGroup closure(const std::vector<ProjAutomorphism<K>>& generators,
                                   std::size_t cutoff = kDefaultCutoff) {
    if (generators.empty()) throw std::invalid_argument("group closure needs a generator");
    FiniteMatrixGroup g;
    g.generators_ = generators;
    g.add(ProjAutomorphism<K>::identity(generators.front().sizes(), generators.front().one()).canonical());
    for (std::size_t i = 0; i < g.elements_.size(); ++i) {
      for (const auto& s : generators) {
        Deadline::check();
        g.add((s * g.elements_[i]).canonical());
        if (g.elements_.size() > cutoff) throw OrderOverflow(cutoff);
      }
    }
    g.build_table();
    return g;
  }

  std::size_t order() const { return elements_.size(); }
  const std::vector<ProjAutomorphism<K>>& elements() const { return elements_; }
  const ProjAutomorphism<K>& element(std::size_t i) const { return elements_[i]; }
  const std::vector<ProjAutomorphism<K>>& generators() const { return generators_; }
  std::size_t identity_index() const { return 0; }

  std::optional<std::size_t> index_of(const ProjAutomorphism<K>& g) const {
    auto it = index_.find(g.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t product(std::size_t i, std::size_t j) const { return table_[i][j]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::size_t inverse(std::size_t i) const { return inverses_[i]; }
  std::size_t power(std::size_t i, std::uint64_t e) const {
    std::size_t r = 0;
    for (std::uint64_t k = 0; k < e; ++k) r = table_[r][i];
    return r;
  }
  std::size_t element_order(std::size_t i) const {
    std::size_t k = 1;
    for (std::size_t r = i; r != 0; r = table_[r][i]) ++k;
    return k;
  }

  bool is_abelian() const {
    for (std::size_t i = 0; i < order(); ++i) {
      for (std::size_t j = 0; j < order(); ++j) {
        if (table_[i][j] != table_[j][i]) return false;
      }
    }
    return true;
  }
  bool is_cyclic() const {
    for (std::size_t i = 0; i < order(); ++i) {
      if (element_order(i) == order()) return true;
    }
    return false;
  }

  std::vector<std::vector<std::size_t>> conjugacy_classes() const {
    std::vector<int> cls(order(), -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t g = 0; g < order(); ++g) {
      if (cls[g] >= 0) continue;
      std::vector<std::size_t> c;
      for (std::size_t h = 0; h < order(); ++h) {
        const std::size_t conj = table_[table_[h][g]][inverses_[h]];
        if (cls[conj] < 0) {
          cls[conj] = static_cast<int>(out.size());
          c.push_back(conj);
        }
      }
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    return out;
  }

  std::vector<std::size_t> involutions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < order(); ++i) {
      if (element_order(i) == 2) out.push_back(i);
    }
    return out;
  }

  /// Associativity and two-sided inverses, checked on every triple.
  bool table_is_group() const {
    for (std::size_t a = 0; a < order(); ++a) {
      if (table_[a][inverses_[a]] != 0 || table_[inverses_[a]][a] != 0) return false;
      for (std::size_t b = 0; b < order(); ++b) {
        for (std::size_t c = 0; c < order(); ++c) {
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) return false;
        }
      }
    }
    return true;
  }

 private:
  void add(ProjAutomorphism<K> g) {
    const std::string k = g.key();
    if (index_.count(k)) return;
    index_.emplace(k, elements_.size());
    elements_.push_back(std::move(g));
  }

  void build_table() {
    const std::size_t n = order();
    table_.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto idx = index_of(elements_[i] * elements_[j]);
        if (!idx) throw std::logic_error("group closure is not closed");
        table_[i][j] = *idx;
      }
    }
    inverses_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (table_[i][j] == 0) inverses_[i] = j;
      }
    }
  }

  std::vector<ProjAutomorphism<K>> generators_;
  std::vector<ProjAutomorphism<K>> elements_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverses_;
};

namespace detail {

template <class K>
void require_matching_blocks(const ProjAutomorphism<K>& g, const RingPtr& ring) {
  const auto sizes = g.sizes();
  const auto& blocks = ring->blocks();
  bool ok = sizes.size() == blocks.size();
  for (std::size_t b = 0; ok && b < blocks.size(); ++b) ok = static_cast<int>(blocks[b].size()) == sizes[b];
  if (!ok) throw ShapeMismatch("automorphism does not match the grading blocks of " + ring->to_string());
}

/// Linear forms (sum_k M_jk v_k) over the variables of `block`.
template <class K>
Polynomial<K> linear_image(const RingPtr& ring, const Matrix<K>& m, Eigen::Index row, const std::vector<int>& block) {
  std::vector<Term<K>> terms;
  for (Eigen::Index k = 0; k < m.cols(); ++k) {
    if (!m(row, k).is_zero()) terms.push_back({Monomial::variable(block[static_cast<std::size_t>(k)]), m(row, k)});
  }
  return Polynomial<K>::from_terms(ring, std::move(terms));
}

}  // namespace detail

/// f composed with the linear substitution of g.
template <class K>
Polynomial<K> act_on_polynomial(const ProjAutomorphism<K>& g, const Polynomial<K>& f,
                                ActionConvention convention = ActionConvention::matrix) {
  const RingPtr& ring = f.ring();
  detail::require_matching_blocks(g, ring);
  const ProjAutomorphism<K> h = convention == ActionConvention::matrix ? g : g.inverse();
  const auto& blocks = ring->blocks();
  std::vector<Polynomial<K>> images(static_cast<std::size_t>(ring->nvars()), Polynomial<K>(ring));
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::size_t source = h.swap() ? 1 - b : b;
    for (std::size_t j = 0; j < blocks[b].size(); ++j) {
      images[static_cast<std::size_t>(blocks[b][j])] =
          detail::linear_image(ring, h.blocks()[b], static_cast<Eigen::Index>(j), blocks[source]);
    }
  }
  return f.substitute_all(ring, images);
}

/// Every transformed generator lies in I.
template <class K>
bool is_ideal_invariant(const Ideal<K>& I, const ProjAutomorphism<K>& g,
                        ActionConvention convention = ActionConvention::matrix) {
  for (const auto& f : I.generators()) {
    if (!I.contains(act_on_polynomial(g, f, convention))) return false;
  }
  return true;
}

template <class K>
struct FixedComponent {
  std::string label;
  /// Generators of the component's ideal: linear forms, plus 2x2 minors for
  /// incidence conditions.
  std::vector<Polynomial<K>> equations;
};

template <class K>
struct FixedLocusDecomposition {
  std::vector<FixedComponent<K>> components;
};

namespace detail {

/// Projective order m of g, and the scalar lambda of each block with
/// g^m = lambda * identity.
template <class K>
std::pair<std::uint64_t, std::vector<K>> projective_order(const ProjAutomorphism<K>& g, std::uint64_t cutoff = 4096) {
  ProjAutomorphism<K> p = g;
  for (std::uint64_t m = 1; m <= cutoff; ++m) {
    if (is_projectively_trivial(p)) {
      std::vector<K> lambdas;
      for (const auto& b : p.blocks()) lambdas.push_back(b(0, 0));
      return {m, lambdas};
    }
    p = p * g;
  }
  throw std::domain_error("automorphism does not have finite projective order");
}

/// Eigenspaces of a finite-order matrix (m, lambda) as column bases.  All
/// eigenvalues must lie in the field.
template <class K>
std::vector<std::pair<K, Matrix<K>>> eigenspaces(const Matrix<K>& a, std::uint64_t m, const K& lambda) {
  const K one = unit_like(lambda);
  // Eigenvalues are roots of x^m - lambda.
  univariate::Poly<K> p(m + 1, one * K(0));
  p[0] = -lambda;
  p[m] = one;
  std::vector<std::pair<K, Matrix<K>>> out;
  Eigen::Index total = 0;
  for (const K& mu : univariate::roots(p)) {
    Matrix<K> shifted = a;
    for (Eigen::Index i = 0; i < a.rows(); ++i) shifted(i, i) -= mu;
    Matrix<K> ker = kernel(shifted, one);
    if (ker.cols() == 0) continue;
    total += ker.cols();
    out.emplace_back(mu, std::move(ker));
  }
  if (total != a.rows()) {
    throw EigenvalueOutsideField("eigenvalues of the automorphism are not all in " + one.descriptor().to_string());
  }
  return out;
}

/// Linear forms over `block` vanishing exactly on the span of the columns.
template <class K>
std::vector<Polynomial<K>> forms_vanishing_on(const RingPtr& ring, const Matrix<K>& span, const std::vector<int>& block,
                                              const K& one) {
  const Matrix<K> t = span.transpose();
  const Matrix<K> ann = kernel(t, one);
  std::vector<Polynomial<K>> out;
  for (Eigen::Index c = 0; c < ann.cols(); ++c) {
    std::vector<Term<K>> terms;
    for (Eigen::Index i = 0; i < ann.rows(); ++i) {
      if (!ann(i, c).is_zero()) terms.push_back({Monomial::variable(block[static_cast<std::size_t>(i)]), ann(i, c)});
    }
    out.push_back(Polynomial<K>::from_terms(ring, std::move(terms)).monic());
  }
  return out;
}

template <class K>
std::string scalar_label(const K& k) {
  return k.to_string();
}

}  // namespace detail

/// Fixed points of g as a union of linear (or incidence) components.
template <class K>
FixedLocusDecomposition<K> fixed_locus(const ProjAutomorphism<K>& g, const RingPtr& ring) {
  detail::require_matching_blocks(g, ring);
  const auto& blocks = ring->blocks();
  const K one = g.one();
  FixedLocusDecomposition<K> out;

  if (g.swap()) {
    // (x, y) = (A y, B x) projectively: x is an eigenvector of AB and y ~ B x.
    const Matrix<K>& a = g.blocks()[0];
    const Matrix<K>& b = g.blocks()[1];
    const ProjAutomorphism<K> ab(Matrix<K>(a * b));
    const auto [m, lambdas] = detail::projective_order(ab);
    for (const auto& [mu, space] : detail::eigenspaces<K>(ab.blocks()[0], m, lambdas[0])) {
      FixedComponent<K> c;
      c.label = "x in E(" + detail::scalar_label(mu) + ") of AB, y ~ Bx";
      c.equations = detail::forms_vanishing_on(ring, space, blocks[0], one);
      std::vector<Polynomial<K>> bx;
      for (Eigen::Index j = 0; j < b.rows(); ++j) bx.push_back(detail::linear_image(ring, b, j, blocks[0]));
      for (std::size_t i = 0; i < blocks[1].size(); ++i) {
        for (std::size_t j = i + 1; j < blocks[1].size(); ++j) {
          const auto yi = Polynomial<K>::variable(ring, blocks[1][i]);
          const auto yj = Polynomial<K>::variable(ring, blocks[1][j]);
          auto minor = yi * bx[j] - yj * bx[i];
          if (!minor.is_zero()) c.equations.push_back(minor);
        }
      }
      out.components.push_back(std::move(c));
    }
    return out;
  }

  // Factor-wise: a fixed point is an eigenvector in every factor.
  std::vector<std::vector<FixedComponent<K>>> per_block;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const Matrix<K>& mat = g.blocks()[bi];
    std::vector<FixedComponent<K>> comps;
    if (g.is_diagonal()) {
      // Coordinates grouped by equal diagonal entries.
      std::vector<int> cls(static_cast<std::size_t>(mat.rows()), -1);
      int next = 0;
      for (Eigen::Index i = 0; i < mat.rows(); ++i) {
        if (cls[static_cast<std::size_t>(i)] >= 0) continue;
        for (Eigen::Index j = i; j < mat.rows(); ++j) {
          if (cls[static_cast<std::size_t>(j)] < 0 && mat(j, j) == mat(i, i)) cls[static_cast<std::size_t>(j)] = next;
        }
        ++next;
      }
      for (int c = 0; c < next; ++c) {
        FixedComponent<K> comp;
        std::string kept;
        for (Eigen::Index i = 0; i < mat.rows(); ++i) {
          const int v = blocks[bi][static_cast<std::size_t>(i)];
          if (cls[static_cast<std::size_t>(i)] == c) {
            kept += (kept.empty() ? "" : ",") + ring->variable(v);
          } else {
            comp.equations.push_back(Polynomial<K>::variable(ring, v));
          }
        }
        comp.label = "span(" + kept + ")";
        comps.push_back(std::move(comp));
      }
    } else {
      const ProjAutomorphism<K> single(mat);
      const auto [m, lambdas] = detail::projective_order(single);
      for (const auto& [mu, space] : detail::eigenspaces<K>(mat, m, lambdas[0])) {
        FixedComponent<K> comp;
        comp.label = "E(" + detail::scalar_label(mu) + ")";
        comp.equations = detail::forms_vanishing_on(ring, space, blocks[bi], one);
        comps.push_back(std::move(comp));
      }
    }
    per_block.push_back(std::move(comps));
  }
  std::vector<FixedComponent<K>> acc{FixedComponent<K>{}};
  for (const auto& comps : per_block) {
    std::vector<FixedComponent<K>> next;
    for (const auto& a : acc) {
      for (const auto& c : comps) {
        FixedComponent<K> m;
        m.label = a.label.empty() ? c.label : a.label + " x " + c.label;
        m.equations = a.equations;
        m.equations.insert(m.equations.end(), c.equations.begin(), c.equations.end());
        next.push_back(std::move(m));
      }
    }
    acc = std::move(next);
  }
  out.components = std::move(acc);
  return out;
}

struct FixedPointReport {
  /// One entry per fixed-locus component, in the order of fixed_locus.
  std::vector<std::pair<std::string, HilbertData>> components;
  /// Largest dimension, with the degrees of the components of that dimension
  /// summed.
  HilbertData total;
};

/// Dimension and degree of V(I) meeting each component of the fixed locus.
template <class K>
FixedPointReport fixed_points_on_variety(const ProjAutomorphism<K>& g, const Ideal<K>& I) {
  FixedPointReport out;
  out.total.nvars = I.ring()->nvars();
  for (const auto& comp : fixed_locus(g, I.ring()).components) {
    const HilbertData hd = projective_dimension_degree(I.with(comp.equations));
    out.components.emplace_back(comp.label, hd);
    if (hd.dimension > out.total.dimension) {
      out.total.dimension = hd.dimension;
      out.total.degree = hd.degree;
    } else if (hd.dimension == out.total.dimension && hd.dimension >= 0) {
      out.total.degree += hd.degree;
    }
  }
  return out;
}

enum class FreenessReason { identity, checked, cyclic_shortcut, square_shortcut, power_shortcut };

inline const char* to_string(FreenessReason r) {
  switch (r) {
    case FreenessReason::identity:
      return "identity";
    case FreenessReason::checked:
      return "checked";
    case FreenessReason::cyclic_shortcut:
      return "cyclic-shortcut";
    case FreenessReason::square_shortcut:
      return "square-shortcut";
    case FreenessReason::power_shortcut:
      return "power-shortcut";
  }
  return "?";
}

struct FreenessEntry {
  std::size_t element = 0;
  std::size_t element_order = 1;
  FreenessReason reason = FreenessReason::identity;
  /// For shortcuts: the certified element that a power of this one equals.
  std::optional<std::size_t> witness;
  std::uint64_t exponent = 0;
  /// For checked elements: labels of the fixed-locus components shown empty.
  std::vector<std::string> components;
};

struct FreenessCertificate {
  std::vector<FreenessEntry> entries;
};

class NotFree : public std::runtime_error {
 public:
  NotFree(std::size_t element, const std::string& component)
      : std::runtime_error("element " + std::to_string(element) + " has fixed points on " + component),
        element(element),
        component(component) {}
  std::size_t element;
  std::string component;
};

namespace detail {

inline std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return p;
  }
  return n;
}

}  // namespace detail

/// Certifies that no nontrivial element has a fixed point on V(I).  Only
/// elements of prime order are checked directly, one per cyclic subgroup; any
/// other element has a power among them, and Fix(h) is inside Fix(h^k).
/// Throws NotInvariant when I is not preserved, NotFree with a witness when a
/// fixed point exists.
template <class K>
FreenessCertificate verify_free_action(const FiniteMatrixGroup<K>& group, const Ideal<K>& I) {
  for (const auto& s : group.generators()) {
    if (!is_ideal_invariant(I, s)) throw NotInvariant("ideal is not invariant under " + s.to_string());
  }
  FreenessCertificate cert;
  const std::size_t n = group.order();
  const bool cyclic = group.is_cyclic();
  std::vector<bool> certified(n, false);
  std::vector<FreenessEntry> entries(n);
  std::vector<std::size_t> by_order(n);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](std::size_t a, std::size_t b) { return group.element_order(a) < group.element_order(b); });
  for (std::size_t idx : by_order) {
    FreenessEntry e;
    e.element = idx;
    e.element_order = group.element_order(idx);
    if (idx == group.identity_index()) {
      entries[idx] = e;
      continue;
    }
    const std::uint64_t ord = e.element_order;
    const std::uint64_t p = detail::smallest_prime_factor(ord);
    if (ord != p) {
      const std::size_t sq = group.power(idx, 2);
      if (sq != group.identity_index() && certified[sq] && !cyclic) {
        e.reason = FreenessReason::square_shortcut;
        e.witness = sq;
        e.exponent = 2;
      } else {
        e.reason = cyclic ? FreenessReason::cyclic_shortcut : FreenessReason::power_shortcut;
        e.exponent = ord / p;
        e.witness = group.power(idx, e.exponent);
      }
    } else {
      // Prime order: reuse a certified generator of the same subgroup.
      for (std::uint64_t k = 2; k < p && !e.witness; ++k) {
        const std::size_t other = group.power(idx, k);
        if (certified[other]) {
          e.reason = cyclic ? FreenessReason::cyclic_shortcut : FreenessReason::power_shortcut;
          e.witness = other;
          // idx is a power of `other`; record that exponent.
          for (std::uint64_t j = 1; j < p; ++j) {
            if (group.power(other, j) == idx) e.exponent = j;
          }
        }
      }
      if (!e.witness) {
        e.reason = FreenessReason::checked;
        for (const auto& comp : fixed_locus(group.element(idx), I.ring()).components) {
          Deadline::check();
          if (!is_projectively_empty(I.with(comp.equations))) throw NotFree(idx, comp.label);
          e.components.push_back(comp.label);
        }
      }
    }
    certified[idx] = true;
    entries[idx] = e;
  }
  cert.entries = std::move(entries);
  return cert;
}

}  // namespace campedelli
