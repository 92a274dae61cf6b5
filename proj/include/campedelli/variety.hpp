#pragma once

// Jacobians, singular schemes, tangent spaces and cones, node certificates,
// induced actions on tangent spaces, and intersections with rational curves.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "campedelli/group_actions.hpp"
#include "campedelli/ideal.hpp"
#include "campedelli/linalg.hpp"
#include "campedelli/univariate.hpp"

namespace campedelli {

class BadCodimension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PointNotOnVariety : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SmoothPoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotCertified : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PointNotFixed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateParametrization : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class K>
using PolyMatrix = std::vector<std::vector<Polynomial<K>>>;

/// Partial derivatives: one row per generator, one column per variable.
template <class K>
PolyMatrix<K> jacobian(const Ideal<K>& I) {
  PolyMatrix<K> out;
  for (const auto& f : I.generators()) {
    std::vector<Polynomial<K>> row;
    for (int v = 0; v < I.ring()->nvars(); ++v) row.push_back(f.derivative(v));
    out.push_back(std::move(row));
  }
  return out;
}

namespace detail {

template <class K>
Polynomial<K> laplace_determinant(const PolyMatrix<K>& m, const std::vector<std::size_t>& rows,
                                  const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return m[rows[0]][cols[0]];
  Polynomial<K> det(m[rows[0]][cols[0]].ring());
  std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const auto& entry = m[rows[0]][cols[j]];
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (k != j) sub.push_back(cols[k]);
    }
    const auto term = entry * laplace_determinant(m, rest, sub);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

inline void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All nonzero c x c minors, by cofactor expansion.
template <class K>
std::vector<Polynomial<K>> minors(const PolyMatrix<K>& m, std::size_t c) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  if (c == 0 || c > rows || c > cols) {
    throw BadCodimension("cannot take " + std::to_string(c) + "x" + std::to_string(c) + " minors of a " +
                         std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  }
  std::vector<std::vector<std::size_t>> rsets;
  std::vector<std::vector<std::size_t>> csets;
  std::vector<std::size_t> cur;
  detail::combinations(rows, c, 0, cur, rsets);
  detail::combinations(cols, c, 0, cur, csets);
  std::vector<Polynomial<K>> out;
  for (const auto& r : rsets) {
    for (const auto& cs : csets) {
      Deadline::check();
      auto d = detail::laplace_determinant(m, r, cs);
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  }
  return out;
}

/// I together with the c x c minors of its Jacobian.
template <class K>
Ideal<K> singular_scheme(const Ideal<K>& I, std::size_t c) {
  return I.with(minors(jacobian(I), c));
}

template <class K>
Matrix<K> evaluate_matrix(const PolyMatrix<K>& m, const std::vector<K>& point) {
  const K zero = unit_like(point.front()) * K(0);
  Matrix<K> out = Matrix<K>::Constant(static_cast<Eigen::Index>(m.size()),
                                      static_cast<Eigen::Index>(m.empty() ? 0 : m[0].size()), zero);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m[i][j].evaluate(point);
    }
  }
  return out;
}

template <class K>
void require_on_variety(const Ideal<K>& I, const std::vector<K>& point) {
  if (static_cast<int>(point.size()) != I.ring()->nvars()) throw PointNotOnVariety("point has the wrong dimension");
  bool nonzero = false;
  for (const auto& c : point) nonzero = nonzero || !c.is_zero();
  if (!nonzero) throw PointNotOnVariety("the zero vector is not a projective point");
  for (const auto& f : I.generators()) {
    if (!f.evaluate(point).is_zero()) throw PointNotOnVariety("generator " + f.to_string() + " does not vanish");
  }
}

template <class K>
struct TangentSpaceReport {
  std::vector<K> point;
  /// Projective dimension: (#variables - #factors) - rank of the Jacobian.
  int dimension = 0;
  int jacobian_rank = 0;
  /// Columns span the kernel of the Jacobian at the point (the affine cone of
  /// the projective tangent space).
  Matrix<K> kernel;
};

template <class K>
TangentSpaceReport<K> tangent_space_at(const Ideal<K>& I, const std::vector<K>& point) {
  require_on_variety(I, point);
  const Matrix<K> j = evaluate_matrix(jacobian(I), point);
  TangentSpaceReport<K> out;
  out.point = point;
  out.jacobian_rank = static_cast<int>(rank(j));
  out.dimension = I.ring()->nvars() - static_cast<int>(I.ring()->blocks().size()) - out.jacobian_rank;
  out.kernel = kernel(j, unit_like(point.front()));
  return out;
}

template <class K>
struct NodeCertificate {
  std::vector<K> point;
  /// Coordinate set to 1 in the affine chart.
  int chart = 0;
  int tangent_dimension = 0;
  /// Lowest-degree forms of a local standard basis at the point, in the chart
  /// coordinates x_j - p_j (stored in the ambient ring, chart variable absent).
  std::vector<Polynomial<K>> tangent_cone;
  /// The cone restricted to the tangent space, in coordinates s1..s3.
  Polynomial<K> quadric;
  int quadric_rank = 0;
};

namespace detail {

/// f with x_j -> x_j + p_j x_i (j != i): moves e_i to the point p (p_i = 1).
template <class K>
Polynomial<K> translate_to_point(const Polynomial<K>& f, const std::vector<K>& p, int i) {
  const RingPtr& ring = f.ring();
  std::vector<Polynomial<K>> images;
  const auto xi = Polynomial<K>::variable(ring, i);
  for (int j = 0; j < ring->nvars(); ++j) {
    auto img = Polynomial<K>::variable(ring, j);
    if (j != i && !p[static_cast<std::size_t>(j)].is_zero()) img += xi.scaled(p[static_cast<std::size_t>(j)]);
    images.push_back(std::move(img));
  }
  return f.substitute_all(ring, images);
}

/// Remove the largest power of x_i dividing f.
template <class K>
Polynomial<K> strip_variable(const Polynomial<K>& f, int i) {
  if (f.is_zero()) return f;
  std::uint16_t e = 0xFFFF;
  for (const auto& t : f.terms()) e = std::min(e, t.monomial[i]);
  if (e == 0) return f;
  std::vector<Term<K>> terms;
  const Monomial d = Monomial::variable(i, e);
  for (const auto& t : f.terms()) terms.push_back({t.monomial / d, t.coefficient});
  return Polynomial<K>::from_terms(f.ring(), std::move(terms));
}

/// Lowest-degree form of f after setting x_i = 1.
template <class K>
Polynomial<K> lowest_form_in_chart(const Polynomial<K>& f, int i) {
  std::vector<Term<K>> terms;
  for (const auto& t : f.terms()) {
    Monomial m = t.monomial;
    m.set(i, 0);
    terms.push_back({m, t.coefficient});
  }
  const auto g = Polynomial<K>::from_terms(f.ring(), std::move(terms));
  if (g.is_zero()) return g;
  std::uint32_t low = ~0U;
  for (const auto& t : g.terms()) low = std::min(low, t.monomial.degree());
  std::vector<Term<K>> lowest;
  for (const auto& t : g.terms()) {
    if (t.monomial.degree() == low) lowest.push_back(t);
  }
  return Polynomial<K>::from_terms(f.ring(), std::move(lowest));
}

/// Rank of the symmetric matrix of a quadratic form.
template <class K>
int quadric_rank(const Polynomial<K>& q, int nvars) {
  const K one = scalar_from_int<K>(q.ring()->field(), 1);
  const K two = scalar_from_int<K>(q.ring()->field(), 2);
  Matrix<K> m = Matrix<K>::Constant(nvars, nvars, one * K(0));
  for (const auto& t : q.terms()) {
    std::vector<int> vars;
    for (int v = 0; v < nvars; ++v) {
      for (int k = 0; k < t.monomial[v]; ++k) vars.push_back(v);
    }
    if (vars.size() != 2) return -1;
    if (vars[0] == vars[1]) {
      m(vars[0], vars[0]) += two * t.coefficient;
    } else {
      m(vars[0], vars[1]) += t.coefficient;
      m(vars[1], vars[0]) += t.coefficient;
    }
  }
  return static_cast<int>(rank(m));
}

}  // namespace detail

/// The tangent cone of V(I) at a point, as lowest forms in the chart
/// coordinates.  A graded order preferring the chart variable turns the
/// homogeneous generators into a local standard basis.
template <class K>
std::vector<Polynomial<K>> tangent_cone(const Ideal<K>& I, std::vector<K> point, int* chart_out = nullptr) {
  require_on_variety(I, point);
  const RingPtr& ring = I.ring();
  const int n = ring->nvars();
  int chart = 0;
  while (point[static_cast<std::size_t>(chart)].is_zero()) ++chart;
  const K inv = point[static_cast<std::size_t>(chart)].inverse();
  for (auto& c : point) c *= inv;
  if (chart_out) *chart_out = chart;
  std::vector<Polynomial<K>> moved;
  for (const auto& f : I.generators()) moved.push_back(detail::strip_variable(detail::translate_to_point(f, point, chart), chart));
  std::vector<std::int64_t> all(static_cast<std::size_t>(n), 1);
  std::vector<std::int64_t> pref(static_cast<std::size_t>(n), 0);
  pref[static_cast<std::size_t>(chart)] = 1;
  const auto order = MonomialOrder::weighted({all, pref});
  const auto gb = reduced_groebner_basis(moved, order);
  std::vector<Polynomial<K>> cone;
  for (const auto& g : gb.basis) {
    auto low = detail::lowest_form_in_chart(g.change_ring(ring), chart);
    if (!low.is_zero()) cone.push_back(std::move(low));
  }
  return cone;
}

/// Certifies an A1 singularity on a surface: tangent space of dimension 3 and
/// a tangent cone equal to one quadric of rank 3 there.
template <class K>
NodeCertificate<K> is_ordinary_double_point(const Ideal<K>& I, const std::vector<K>& point) {
  const auto ts = tangent_space_at(I, point);
  if (ts.dimension <= 2) throw SmoothPoint("tangent space has dimension " + std::to_string(ts.dimension));
  if (ts.dimension != 3) throw NotCertified("tangent space has dimension " + std::to_string(ts.dimension));
  NodeCertificate<K> cert;
  cert.point = point;
  cert.tangent_dimension = ts.dimension;
  cert.tangent_cone = tangent_cone(I, point, &cert.chart);
  const RingPtr& ring = I.ring();
  const int n = ring->nvars();
  const K one = scalar_from_int<K>(ring->field(), 1);

  // Tangent directions in the chart: the kernel of the linear parts.
  std::vector<Polynomial<K>> linear;
  for (const auto& c : cert.tangent_cone) {
    if (c.total_degree() == 1) linear.push_back(c);
  }
  Matrix<K> lin = Matrix<K>::Constant(static_cast<Eigen::Index>(linear.size()), n, one * K(0));
  for (std::size_t r = 0; r < linear.size(); ++r) {
    for (const auto& t : linear[r].terms()) {
      for (int v = 0; v < n; ++v) {
        if (t.monomial[v] == 1) lin(static_cast<Eigen::Index>(r), v) = t.coefficient;
      }
    }
  }
  // The chart variable is not a coordinate.
  Matrix<K> pin = Matrix<K>::Constant(1, n, one * K(0));
  pin(0, cert.chart) = one;
  Matrix<K> full(lin.rows() + 1, n);
  full << lin, pin;
  const Matrix<K> dirs = kernel(full, one);
  if (dirs.cols() != 3) throw NotCertified("tangent cone spans " + std::to_string(dirs.cols()) + " directions");

  const RingPtr sring = Ring::create({"s1", "s2", "s3"}, ring->field());
  std::vector<Polynomial<K>> images;
  for (int v = 0; v < n; ++v) {
    Polynomial<K> img(sring);
    for (int k = 0; k < 3; ++k) {
      if (!dirs(v, k).is_zero()) img += Polynomial<K>::variable(sring, k).scaled(dirs(v, k));
    }
    images.push_back(std::move(img));
  }
  std::vector<Polynomial<K>> restricted;
  for (const auto& c : cert.tangent_cone) {
    auto r = c.substitute_all(sring, images);
    if (!r.is_zero()) restricted.push_back(std::move(r));
  }
  if (restricted.empty()) throw NotCertified("tangent cone contains the tangent space");
  const auto gb = reduced_groebner_basis(restricted, MonomialOrder::grevlex());
  if (gb.basis.size() != 1 || gb.basis[0].total_degree() != 2 || !gb.basis[0].is_homogeneous()) {
    throw NotCertified("restricted tangent cone is not a single quadric");
  }
  cert.quadric = gb.basis[0];
  cert.quadric_rank = detail::quadric_rank(cert.quadric, 3);
  if (cert.quadric_rank != 3) throw NotCertified("quadric has rank " + std::to_string(cert.quadric_rank));
  return cert;
}

/// Matrix of the map induced by g on the projective tangent space at a fixed
/// point, in a basis of kernel / <point>.
template <class K>
Matrix<K> restrict_action_to_tangent_space(const ProjAutomorphism<K>& g, const std::vector<K>& point,
                                           const TangentSpaceReport<K>& ts) {
  if (g.blocks().size() != 1) throw ShapeMismatch("tangent restriction is implemented on a single projective space");
  const Matrix<K>& m = g.blocks()[0];
  const auto n = static_cast<Eigen::Index>(point.size());
  const K one = unit_like(point.front());
  Vector<K> p(n);
  for (Eigen::Index i = 0; i < n; ++i) p(i) = point[static_cast<std::size_t>(i)];
  const Vector<K> mp = m * p;
  // mp = mu p
  Eigen::Index lead = 0;
  while (p(lead).is_zero()) ++lead;
  const K mu = mp(lead) / p(lead);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(mp(i) == mu * p(i))) throw PointNotFixed("automorphism does not fix the point");
  }
  // Basis: p followed by kernel columns independent of it.
  std::vector<Vector<K>> basis{p};
  for (Eigen::Index c = 0; c < ts.kernel.cols(); ++c) {
    Matrix<K> trial(n, static_cast<Eigen::Index>(basis.size()) + 1);
    for (std::size_t k = 0; k < basis.size(); ++k) trial.col(static_cast<Eigen::Index>(k)) = basis[k];
    trial.col(static_cast<Eigen::Index>(basis.size())) = ts.kernel.col(c);
    if (rank(trial) == static_cast<Eigen::Index>(basis.size()) + 1) basis.push_back(ts.kernel.col(c));
  }
  const auto d = static_cast<Eigen::Index>(basis.size());
  Matrix<K> b(n, d);
  for (Eigen::Index k = 0; k < d; ++k) b.col(k) = basis[static_cast<std::size_t>(k)];
  const K inv_mu = mu.inverse();
  Matrix<K> out = Matrix<K>::Constant(d - 1, d - 1, one * K(0));
  for (Eigen::Index k = 1; k < d; ++k) {
    Vector<K> image = m * b.col(k);
    for (Eigen::Index i = 0; i < n; ++i) image(i) *= inv_mu;
    const Vector<K> coords = solve<K>(b, image);
    for (Eigen::Index r = 1; r < d; ++r) out(r - 1, k - 1) = coords(r);
  }
  return out;
}

template <class K>
struct CurveIntersection {
  bool contained = false;
  /// Degree of the common zero locus as a binary form, and whether its roots
  /// are distinct.
  int degree = 0;
  bool distinct = false;
  /// Generators after substitution, and their binary gcd.
  std::vector<Polynomial<K>> substituted;
  Polynomial<K> common;
};

namespace detail {

/// F(a, 1) as ascending coefficients, with the multiplicity of (1:0).
template <class K>
std::pair<univariate::Poly<K>, int> dehomogenize_binary(const Polynomial<K>& f) {
  const K zero = scalar_from_int<K>(f.ring()->field(), 0);
  const int d = f.total_degree();
  univariate::Poly<K> p(static_cast<std::size_t>(d + 1), zero);
  for (const auto& t : f.terms()) p[t.monomial[0]] += t.coefficient;
  univariate::trim(p);
  return {p, d - univariate::degree(p)};
}

}  // namespace detail

/// Substitutes a curve x = x(a, b) given by binary forms into the generators.
template <class K>
CurveIntersection<K> curve_substitution_count(const Ideal<K>& I, const std::vector<Polynomial<K>>& param) {
  if (static_cast<int>(param.size()) != I.ring()->nvars()) {
    throw DegenerateParametrization("parametrization needs one form per coordinate");
  }
  const RingPtr& pring = param.front().ring();
  if (pring->nvars() != 2) throw DegenerateParametrization("parametrization must use two variables");
  for (const auto& block : I.ring()->blocks()) {
    bool all_zero = true;
    for (int v : block) all_zero = all_zero && param[static_cast<std::size_t>(v)].is_zero();
    if (all_zero) throw DegenerateParametrization("coordinates of a factor vanish identically");
  }
  for (const auto& p : param) {
    if (!p.is_homogeneous()) throw DegenerateParametrization("coordinates must be binary forms");
  }
  CurveIntersection<K> out;
  std::optional<univariate::Poly<K>> g;
  std::optional<int> inf;
  for (const auto& f : I.generators()) {
    auto s = f.substitute_all(pring, param);
    out.substituted.push_back(s);
    if (s.is_zero()) continue;
    auto [p, m] = detail::dehomogenize_binary(s);
    g = g ? univariate::gcd(*g, p) : univariate::monic(p);
    inf = inf ? std::min(*inf, m) : m;
  }
  if (!g) {
    out.contained = true;
    return out;
  }
  const int finite = univariate::degree(*g);
  out.degree = finite + *inf;
  out.distinct = univariate::is_squarefree(*g) && *inf <= 1;
  // Rebuild the binary gcd: b^deg * g(a/b).
  std::vector<Term<K>> terms;
  for (std::size_t k = 0; k < g->size(); ++k) {
    if ((*g)[k].is_zero()) continue;
    terms.push_back({Monomial({static_cast<int>(k), out.degree - static_cast<int>(k)}), (*g)[k]});
  }
  out.common = Polynomial<K>::from_terms(pring, std::move(terms));
  return out;
}

/// Vanishing ideal of finitely many points of a single projective space.
template <class K>
Ideal<K> points_ideal(const RingPtr& ring, const std::vector<std::vector<K>>& points) {
  std::optional<Ideal<K>> acc;
  for (const auto& p : points) {
    std::vector<Polynomial<K>> gens;
    for (int i = 0; i < ring->nvars(); ++i) {
      for (int j = i + 1; j < ring->nvars(); ++j) {
        auto f = Polynomial<K>::variable(ring, i).scaled(p[static_cast<std::size_t>(j)]) -
                 Polynomial<K>::variable(ring, j).scaled(p[static_cast<std::size_t>(i)]);
        if (!f.is_zero()) gens.push_back(std::move(f));
      }
    }
    Ideal<K> point(ring, gens);
    acc = acc ? intersect(*acc, point) : point;
  }
  if (!acc) return Ideal<K>::unit(ring);
  return *acc;
}

/// True when V(I) lies inside the given point set: I saturated by the ideal
/// of the points is projectively empty.
template <class K>
bool supported_on_points(const Ideal<K>& I, const std::vector<std::vector<K>>& points) {
  return is_projectively_empty(saturate(I, points_ideal(I.ring(), points)));
}

}  // namespace campedelli
