#pragma once

// Exact Gauss-Jordan elimination on Eigen matrices over the exact fields.

#include <stdexcept>
#include <string>
#include <vector>

#include "campedelli/eigen_support.hpp"

namespace campedelli {

class SingularMatrix : public std::runtime_error {
 public:
  SingularMatrix() : std::runtime_error("matrix is singular") {}
};

template <class K>
struct RowEchelon {
  Matrix<K> reduced;
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form.
template <class K>
RowEchelon<K> rref(Matrix<K> m) {
  RowEchelon<K> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    const K inv = m(row, col).inverse();
    for (Eigen::Index k = col; k < m.cols(); ++k) m(row, k) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const K f = m(r, col);
      for (Eigen::Index k = col; k < m.cols(); ++k) m(r, k) -= f * m(row, k);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class K>
Eigen::Index rank(const Matrix<K>& m) {
  return static_cast<Eigen::Index>(rref(m).pivots.size());
}

/// Columns form a basis of the right kernel {v : m v = 0}.  `one` fixes the
/// field of the basis entries when m has no rows.
template <class K>
Matrix<K> kernel(const Matrix<K>& m, const K& one) {
  const RowEchelon<K> e = rref(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  const K zero = one * K(0);
  Matrix<K> basis = Matrix<K>::Constant(n, n - static_cast<Eigen::Index>(e.pivots.size()), zero);
  Eigen::Index c = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, c) = one;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], c) = -e.reduced(static_cast<Eigen::Index>(r), free);
    ++c;
  }
  return basis;
}

template <class K>
Matrix<K> kernel(const Matrix<K>& m) {
  if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("kernel of an empty matrix needs an explicit unit");
  return kernel(m, unit_like(m(0, 0)));
}

template <class K>
Matrix<K> identity(Eigen::Index n, const K& one) {
  Matrix<K> id = Matrix<K>::Constant(n, n, one * K(0));
  for (Eigen::Index i = 0; i < n; ++i) id(i, i) = one;
  return id;
}

template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return m;
  Matrix<K> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = identity<K>(n, unit_like(m(0, 0)));
  const RowEchelon<K> e = rref(aug);
  if (static_cast<Eigen::Index>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] >= n) {
    throw SingularMatrix();
  }
  return e.reduced.rightCols(n);
}

template <class K>
K determinant(Matrix<K> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  K det = n > 0 ? unit_like(m(0, 0)) : K(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return det * K(0);
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    const K inv = m(col, col).inverse();
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const K f = m(r, col) * inv;
      for (Eigen::Index k = col; k < n; ++k) m(r, k) -= f * m(col, k);
    }
  }
  return det;
}

/// Solve m x = b; nullopt-like failure reported by exception when inconsistent.
template <class K>
Vector<K> solve(const Matrix<K>& m, const Vector<K>& b) {
  Matrix<K> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  const RowEchelon<K> e = rref(aug);
  const K zero = unit_like(b(0)) * K(0);
  Vector<K> x = Vector<K>::Constant(m.cols(), zero);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) throw std::domain_error("inconsistent linear system");
    x(e.pivots[r]) = e.reduced(static_cast<Eigen::Index>(r), m.cols());
  }
  return x;
}

template <class K>
bool is_zero_matrix(const Matrix<K>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

template <class K>
bool matrices_equal(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) == b(i, j))) return false;
    }
  }
  return true;
}

}  // namespace campedelli
