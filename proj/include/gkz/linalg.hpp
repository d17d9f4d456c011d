#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gkz/errors.hpp"
#include "gkz/index_set.hpp"
#include "gkz/scalar.hpp"

namespace gkz {

template <typename T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using MatrixS = Matrix<Scalar>;
using VectorS = Vector<Scalar>;

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <typename T>
T dot(const Vector<T>& x, const Vector<T>& y) {
  T s(0);
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!is_zero(x[i]) && !is_zero(y[i])) s += x[i] * y[i];
  return s;
}

/// Product with zero skipping; Eigen's blocked kernels copy exact scalars heavily.
template <typename T>
Matrix<T> mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw InvalidInput("dimension mismatch in product");
  Matrix<T> c = Matrix<T>::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <typename T>
Vector<T> mul(const Matrix<T>& a, const Vector<T>& x) {
  if (a.cols() != x.size()) throw InvalidInput("dimension mismatch in product");
  Vector<T> y = Vector<T>::Zero(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      if (!is_zero(a(i, k)) && !is_zero(x[k])) y[i] += a(i, k) * x[k];
  return y;
}

/// x^T A
template <typename T>
Vector<T> mul_transpose(const Matrix<T>& a, const Vector<T>& x) {
  if (a.rows() != x.size()) throw InvalidInput("dimension mismatch in product");
  Vector<T> y = Vector<T>::Zero(a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index k = 0; k < a.rows(); ++k)
      if (!is_zero(a(k, j)) && !is_zero(x[k])) y[j] += a(k, j) * x[k];
  return y;
}

template <typename T>
struct Echelon {
  Matrix<T> r;
  std::vector<int> pivots;  // pivot column of each nonzero row
  T det_factor{1};          // product of pivots and row-swap signs (square input)
};

/// Reduced row echelon form by exact elimination; the pivot is the first
/// nonzero entry of the leftmost remaining column.
template <typename T>
Echelon<T> rref(Matrix<T> m) {
  Echelon<T> e;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index p = row;
    while (p < rows && is_zero(m(p, col))) ++p;
    if (p == rows) continue;
    if (p != row) {
      m.row(p).swap(m.row(row));
      e.det_factor = -e.det_factor;
    }
    const T piv = m(row, col);
    e.det_factor *= piv;
    const T inv = T(1) / piv;
    for (Eigen::Index j = col; j < cols; ++j)
      if (!is_zero(m(row, j))) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const T f = m(i, col);
      for (Eigen::Index j = col; j < cols; ++j)
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    e.pivots.push_back(static_cast<int>(col));
    ++row;
  }
  e.r = std::move(m);
  return e;
}

template <typename T>
int rank(const Matrix<T>& m) {
  return static_cast<int>(rref(m).pivots.size());
}

template <typename T>
T determinant(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  if (m.rows() == 0) return T(1);
  auto e = rref(m);
  if (static_cast<Eigen::Index>(e.pivots.size()) < m.rows()) return T(0);
  return e.det_factor;
}

/// Kernel basis as columns; one column per free variable, in increasing order.
template <typename T>
Matrix<T> kernel_basis(const Matrix<T>& m) {
  const auto e = rref(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<int> free_vars;
  for (Eigen::Index j = 0; j < n; ++j)
    if (!is_pivot[j]) free_vars.push_back(static_cast<int>(j));
  Matrix<T> k = Matrix<T>::Zero(n, static_cast<Eigen::Index>(free_vars.size()));
  for (std::size_t c = 0; c < free_vars.size(); ++c) {
    const int f = free_vars[c];
    k(f, c) = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (!is_zero(e.r(r, f))) k(e.pivots[r], c) = -e.r(r, f);
  }
  return k;
}

template <typename T>
struct Solution {
  Vector<T> x;       // one particular solution
  Matrix<T> kernel;  // kernel basis of the coefficient matrix
};

/// All solutions of m x = rhs, or nullopt when inconsistent.
template <typename T>
std::optional<Solution<T>> solve(const Matrix<T>& m, const Vector<T>& rhs) {
  if (m.rows() != rhs.size()) throw InvalidInput("dimension mismatch in solve");
  Matrix<T> aug(m.rows(), m.cols() + 1);
  aug << m, rhs;
  const auto e = rref(aug);
  const Eigen::Index n = m.cols();
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Solution<T> s;
  s.x = Vector<T>::Zero(n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.x[e.pivots[r]] = e.r(r, n);
  s.kernel = kernel_basis(m);
  return s;
}

/// Unique solution of a square nonsingular system, nullopt if singular.
template <typename T>
std::optional<Vector<T>> solve_unique(const Matrix<T>& m, const Vector<T>& rhs) {
  if (m.rows() != m.cols()) throw InvalidInput("solve_unique needs a square system");
  auto s = solve(m, rhs);
  if (!s || s->kernel.cols() > 0) return std::nullopt;
  return s->x;
}

template <typename T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw InvalidInput("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  Matrix<T> aug(n, 2 * n);
  aug << m, Matrix<T>::Identity(n, n);
  const auto e = rref(aug);
  if (static_cast<Eigen::Index>(e.pivots.size()) < n || (n > 0 && e.pivots[n - 1] >= n))
    return std::nullopt;
  return Matrix<T>(e.r.rightCols(n));
}

/// Columns of `m` selected by `cols`, in increasing index order.
template <typename T>
Matrix<T> select_columns(const Matrix<T>& m, IndexSet cols) {
  const auto idx = cols.elements();
  Matrix<T> out(m.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t c = 0; c < idx.size(); ++c) out.col(c) = m.col(idx[c]);
  return out;
}

template <typename T>
Vector<T> select_entries(const Vector<T>& v, IndexSet idx) {
  const auto e = idx.elements();
  Vector<T> out(static_cast<Eigen::Index>(e.size()));
  for (std::size_t i = 0; i < e.size(); ++i) out[i] = v[e[i]];
  return out;
}

/// Common radicand of the entries (0 when all rational); FieldMismatch on conflict.
std::int64_t field_of(const MatrixS& m);

/// Rank of {x in Z^cols : M x = 0}.
int integer_kernel_rank(const MatrixS& m);

/// b = k (k^T k)^{-1} chi.
VectorS min_norm_preimage(const MatrixS& k, const VectorS& chi);

struct VertexTable;

/// The data (h, virtual set) of a calibration h : Z^n -> R^d.
struct Calibration {
  int d = 0;
  int n = 0;
  MatrixS h;
  IndexSet virtual_set;
  std::int64_t field_m = 0;
  /// Every P_b is bounded (the columns positively span R^d).
  bool bounded = false;
  /// Cached basis inverses; null when there are too many d-subsets.
  std::shared_ptr<const VertexTable> table;

  /// Validates rank d, nonzero columns and a single quadratic field.
  static Calibration make(MatrixS h, IndexSet virtual_set = {});

  VectorS column(int i) const { return h.col(i); }
  /// No two columns are collinear.
  bool is_geometric() const;
  /// h(e_i) = e_i for i <= d and the virtual set is a final segment.
  bool is_standard() const;
};

/// Kernel basis k (n x (n-d)) of h in reduced-echelon normalization.
MatrixS gale_transform(const Calibration& c);

/// Images k^T e_i as a list of vectors in R^{n-d}.
std::vector<VectorS> gale_generators(const MatrixS& k);

}  // namespace gkz
