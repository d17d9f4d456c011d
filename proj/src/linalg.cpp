#include "gkz/linalg.hpp"

#include <string>

#include "gkz/polytope.hpp"

namespace gkz {

std::int64_t field_of(const MatrixS& m) {
  std::int64_t f = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const std::int64_t r = m(i, j).radicand();
      if (r == 0) continue;
      if (f != 0 && f != r)
        throw FieldMismatch("entries from Q(sqrt(" + std::to_string(f) + ")) and Q(sqrt(" +
                            std::to_string(r) + "))");
      f = r;
    }
  return f;
}

int integer_kernel_rank(const MatrixS& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Matrix<Rational> stacked(2 * rows, cols);
  field_of(m);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      stacked(i, j) = m(i, j).rational_part();
      stacked(rows + i, j) = m(i, j).radical_part();
    }
  return static_cast<int>(cols) - rank(stacked);
}

VectorS min_norm_preimage(const MatrixS& k, const VectorS& chi) {
  if (k.cols() != chi.size()) throw InvalidInput("character has the wrong length");
  if (k.cols() == 0) return VectorS::Zero(k.rows());
  const MatrixS kt = k.transpose();
  const MatrixS gram = mul(kt, k);
  const auto y = solve_unique(gram, chi);
  if (!y) throw InvalidInput("Gale matrix is rank deficient");
  return mul(k, *y);
}

Calibration Calibration::make(MatrixS h, IndexSet virtual_set) {
  Calibration c;
  c.d = static_cast<int>(h.rows());
  c.n = static_cast<int>(h.cols());
  if (c.d < 1) throw InvalidCalibration("ambient dimension must be positive");
  if (c.n > 24) throw Unsupported("at most 24 generators are supported");
  if (c.n < c.d) throw InvalidCalibration("fewer generators than the ambient dimension");
  c.field_m = field_of(h);
  for (int i = 0; i < c.n; ++i)
    if (is_zero(h.col(i)))
      throw InvalidCalibration("generator " + std::to_string(i + 1) + " is zero");
  if (rank(h) != c.d) throw InvalidCalibration("h is not surjective (rank < d)");
  if (!virtual_set.subset_of(IndexSet::range(c.n)))
    throw InvalidCalibration("virtual index out of range");
  c.h = std::move(h);
  c.virtual_set = virtual_set;
  c.bounded = recession_trivial(c);
  mpz_class subsets;
  mpz_bin_uiui(subsets.get_mpz_t(), c.n, c.d);
  if (subsets <= 20000) c.table = std::make_shared<const VertexTable>(make_vertex_table(c));
  return c;
}

bool Calibration::is_geometric() const {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MatrixS pair(d, 2);
      pair << h.col(i), h.col(j);
      if (rank(pair) < 2) return false;
    }
  return true;
}

bool Calibration::is_standard() const {
  for (int i = 0; i < d; ++i)
    for (int r = 0; r < d; ++r)
      if (h(r, i) != Scalar(r == i ? 1 : 0)) return false;
  const int v = virtual_set.size();
  return virtual_set == (IndexSet::range(n) - IndexSet::range(n - v));
}

MatrixS gale_transform(const Calibration& c) { return kernel_basis(c.h); }

std::vector<VectorS> gale_generators(const MatrixS& k) {
  std::vector<VectorS> g;
  g.reserve(static_cast<std::size_t>(k.rows()));
  for (Eigen::Index i = 0; i < k.rows(); ++i) g.emplace_back(k.row(i).transpose());
  return g;
}

}  // namespace gkz
