#include "gkz/cone.hpp"

#include <algorithm>

#include "gkz/lp.hpp"

namespace gkz::cone {

namespace {

using Cons = lp::Constraint<Scalar>;

void push_unique(std::vector<VectorS>& out, const VectorS& v) {
  const VectorS n = normalize_direction(v);
  if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
}

// Sign of <a,g> over all g: +1 all >= 0, -1 all <= 0, 0 mixed or all zero.
int orientation(const VectorS& a, const std::vector<VectorS>& gs) {
  bool pos = false, neg = false;
  for (const auto& g : gs) {
    const int s = dot(a, g).sign();
    pos |= s > 0;
    neg |= s < 0;
  }
  if (pos && neg) return 0;
  if (pos) return 1;
  if (neg) return -1;
  return 0;
}

}  // namespace

VectorS normalize_direction(const VectorS& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) {
      const Scalar s = Scalar(1) / abs(v[i]);
      VectorS out = v;
      for (Eigen::Index j = 0; j < v.size(); ++j)
        if (!is_zero(out[j])) out[j] *= s;
      return out;
    }
  return v;
}

bool strongly_convex(const MatrixS& gens) {
  std::vector<Cons> cs;
  for (Eigen::Index j = 0; j < gens.cols(); ++j) cs.push_back({gens.col(j), Scalar(0), lp::Sense::Gt});
  return lp::feasible(cs, gens.rows()).has_value();
}

bool contains(const MatrixS& gens, const VectorS& v) {
  if (is_zero(v)) return true;
  if (gens.cols() == 0) return false;
  // Farkas: v is outside iff some w is >= 0 on the generators and < 0 on v.
  std::vector<Cons> cs;
  for (Eigen::Index j = 0; j < gens.cols(); ++j) cs.push_back({gens.col(j), Scalar(0), lp::Sense::Geq});
  cs.push_back({-v, Scalar(0), lp::Sense::Gt});
  return !lp::feasible(cs, gens.rows()).has_value();
}

bool is_face(const MatrixS& h, IndexSet sigma, IndexSet j) {
  if (!j.subset_of(sigma)) return false;
  std::vector<Cons> cs;
  for (int i : sigma.elements())
    cs.push_back({h.col(i), Scalar(0), j.contains(i) ? lp::Sense::Eq : lp::Sense::Gt});
  return lp::feasible(cs, h.rows()).has_value();
}

std::vector<VectorS> facet_normals(const MatrixS& gens) {
  const int d = static_cast<int>(gens.rows());
  std::vector<VectorS> gs;
  for (Eigen::Index j = 0; j < gens.cols(); ++j) gs.emplace_back(gens.col(j));
  std::vector<VectorS> out;
  for (IndexSet s : subsets_of_size(static_cast<int>(gens.cols()), d - 1)) {
    const MatrixS sub = select_columns(gens, s);
    const MatrixS ker = kernel_basis(MatrixS(sub.transpose()));
    if (ker.cols() != 1) continue;
    const VectorS a = ker.col(0);
    const int o = orientation(a, gs);
    if (o != 0) push_unique(out, o > 0 ? a : VectorS(-a));
  }
  return out;
}

std::vector<VectorS> extreme_rays(const std::vector<VectorS>& normals, int dim) {
  std::vector<VectorS> out;
  const int m = static_cast<int>(normals.size());
  for (IndexSet s : subsets_of_size(m, dim - 1)) {
    MatrixS rows(dim - 1, dim);
    int r = 0;
    for (int i : s.elements()) rows.row(r++) = normals[i].transpose();
    const MatrixS ker = kernel_basis(rows);
    if (ker.cols() != 1) continue;
    const VectorS x = ker.col(0);
    bool pos = true, neg = true;
    for (const auto& a : normals) {
      const int sg = dot(a, x).sign();
      pos &= sg >= 0;
      neg &= sg <= 0;
    }
    if (pos && neg) continue;  // lineality direction
    if (pos) push_unique(out, x);
    if (neg) push_unique(out, -x);
  }
  return out;
}

std::vector<VectorS> distinct_directions(const MatrixS& gens) {
  std::vector<VectorS> out;
  for (Eigen::Index j = 0; j < gens.cols(); ++j) push_unique(out, gens.col(j));
  return out;
}

bool cone_subset(const std::vector<VectorS>& a, const std::vector<VectorS>& b) {
  if (b.empty()) return std::all_of(a.begin(), a.end(), [](const VectorS& v) { return is_zero(v); });
  MatrixS gb(b[0].size(), static_cast<Eigen::Index>(b.size()));
  for (std::size_t j = 0; j < b.size(); ++j) gb.col(j) = b[j];
  return std::all_of(a.begin(), a.end(), [&](const VectorS& v) { return contains(gb, v); });
}

}  // namespace gkz::cone
