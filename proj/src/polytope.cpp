#include "gkz/polytope.hpp"

#include <algorithm>

#include "gkz/lp.hpp"

namespace gkz {

namespace {

using Cons = lp::Constraint<Scalar>;

std::vector<Cons> halfspaces(const Calibration& c, const VectorS& b) {
  if (b.size() != c.n) throw InvalidInput("parameter b has the wrong length");
  std::vector<Cons> cs;
  cs.reserve(c.n);
  for (int i = 0; i < c.n; ++i) cs.push_back({c.h.col(i), -b[i], lp::Sense::Geq});
  return cs;
}

// d - rank of the implicit equalities, or -1 when infeasible.
int lp_dimension(const Calibration& c, const VectorS& b, int eq_index) {
  auto cs = halfspaces(c, b);
  if (eq_index >= 0) cs[eq_index].sense = lp::Sense::Eq;
  if (!lp::feasible(cs, c.d)) return -1;
  auto strict = cs;
  for (int i = 0; i < c.n; ++i)
    if (i != eq_index) strict[i].sense = lp::Sense::Gt;
  IndexSet eq;
  if (eq_index >= 0) eq.insert(eq_index);
  if (!lp::feasible(strict, c.d)) {
    for (int i = 0; i < c.n; ++i) {
      if (i == eq_index) continue;
      auto probe = cs;
      probe[i].sense = lp::Sense::Gt;
      if (!lp::feasible(probe, c.d)) eq.insert(i);
    }
  }
  if (eq.empty()) return c.d;
  return c.d - rank(select_columns(c.h, eq));
}

int vertex_face_dim(const std::vector<Vertex>& vs, int i) {
  std::vector<VectorS> pts;
  for (const auto& v : vs)
    if (v.tight.contains(i)) pts.push_back(v.x);
  return affine_dimension(pts);
}

}  // namespace

VertexTable make_vertex_table(const Calibration& c) {
  VertexTable t;
  for (IndexSet j : subsets_of_size(c.n, c.d)) {
    auto inv = inverse(MatrixS(select_columns(c.h, j).transpose()));
    if (!inv) continue;
    t.bases.push_back(j);
    t.inv_t.push_back(std::move(*inv));
  }
  return t;
}

bool recession_trivial(const Calibration& c) {
  if (c.n == c.d) return false;
  const MatrixS k = gale_transform(c);
  std::vector<Cons> cs;
  for (int i = 0; i < c.n; ++i) cs.push_back({VectorS(k.row(i).transpose()), Scalar(0), lp::Sense::Gt});
  return lp::feasible(cs, k.cols()).has_value();
}

int affine_dimension(const std::vector<VectorS>& pts) {
  if (pts.empty()) return -1;
  if (pts.size() == 1) return 0;
  MatrixS diffs(pts[0].size(), static_cast<Eigen::Index>(pts.size() - 1));
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.col(i - 1) = pts[i] - pts[0];
  return rank(diffs);
}

std::vector<Vertex> vertices(const Calibration& c, const VectorS& b) {
  if (b.size() != c.n) throw InvalidInput("parameter b has the wrong length");
  std::vector<Vertex> out;
  auto consider = [&](const VectorS& x) {
    Vertex v{x, {}};
    for (int i = 0; i < c.n; ++i) {
      const int s = (dot(VectorS(c.h.col(i)), x) + b[i]).sign();
      if (s < 0) return;
      if (s == 0) v.tight.insert(i);
    }
    out.push_back(std::move(v));
  };
  auto known = [&](IndexSet j) {
    return std::any_of(out.begin(), out.end(), [&](const Vertex& v) { return j.subset_of(v.tight); });
  };
  if (c.table) {
    for (std::size_t t = 0; t < c.table->bases.size(); ++t) {
      const IndexSet j = c.table->bases[t];
      if (known(j)) continue;
      consider(mul(c.table->inv_t[t], VectorS(-select_entries(b, j))));
    }
    return out;
  }
  for (IndexSet j : subsets_of_size(c.n, c.d)) {
    if (known(j)) continue;
    const auto x = solve_unique(MatrixS(select_columns(c.h, j).transpose()),
                                VectorS(-select_entries(b, j)));
    if (x) consider(*x);
  }
  return out;
}

int dimension(const Calibration& c, const VectorS& b) {
  if (!c.bounded) return dimension_lp(c, b);
  std::vector<VectorS> pts;
  for (auto& v : vertices(c, b)) pts.push_back(std::move(v.x));
  return affine_dimension(pts);
}

int dimension_lp(const Calibration& c, const VectorS& b) { return lp_dimension(c, b, -1); }

int facet_dim(const Calibration& c, const VectorS& b, int i) {
  if (i < 0 || i >= c.n) throw InvalidInput("constraint index out of range");
  if (!c.bounded) return lp_dimension(c, b, i);
  return vertex_face_dim(vertices(c, b), i);
}

int facet_dim_lp(const Calibration& c, const VectorS& b, int i) {
  if (i < 0 || i >= c.n) throw InvalidInput("constraint index out of range");
  return lp_dimension(c, b, i);
}

HPolytope analyze(const Calibration& c, const VectorS& b) {
  HPolytope p;
  p.d = c.d;
  p.b = b;
  p.bounded = c.bounded;
  p.vertices = vertices(c, b);
  p.facet_dims.resize(c.n);
  if (c.bounded) {
    std::vector<VectorS> pts;
    for (const auto& v : p.vertices) pts.push_back(v.x);
    p.dim = affine_dimension(pts);
    for (int i = 0; i < c.n; ++i) p.facet_dims[i] = vertex_face_dim(p.vertices, i);
  } else {
    p.dim = lp_dimension(c, b, -1);
    for (int i = 0; i < c.n; ++i) p.facet_dims[i] = lp_dimension(c, b, i);
  }
  return p;
}

IndexSet facet_set(const HPolytope& p) {
  IndexSet f;
  for (std::size_t i = 0; i < p.facet_dims.size(); ++i)
    if (p.facet_dims[i] == p.d - 1) f.insert(static_cast<int>(i));
  return f;
}

bool is_simple(const Calibration& c, const VectorS& b) {
  const HPolytope p = analyze(c, b);
  if (!p.full()) return false;
  const IndexSet f = facet_set(p);
  return std::all_of(p.vertices.begin(), p.vertices.end(),
                     [&](const Vertex& v) { return (v.tight & f).size() == c.d; });
}

std::vector<Face> faces(const HPolytope& p) {
  if (!p.bounded) throw Unsupported("face enumeration needs a bounded polytope");
  if (p.vertices.size() > 32) throw Unsupported("too many vertices for face enumeration");
  std::vector<IndexSet> sets;
  for (const auto& v : p.vertices) sets.push_back(v.tight);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const IndexSet s = sets[i] & sets[j];
      if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(s);
    }
  std::vector<Face> out;
  for (IndexSet t : sets) {
    Face f;
    f.tight = IndexSet::range(static_cast<int>(p.facet_dims.size()));
    std::vector<VectorS> pts;
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
      if (t.subset_of(p.vertices[v].tight)) {
        f.vertices.insert(static_cast<int>(v));
        f.tight = f.tight & p.vertices[v].tight;
        pts.push_back(p.vertices[v].x);
      }
    if (f.vertices.empty()) continue;
    if (std::any_of(out.begin(), out.end(), [&](const Face& g) { return g.vertices == f.vertices; }))
      continue;
    f.dim = affine_dimension(pts);
    out.push_back(f);
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.vertices.bits() < b.vertices.bits();
  });
  return out;
}

}  // namespace gkz
