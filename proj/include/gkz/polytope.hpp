#pragma once

#include <vector>

#include "gkz/linalg.hpp"

namespace gkz {

struct Vertex {
  VectorS x;
  IndexSet tight;  // every constraint active at x (merged over bases)
};

/// Precomputed (h_J^T)^{-1} for every nonsingular d-subset J.
struct VertexTable {
  std::vector<IndexSet> bases;
  std::vector<MatrixS> inv_t;
};

VertexTable make_vertex_table(const Calibration& c);

/// Recession cone {x : <x,h(e_i)> >= 0 for all i} is {0}.
bool recession_trivial(const Calibration& c);

/// P_b = {x in R^d : <x,h(e_i)> >= -b_i}, with derived data.
struct HPolytope {
  int d = 0;
  VectorS b;
  std::vector<Vertex> vertices;
  bool bounded = false;
  int dim = -1;
  std::vector<int> facet_dims;  // per constraint; -1 when the face is empty

  bool full() const { return dim == d; }
};

/// Vertices with merged tight sets, in order of first discovery over
/// lexicographically sorted bases.
std::vector<Vertex> vertices(const Calibration& c, const VectorS& b);

/// Affine dimension of P_b, -1 when empty.
int dimension(const Calibration& c, const VectorS& b);

/// Affine dimension of P_b computed by exact LP only (implicit equalities).
int dimension_lp(const Calibration& c, const VectorS& b);

/// Affine dimension of P_b cut by <x,h(e_i)> = -b_i, -1 when empty.
int facet_dim(const Calibration& c, const VectorS& b, int i);

/// facet_dim by exact LP only.
int facet_dim_lp(const Calibration& c, const VectorS& b, int i);

/// Every vertex lies on exactly d facets of P_b.
bool is_simple(const Calibration& c, const VectorS& b);

HPolytope analyze(const Calibration& c, const VectorS& b);

/// Index set of facet-defining constraints (facet_dim = d-1).
IndexSet facet_set(const HPolytope& p);

struct Face {
  IndexSet tight;     // constraints active on the whole face
  IndexSet vertices;  // positions in HPolytope::vertices
  int dim = -1;
};

/// Nonempty faces of a bounded polytope, including P_b itself.
std::vector<Face> faces(const HPolytope& p);

/// Affine dimension of a finite point set, -1 when empty.
int affine_dimension(const std::vector<VectorS>& pts);

}  // namespace gkz
