#pragma once

#include <vector>

#include "gkz/linalg.hpp"

namespace gkz::cone {

/// v scaled so its first nonzero entry has absolute value 1.
VectorS normalize_direction(const VectorS& v);

/// ∃w with <w,g> > 0 for every column g.
bool strongly_convex(const MatrixS& gens);

/// v ∈ Cone(columns of gens).
bool contains(const MatrixS& gens, const VectorS& v);

/// The columns J of h form a face of Cone(h_sigma): some w vanishes exactly on
/// J and is positive on sigma \ J.
bool is_face(const MatrixS& h, IndexSet sigma, IndexSet j);

/// Inward normals a (<a,g> >= 0 on the cone) of the facets of a full-dimensional cone.
std::vector<VectorS> facet_normals(const MatrixS& gens);

/// Extreme rays of the pointed cone {x : <a,x> >= 0 for all a}.
std::vector<VectorS> extreme_rays(const std::vector<VectorS>& normals, int dim);

/// Columns as vectors, normalized and deduplicated.
std::vector<VectorS> distinct_directions(const MatrixS& gens);

/// Cone(a) ⊆ Cone(b) as ray lists.
bool cone_subset(const std::vector<VectorS>& a, const std::vector<VectorS>& b);

}  // namespace gkz::cone
