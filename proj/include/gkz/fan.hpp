#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkz/linalg.hpp"
#include "gkz/polytope.hpp"

namespace gkz {

/// A fan over a calibration: maximal cones as generator index sets.
struct QuantumFan {
  Calibration calibration;
  std::vector<IndexSet> max_cones;  // sorted lexicographically
  IndexSet virtual_set;
  bool complete = false;

  /// Indices appearing in some maximal cone.
  IndexSet rays() const;
  bool simplicial() const;
  int d() const { return calibration.d; }
  int n() const { return calibration.n; }
};

/// Same maximal cones and virtual set.
bool same_combinatorics(const QuantumFan& a, const QuantumFan& b);

/// Face poset as a sorted family of index sets containing the empty set.
struct CombinatorialType {
  int n = 0;
  std::vector<IndexSet> faces;

  std::vector<IndexSet> maximal() const;
  bool contains(IndexSet s) const;
  friend bool operator==(const CombinatorialType& a, const CombinatorialType& b) {
    return a.n == b.n && a.faces == b.faces;
  }
};

/// Per maximal cone the linear form m_sigma of a piecewise linear function.
struct SupportFunction {
  std::vector<IndexSet> cones;
  std::vector<VectorS> forms;
  bool convex = false;
  bool strict = false;
};

/// The triple (a, t, z) of the group C^a x (C*)^t x Z^z.
struct StabilizerProfile {
  int affine_rank = 0;
  int torus_rank = 0;
  int lattice_rank = 0;
  friend bool operator==(const StabilizerProfile&, const StabilizerProfile&) = default;
};

struct StabilizerReport {
  StabilizerProfile profile_old;
  StabilizerProfile profile_new;
  bool isomorphic = false;
};

/// Cones with explicit rays, for refinements that create new rays.
struct GeometricFan {
  int d = 0;
  std::vector<VectorS> rays;         // normalized directions
  std::vector<IndexSet> max_cones;   // indices into rays
};

struct FanIsomorphism {
  MatrixS L;                // d x d with L h(e_i) = h'(e_sigma(i))
  std::vector<int> sigma;   // generator map, -1 on virtual indices
  std::vector<int> tau;     // virtual map, -1 on generators
};

struct FanValidity {
  bool strongly_convex = false;  // every maximal cone
  bool covers_generators = false;
  bool intersections_are_faces = false;
  bool complete = false;
  bool valid() const { return strongly_convex && covers_generators && intersections_are_faces; }
};

/// Both readings of admissibility of a combinatorial type over a calibration.
struct AdmissibilityReport {
  bool cones_strongly_convex = false;
  bool forms_fan = false;
};

/// Normal fan of a bounded full-dimensional P_b; NotAdmissible otherwise.
QuantumFan normal_fan(const Calibration& c, const VectorS& b);
QuantumFan normal_fan(const Calibration& c, const HPolytope& p);

CombinatorialType combinatorial_type(const QuantumFan& f);

/// Faces of Cone(h_sigma) as index sets, including the empty set and sigma.
std::vector<IndexSet> cone_faces(const MatrixS& h, IndexSet sigma);

/// "S_d", "C_n" or "other".
std::string type_name(const CombinatorialType& t, int d);

QuantumFan star_subdivision(const QuantumFan& f, int i);

GeometricFan as_geometric(const QuantumFan& f);

/// Full-dimensional intersections of maximal cones; d <= 3.
GeometricFan common_refinement(const GeometricFan& a, const GeometricFan& b);
GeometricFan common_refinement(const QuantumFan& a, const QuantumFan& b);

/// Every cone of `fine` lies in a cone of `coarse`. For two complete fans
/// this is refinement.
bool refines(const GeometricFan& fine, const GeometricFan& coarse);

/// Every facet of every maximal cone is shared with exactly one other maximal cone.
bool is_complete(const GeometricFan& f);

/// Same rays and same maximal cones, up to ordering.
bool same_fan(const GeometricFan& a, const GeometricFan& b);

std::optional<FanIsomorphism> fans_isomorphic(const QuantumFan& a, const QuantumFan& b);

/// Permutations of {0..n-1} preserving the poset; indices outside every face are fixed.
std::vector<std::vector<int>> fan_automorphisms(const CombinatorialType& t);

/// Poset isomorphism between two types, if any (first in lexicographic order).
std::optional<std::vector<int>> types_isomorphic(const CombinatorialType& a,
                                                 const CombinatorialType& b);

/// Inclusion-maximal I satisfying condition (C); NotAdmissible when dim P_b < d.
std::vector<IndexSet> s_variety_strata(const Calibration& c, const VectorS& b);

StabilizerReport stabilizer_profiles(const Calibration& c, IndexSet i);

FanValidity validate(const QuantumFan& f);

/// The linear forms given by the vertices of P_b on the cones of f.
SupportFunction support_function(const QuantumFan& f, const VectorS& b);

/// A strictly convex support function exists (exact LP with a margin variable).
bool is_constructible(const QuantumFan& f);

AdmissibilityReport admissibility(const Calibration& c, const CombinatorialType& t);

}  // namespace gkz
