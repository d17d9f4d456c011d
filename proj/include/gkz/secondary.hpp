#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkz/fan.hpp"
#include "gkz/linalg.hpp"

namespace gkz {

/// Gale transform and the derived cone data in chi-space R^{n-d}.
struct GaleData {
  Calibration calibration;
  MatrixS k;                     // n x (n-d)
  MatrixS k_left_inverse;        // (k^T k)^{-1} k^T
  int r = 0;                     // n - d
  std::vector<VectorS> generators;  // k^T e_i
  std::vector<VectorS> facet_normals;  // inward normals of Cone(k^T)

  /// Linearly independent J with |J| <= r - 1, ready for membership tests.
  struct SmallCone {
    IndexSet j;
    MatrixS left_inverse;  // |J| x r, recovers coefficients on span(g_J)
    MatrixS complement;    // rows span span(g_J)^perp
  };
  std::vector<SmallCone> small_cones;
  /// Normals of hyperplanes spanned by independent (r-1)-subsets.
  std::vector<VectorS> arrangement;
  std::vector<IndexSet> arrangement_sets;

  static GaleData make(const Calibration& c);
};

/// chi in the closed cone Cone(k^T e_1, ..., k^T e_n).
bool in_gale_cone(const GaleData& g, const VectorS& chi);
/// chi in the interior of the Gale cone.
bool is_admissible(const GaleData& g, const VectorS& chi);
bool is_admissible(const VectorS& chi, const Calibration& c);

/// Lower-dimensional Gale cones containing chi (empty iff chi is generic).
std::vector<IndexSet> degenerate_cones(const GaleData& g, const VectorS& chi);
bool is_generic(const GaleData& g, const VectorS& chi);
bool is_generic(const VectorS& chi, const Calibration& c);

enum class WallType { GaleBoundary, Divisorial, Flipping };
std::string to_string(WallType t);

/// A facet of a chamber. Orientation: the chamber is {chi : <normal, chi> >= 0}.
struct Wall {
  VectorS normal;             // in chi-space
  VectorS functional;         // the same inequality on b-space, in ker(h)
  WallType type = WallType::GaleBoundary;
  IndexSet plus, minus;       // signed circuit (I+, I-) read from this chamber
  int virtual_index = -1;     // divisorial: the generator that appears or vanishes
  bool ray_appears = false;   // divisorial: crossing turns virtual_index into a ray

  /// Cobordism index (|I+|, |I-|) when leaving through this wall.
  std::pair<int, int> index() const { return {plus.size(), minus.size()}; }
};

struct Chamber {
  std::vector<VectorS> inequalities;  // facet normals, sorted
  std::vector<VectorS> rays;          // normalized extreme rays
  QuantumFan fan;                     // representative combinatorics (Delta, I)
  VectorS rep_point;
  std::vector<Wall> facets;           // aligned with inequalities
  std::vector<std::vector<VectorS>> facet_rays;  // extreme rays on each facet

  bool contains(const VectorS& chi) const;
  bool interior(const VectorS& chi) const;
};

/// NotAdmissible outside the open Gale cone, OnWall at non-generic chi.
Chamber chamber_of(const GaleData& g, const VectorS& chi);
Chamber chamber_of(const VectorS& chi, const Calibration& c);

/// Facet functionals split into walls free of virtual coordinates and exactly
/// one facet per virtual generator i, supported on i among the virtual indices.
bool product_split(const Chamber& ch);

/// Wall data for one facet of a chamber.
Wall classify_wall(const Chamber& ch, std::size_t facet);

struct SecondaryFan {
  std::vector<Chamber> chambers;
  /// (chamber, facet) -> neighbouring chamber, -1 on the Gale boundary.
  std::vector<std::vector<int>> adjacency;
};

/// Breadth-first search over chambers; n - d <= 3.
SecondaryFan enumerate_chambers(const GaleData& g);
SecondaryFan enumerate_chambers(const Calibration& c);

/// chi(t) = k^T (beta + alpha t), t in [-1, 1].
struct AffinePath {
  VectorS beta;
  VectorS alpha;
};

struct WallCrossingReport {
  bool crossed = false;
  Scalar t;                 // crossing parameter
  Scalar eps;               // evaluation offset on each side
  QuantumFan before, on, after;
  Wall wall;                // read from the chamber before the wall
  std::vector<std::pair<std::string, bool>> checks;
  bool ok() const;
};

struct CobordismReport {
  std::vector<Scalar> parameters;
  std::vector<QuantumFan> segments;  // one per open interval between crossings
  std::vector<WallCrossingReport> crossings;
};

/// Exactly one wall between the endpoints; no-crossing report for none.
WallCrossingReport cross_wall(const AffinePath& path, const GaleData& g);
WallCrossingReport cross_wall(const AffinePath& path, const Calibration& c);

CobordismReport cobordism_from_path(const AffinePath& path, const GaleData& g);
CobordismReport cobordism_from_path(const AffinePath& path, const Calibration& c);

/// chi at parameter t.
VectorS path_point(const GaleData& g, const AffinePath& p, const Scalar& t);

/// Normal fan at a character through its minimum-norm preimage.
QuantumFan fan_at(const GaleData& g, const VectorS& chi);

/// Admissible generic characters drawn as positive integer combinations of
/// the generators, alternating dense weights and random r-subsets.
std::vector<VectorS> sample_characters(const GaleData& g, int count, std::uint64_t seed);

/// Distinct (Delta, I) classes among sample_characters(g, count, seed).
std::size_t sampled_class_count(const GaleData& g, int count, std::uint64_t seed);

}  // namespace gkz
