#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkz/secondary.hpp"

namespace gkz {

/// 0 = sum lambda_i h(e_i) over |I| = d + 1 with lambda > 0 and sum lambda = 1.
struct ProjectiveCertificate {
  IndexSet indices;
  VectorS lambda;  // aligned with indices.elements()
};

/// First (d+1)-subset in lexicographic order with strictly positive weights.
std::optional<ProjectiveCertificate> projective_certificate(const Calibration& c);

/// Certificate on a given (d+1)-subset, if its weights are positive.
std::optional<ProjectiveCertificate> certificate_for(const Calibration& c, IndexSet indices);

/// True when the weights solve the system exactly and are positive.
bool verify_certificate(const Calibration& c, const ProjectiveCertificate& cert);

/// b_i = 1 on I, and b_j = 1 + max over simplex vertices of -<v, h(e_j)> off I.
VectorS simplex_parameter(const Calibration& c, const ProjectiveCertificate& cert);

/// Entrywise perturbations of h(e_i), i in I, below this radius keep the
/// certificate's weights positive.
Scalar openness_radius(const Calibration& c, const ProjectiveCertificate& cert);

enum class Dim2Class { ProjectiveLinkable, ExceptionalN4, Invalid };
std::string to_string(Dim2Class k);

/// d = 2 and standard; Invalid when the cyclic type C_n is not admissible.
Dim2Class classify_dim2(const Calibration& c);

/// The cyclic fan on the generators in angular order (d = 2).
QuantumFan angular_fan(const Calibration& c);

struct CalibrationSegment {
  MatrixS target;
  int steps = 0;
  bool validated = false;
};

struct ProjectivePath {
  bool found = false;
  std::string note;
  std::optional<CalibrationSegment> calibration_segment;
  std::optional<ProjectiveCertificate> certificate;
  Calibration target_calibration;
  VectorS start_chi;
  VectorS target_b;
  AffinePath path;
  CobordismReport cobordism;
};

/// Optional calibration segment to a certified calibration, then an affine
/// chi-path into the simplex chamber. NotAdmissible for inadmissible (c, b).
ProjectivePath path_to_projective(const Calibration& c, const VectorS& b, int steps = 8);

}  // namespace gkz
