#pragma once

#include <json.hpp>

#include "gkz/fan.hpp"
#include "gkz/polytope.hpp"
#include "gkz/projective.hpp"
#include "gkz/secondary.hpp"

/// JSON encodings. Scalars are {"a": "p/q", "b": "r/s", "m": k} with b and m
/// omitted for rationals; indices are 1-based.
namespace gkz::io {

using Json = nlohmann::json;

Json to_json(const Scalar& x);
/// Accepts the object form, a string such as "1 - sqrt(2)", or an integer.
Scalar scalar_from_json(const Json& j);

Json to_json(const VectorS& v);
VectorS vector_from_json(const Json& j);

Json indices_to_json(IndexSet s);
IndexSet indices_from_json(const Json& j, int n);

Json to_json(const Calibration& c);
Calibration calibration_from_json(const Json& j);

Json to_json(const HPolytope& p);
HPolytope polytope_from_json(const Json& j);

Json to_json(const CombinatorialType& t);
CombinatorialType type_from_json(const Json& j);

Json to_json(const QuantumFan& f);
QuantumFan fan_from_json(const Json& j, const Calibration& c);

Json to_json(const Wall& w);
Wall wall_from_json(const Json& j);

Json to_json(const Chamber& ch);
Chamber chamber_from_json(const Json& j, const Calibration& c);

Json to_json(const SecondaryFan& sf);
SecondaryFan secondary_from_json(const Json& j, const Calibration& c);

Json to_json(const AffinePath& p);
AffinePath path_from_json(const Json& j);

Json to_json(const WallCrossingReport& r);
WallCrossingReport crossing_from_json(const Json& j, const Calibration& c);

Json to_json(const CobordismReport& r);
CobordismReport cobordism_from_json(const Json& j, const Calibration& c);

Json to_json(const ProjectiveCertificate& cert);
ProjectiveCertificate certificate_from_json(const Json& j, int n);

Json to_json(const ProjectivePath& p);
ProjectivePath projective_path_from_json(const Json& j, const Calibration& c);

Json to_json(const StabilizerReport& r);
StabilizerReport stabilizers_from_json(const Json& j);

/// Parse "b1,b2,...;a1,a2,..." into a path.
AffinePath parse_path(const std::string& s);

}  // namespace gkz::io
