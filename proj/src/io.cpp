#include "gkz/io.hpp"

#include <sstream>

namespace gkz::io {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int need_int(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_integer()) throw InvalidInput(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

bool need_bool(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_boolean()) throw InvalidInput(std::string("field \"") + key + "\" must be a boolean");
  return v.get<bool>();
}

const Json& need_array(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_array()) throw InvalidInput(std::string("field \"") + key + "\" must be an array");
  return v;
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw InvalidInput("rational must be a string or an integer");
}

Json vectors_to_json(const std::vector<VectorS>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

std::vector<VectorS> vectors_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of vectors");
  std::vector<VectorS> out;
  for (const auto& v : j) out.push_back(vector_from_json(v));
  return out;
}

Json columns_to_json(const MatrixS& m) {
  Json out = Json::array();
  for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(to_json(VectorS(m.col(j))));
  return out;
}

MatrixS columns_from_json(const Json& j, int rows) {
  if (!j.is_array() || j.empty()) throw InvalidInput("columns must be a nonempty array");
  MatrixS m(rows, static_cast<Eigen::Index>(j.size()));
  for (std::size_t c = 0; c < j.size(); ++c) {
    const VectorS v = vector_from_json(j[c]);
    if (v.size() != rows) throw InvalidInput("column " + std::to_string(c + 1) + " has the wrong length");
    m.col(static_cast<Eigen::Index>(c)) = v;
  }
  return m;
}

Json profile_to_json(const StabilizerProfile& p) {
  return {{"affine_rank", p.affine_rank}, {"torus_rank", p.torus_rank}, {"lattice_rank", p.lattice_rank}};
}

StabilizerProfile profile_from_json(const Json& j) {
  return {need_int(j, "affine_rank"), need_int(j, "torus_rank"), need_int(j, "lattice_rank")};
}

WallType wall_type_from(const std::string& s) {
  if (s == "gale-boundary") return WallType::GaleBoundary;
  if (s == "divisorial") return WallType::Divisorial;
  if (s == "flipping") return WallType::Flipping;
  throw InvalidInput("unknown wall type \"" + s + "\"");
}

}  // namespace

Json to_json(const Scalar& x) {
  Json j{{"a", x.rational_part().to_string()}};
  if (!x.is_rational()) {
    j["b"] = x.radical_part().to_string();
    j["m"] = x.radicand();
  }
  return j;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(Rational(j.get<long>()));
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (!j.is_object()) throw InvalidInput("scalar must be an object, a string or an integer");
  const Rational a = rational_from(need(j, "a"));
  if (!j.contains("b")) return Scalar(a);
  const Rational b = rational_from(j.at("b"));
  const Json& m = need(j, "m");
  if (!m.is_number_integer()) throw InvalidInput("radicand must be an integer");
  return Scalar(a, b, m.get<std::int64_t>());
}

Json to_json(const VectorS& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

VectorS vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("vector must be an array");
  VectorS v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = scalar_from_json(j[i]);
  return v;
}

Json indices_to_json(IndexSet s) { return Json(s.one_based()); }

IndexSet indices_from_json(const Json& j, int n) {
  if (!j.is_array()) throw InvalidInput("index list must be an array");
  IndexSet s;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InvalidInput("indices must be integers");
    const int i = e.get<int>();
    if (i < 1 || i > n) throw InvalidInput("index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
    s.insert(i - 1);
  }
  return s;
}

Json to_json(const Calibration& c) {
  return {{"d", c.d},
          {"n", c.n},
          {"m", c.field_m},
          {"columns", columns_to_json(c.h)},
          {"virtual", indices_to_json(c.virtual_set)}};
}

Calibration calibration_from_json(const Json& j) {
  const int d = need_int(j, "d");
  if (d < 1) throw InvalidCalibration("d must be positive");
  const MatrixS h = columns_from_json(need_array(j, "columns"), d);
  if (j.contains("n") && need_int(j, "n") != h.cols()) throw InvalidCalibration("n does not match the column count");
  const int n = static_cast<int>(h.cols());
  const IndexSet virt = j.contains("virtual") ? indices_from_json(j.at("virtual"), n) : IndexSet();
  Calibration c = Calibration::make(h, virt);
  if (j.contains("m") && !j.at("m").is_null()) {
    const auto m = j.at("m").get<std::int64_t>();
    if (m != c.field_m && c.field_m != 0) throw FieldMismatch("declared field does not match the entries");
  }
  return c;
}

Json to_json(const HPolytope& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices) verts.push_back({{"x", to_json(v.x)}, {"tight", indices_to_json(v.tight)}});
  return {{"d", p.d},
          {"b", to_json(p.b)},
          {"vertices", verts},
          {"bounded", p.bounded},
          {"dim", p.dim},
          {"facet_dims", p.facet_dims}};
}

HPolytope polytope_from_json(const Json& j) {
  HPolytope p;
  p.d = need_int(j, "d");
  p.b = vector_from_json(need(j, "b"));
  const int n = static_cast<int>(p.b.size());
  for (const auto& v : need_array(j, "vertices"))
    p.vertices.push_back({vector_from_json(need(v, "x")), indices_from_json(need(v, "tight"), n)});
  p.bounded = need_bool(j, "bounded");
  p.dim = need_int(j, "dim");
  p.facet_dims = need_array(j, "facet_dims").get<std::vector<int>>();
  return p;
}

Json to_json(const CombinatorialType& t) {
  Json faces = Json::array();
  for (IndexSet s : t.faces) faces.push_back(indices_to_json(s));
  return {{"n", t.n}, {"faces", faces}};
}

CombinatorialType type_from_json(const Json& j) {
  CombinatorialType t;
  t.n = need_int(j, "n");
  for (const auto& f : need_array(j, "faces")) t.faces.push_back(indices_from_json(f, t.n));
  std::sort(t.faces.begin(), t.faces.end());
  return t;
}

Json to_json(const QuantumFan& f) {
  Json cones = Json::array();
  for (IndexSet s : f.max_cones) cones.push_back(indices_to_json(s));
  Json j{{"max_cones", cones},
         {"virtual", indices_to_json(f.virtual_set)},
         {"complete", f.complete},
         {"simplicial", f.simplicial()}};
  if (f.complete) j["type"] = type_name(combinatorial_type(f), f.d());
  return j;
}

QuantumFan fan_from_json(const Json& j, const Calibration& c) {
  QuantumFan f;
  f.calibration = c;
  for (const auto& s : need_array(j, "max_cones")) f.max_cones.push_back(indices_from_json(s, c.n));
  std::sort(f.max_cones.begin(), f.max_cones.end());
  f.virtual_set = indices_from_json(need(j, "virtual"), c.n);
  f.complete = need_bool(j, "complete");
  return f;
}

Json to_json(const Wall& w) {
  Json j{{"normal", to_json(w.normal)},
         {"functional", to_json(w.functional)},
         {"type", to_string(w.type)},
         {"index", {w.index().first, w.index().second}}};
  if (w.type == WallType::Divisorial) {
    j["virtual_index"] = w.virtual_index + 1;
    j["ray_appears"] = w.ray_appears;
  } else if (w.type == WallType::Flipping) {
    j["circuit"] = {{"plus", indices_to_json(w.plus)}, {"minus", indices_to_json(w.minus)}};
  }
  return j;
}

Wall wall_from_json(const Json& j) {
  Wall w;
  w.normal = vector_from_json(need(j, "normal"));
  w.functional = vector_from_json(need(j, "functional"));
  w.type = wall_type_from(need(j, "type").get<std::string>());
  for (Eigen::Index i = 0; i < w.functional.size(); ++i) {
    if (w.functional[i].sign() > 0) w.plus.insert(static_cast<int>(i));
    if (w.functional[i].sign() < 0) w.minus.insert(static_cast<int>(i));
  }
  if (w.type == WallType::Divisorial) {
    w.virtual_index = need_int(j, "virtual_index") - 1;
    w.ray_appears = need_bool(j, "ray_appears");
  }
  if (w.type == WallType::Flipping) {
    const int n = static_cast<int>(w.functional.size());
    const Json& c = need(j, "circuit");
    if (indices_from_json(need(c, "plus"), n) != w.plus || indices_from_json(need(c, "minus"), n) != w.minus)
      throw InvalidInput("circuit does not match the wall functional");
  }
  return w;
}

Json to_json(const Chamber& ch) {
  Json ineq = Json::array();
  for (const auto& a : ch.inequalities) ineq.push_back({{"normal", to_json(a)}, {"sense", ">="}});
  Json facets = Json::array();
  for (std::size_t f = 0; f < ch.facets.size(); ++f) {
    Json w = to_json(ch.facets[f]);
    w["rays"] = vectors_to_json(ch.facet_rays[f]);
    facets.push_back(w);
  }
  return {{"inequalities", ineq},
          {"rays", vectors_to_json(ch.rays)},
          {"rep_point", to_json(ch.rep_point)},
          {"rep_comb", to_json(ch.fan)},
          {"facets", facets}};
}

Chamber chamber_from_json(const Json& j, const Calibration& c) {
  Chamber ch;
  for (const auto& a : need_array(j, "inequalities")) {
    if (need(a, "sense") != ">=") throw InvalidInput("chamber inequalities use the sense \">=\"");
    ch.inequalities.push_back(vector_from_json(need(a, "normal")));
  }
  ch.rays = vectors_from_json(need(j, "rays"));
  ch.rep_point = vector_from_json(need(j, "rep_point"));
  ch.fan = fan_from_json(need(j, "rep_comb"), c);
  for (const auto& w : need_array(j, "facets")) {
    ch.facets.push_back(wall_from_json(w));
    ch.facet_rays.push_back(vectors_from_json(need(w, "rays")));
  }
  if (ch.facets.size() != ch.inequalities.size()) throw InvalidInput("facet and inequality counts differ");
  return ch;
}

Json to_json(const SecondaryFan& sf) {
  Json chambers = Json::array();
  for (std::size_t i = 0; i < sf.chambers.size(); ++i) {
    Json c = to_json(sf.chambers[i]);
    c["id"] = i + 1;
    Json adj = Json::array();
    for (int a : sf.adjacency[i]) adj.push_back(a < 0 ? Json(nullptr) : Json(a + 1));
    c["adjacent"] = adj;
    chambers.push_back(c);
  }
  return {{"chambers", chambers}, {"count", sf.chambers.size()}};
}

SecondaryFan secondary_from_json(const Json& j, const Calibration& c) {
  SecondaryFan sf;
  for (const auto& cj : need_array(j, "chambers")) {
    sf.chambers.push_back(chamber_from_json(cj, c));
    std::vector<int> adj;
    for (const auto& a : need_array(cj, "adjacent")) adj.push_back(a.is_null() ? -1 : a.get<int>() - 1);
    if (adj.size() != sf.chambers.back().facets.size()) throw InvalidInput("adjacency does not match the facets");
    sf.adjacency.push_back(adj);
  }
  return sf;
}

Json to_json(const AffinePath& p) { return {{"beta", to_json(p.beta)}, {"alpha", to_json(p.alpha)}}; }

AffinePath path_from_json(const Json& j) {
  AffinePath p{vector_from_json(need(j, "beta")), vector_from_json(need(j, "alpha"))};
  if (p.beta.size() != p.alpha.size()) throw InvalidInput("beta and alpha differ in length");
  return p;
}

Json to_json(const WallCrossingReport& r) {
  Json j{{"crossed", r.crossed}, {"before", to_json(r.before)}, {"after", to_json(r.after)}};
  if (!r.crossed) return j;
  j["t"] = to_json(r.t);
  j["eps"] = to_json(r.eps);
  j["on"] = to_json(r.on);
  j["wall"] = to_json(r.wall);
  Json checks = Json::array();
  for (const auto& [name, ok] : r.checks) checks.push_back({{"name", name}, {"passed", ok}});
  j["checks"] = checks;
  j["ok"] = r.ok();
  return j;
}

WallCrossingReport crossing_from_json(const Json& j, const Calibration& c) {
  WallCrossingReport r;
  r.crossed = need_bool(j, "crossed");
  r.before = fan_from_json(need(j, "before"), c);
  r.after = fan_from_json(need(j, "after"), c);
  if (!r.crossed) {
    r.on = r.before;
    return r;
  }
  r.t = scalar_from_json(need(j, "t"));
  r.eps = scalar_from_json(need(j, "eps"));
  r.on = fan_from_json(need(j, "on"), c);
  r.wall = wall_from_json(need(j, "wall"));
  for (const auto& k : need_array(j, "checks")) r.checks.emplace_back(need(k, "name").get<std::string>(), need_bool(k, "passed"));
  return r;
}

Json to_json(const CobordismReport& r) {
  Json params = Json::array(), segs = Json::array(), cross = Json::array();
  for (const auto& t : r.parameters) params.push_back(to_json(t));
  for (const auto& f : r.segments) segs.push_back(to_json(f));
  for (const auto& x : r.crossings) cross.push_back(to_json(x));
  return {{"parameters", params},
          {"segments", segs},
          {"crossings", cross},
          {"index_convention", "(|I+|, |I-|) of the wall circuit, I+ read on the side left at increasing t"}};
}

CobordismReport cobordism_from_json(const Json& j, const Calibration& c) {
  CobordismReport r;
  for (const auto& t : need_array(j, "parameters")) r.parameters.push_back(scalar_from_json(t));
  for (const auto& f : need_array(j, "segments")) r.segments.push_back(fan_from_json(f, c));
  for (const auto& x : need_array(j, "crossings")) r.crossings.push_back(crossing_from_json(x, c));
  return r;
}

Json to_json(const ProjectiveCertificate& cert) {
  return {{"indices", indices_to_json(cert.indices)}, {"lambda", to_json(cert.lambda)}};
}

ProjectiveCertificate certificate_from_json(const Json& j, int n) {
  return {indices_from_json(need(j, "indices"), n), vector_from_json(need(j, "lambda"))};
}

Json to_json(const ProjectivePath& p) {
  Json j{{"found", p.found}, {"note", p.note}, {"start_chi", to_json(p.start_chi)}};
  j["certificate"] = p.certificate ? to_json(*p.certificate) : Json(nullptr);
  if (p.calibration_segment)
    j["calibration_segment"] = {{"target", columns_to_json(p.calibration_segment->target)},
                                {"steps", p.calibration_segment->steps},
                                {"validated", p.calibration_segment->validated}};
  else
    j["calibration_segment"] = nullptr;
  if (p.found) {
    j["target_calibration"] = to_json(p.target_calibration);
    j["target_b"] = to_json(p.target_b);
    j["path"] = to_json(p.path);
    j["cobordism"] = to_json(p.cobordism);
  }
  return j;
}

ProjectivePath projective_path_from_json(const Json& j, const Calibration& c) {
  ProjectivePath p;
  p.found = need_bool(j, "found");
  p.note = need(j, "note").get<std::string>();
  p.start_chi = vector_from_json(need(j, "start_chi"));
  p.target_calibration = c;
  if (!need(j, "certificate").is_null()) p.certificate = certificate_from_json(j.at("certificate"), c.n);
  if (!need(j, "calibration_segment").is_null()) {
    const Json& s = j.at("calibration_segment");
    p.calibration_segment = CalibrationSegment{columns_from_json(need(s, "target"), c.d), need_int(s, "steps"),
                                               need_bool(s, "validated")};
  }
  if (p.found) {
    p.target_calibration = calibration_from_json(need(j, "target_calibration"));
    p.target_b = vector_from_json(need(j, "target_b"));
    p.path = path_from_json(need(j, "path"));
    p.cobordism = cobordism_from_json(need(j, "cobordism"), p.target_calibration);
  }
  return p;
}

Json to_json(const StabilizerReport& r) {
  return {{"profile_old", profile_to_json(r.profile_old)},
          {"profile_new", profile_to_json(r.profile_new)},
          {"isomorphic", r.isomorphic}};
}

StabilizerReport stabilizers_from_json(const Json& j) {
  return {profile_from_json(need(j, "profile_old")), profile_from_json(need(j, "profile_new")),
          need_bool(j, "isomorphic")};
}

AffinePath parse_path(const std::string& s) {
  const auto semi = s.find(';');
  if (semi == std::string::npos) throw InvalidInput("path must look like \"beta;alpha\"");
  auto parse_list = [](const std::string& part) {
    std::vector<Scalar> xs;
    std::stringstream ss(part);
    std::string item;
    while (std::getline(ss, item, ',')) xs.push_back(Scalar::parse(item));
    VectorS v(static_cast<Eigen::Index>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i) v[static_cast<Eigen::Index>(i)] = xs[i];
    return v;
  };
  AffinePath p{parse_list(s.substr(0, semi)), parse_list(s.substr(semi + 1))};
  if (p.beta.size() != p.alpha.size() || p.beta.size() == 0) throw InvalidInput("beta and alpha must have equal nonzero length");
  return p;
}

}  // namespace gkz::io
