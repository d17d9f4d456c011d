#include "gkz/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "gkz/io.hpp"
#include "gkz/projective.hpp"
#include "gkz/svg.hpp"

namespace gkz::cli {

namespace {

using io::Json;

struct Options {
  std::string command;
  std::string input;
  std::string output;
  std::string format = "json";
  std::string path;
  std::string kind;
  int samples = 0;
  std::uint64_t seed = 1;
};

struct Input {
  Json doc;
  Calibration calibration;
};

Input load(const Options& o) {
  if (o.input.empty()) throw InvalidInput("--input is required");
  std::ifstream f(o.input);
  if (!f) throw InvalidInput("cannot read " + o.input);
  Input in;
  try {
    in.doc = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!in.doc.is_object()) throw InvalidInput("input must be a JSON object");
  in.calibration = io::calibration_from_json(in.doc.contains("calibration") ? in.doc.at("calibration") : in.doc);
  return in;
}

VectorS field(const Input& in, const char* key, Eigen::Index size) {
  if (!in.doc.contains(key)) throw InvalidInput(std::string("input needs \"") + key + "\"");
  const VectorS v = io::vector_from_json(in.doc.at(key));
  if (v.size() != size) throw InvalidInput(std::string("\"") + key + "\" has length " + std::to_string(v.size()) +
                                           ", expected " + std::to_string(size));
  return v;
}

// chi from "chi", or k^T b from "b".
VectorS character(const Input& in, const GaleData& g) {
  if (in.doc.contains("chi")) return field(in, "chi", g.r);
  if (in.doc.contains("b")) return mul_transpose(g.k, field(in, "b", in.calibration.n));
  throw InvalidInput("input needs \"chi\" or \"b\"");
}

AffinePath path_of(const Options& o, const Input& in) {
  AffinePath p;
  if (!o.path.empty()) p = io::parse_path(o.path);
  else if (in.doc.contains("path")) p = io::path_from_json(in.doc.at("path"));
  else throw InvalidInput("a path is needed (--path or \"path\")");
  if (p.beta.size() != in.calibration.n) throw InvalidInput("path has the wrong length");
  return p;
}

svg::PlotSpec plot_spec(const Options& o, const Input& in, svg::PlotKind fallback) {
  svg::PlotSpec spec;
  spec.kind = fallback;
  if (in.doc.contains("plot")) {
    const Json& p = in.doc.at("plot");
    if (p.contains("kind")) spec.kind = svg::kind_from_string(p.at("kind").get<std::string>());
    if (p.contains("viewport")) {
      const VectorS v = io::vector_from_json(p.at("viewport"));
      if (v.size() != 4 || !v[0].is_rational() || !v[1].is_rational() || !v[2].is_rational() ||
          !v[3].is_rational())
        throw InvalidInput("viewport is [xmin, xmax, ymin, ymax] with rational entries");
      spec.xmin = v[0].rational_part();
      spec.xmax = v[1].rational_part();
      spec.ymin = v[2].rational_part();
      spec.ymax = v[3].rational_part();
    }
    if (p.contains("ray_length")) {
      const Scalar l = io::scalar_from_json(p.at("ray_length"));
      if (!l.is_rational()) throw InvalidInput("ray length must be rational");
      spec.ray_length = l.rational_part();
    }
    if (p.contains("dashed_virtual")) spec.dashed_virtual = p.at("dashed_virtual").get<bool>();
  }
  if (!o.kind.empty()) spec.kind = svg::kind_from_string(o.kind);
  spec.validate();
  return spec;
}

std::vector<VectorS> marks(const Input& in, const GaleData& g) {
  if (in.doc.contains("chi") || in.doc.contains("b")) return {character(in, g)};
  return {};
}

std::string secondary_svg(const Options& o, const Input& in, const GaleData& g, const SecondaryFan& sf) {
  return svg::plot_secondary(g, sf, marks(in, g), plot_spec(o, in, svg::PlotKind::Secondary));
}

Json samples_json(int requested, std::size_t drawn, std::size_t agree) {
  return {{"requested", requested}, {"drawn", drawn}, {"agree", agree}};
}

std::string group_string(const StabilizerProfile& p) {
  std::vector<std::string> parts;
  if (p.affine_rank) parts.push_back(p.affine_rank == 1 ? "C" : "C^" + std::to_string(p.affine_rank));
  if (p.torus_rank) parts.push_back(p.torus_rank == 1 ? "C*" : "(C*)^" + std::to_string(p.torus_rank));
  if (p.lattice_rank) parts.push_back(p.lattice_rank == 1 ? "Z" : "Z^" + std::to_string(p.lattice_rank));
  if (parts.empty()) return "1";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " x " + parts[i];
  return s;
}

// Returns the document text; JSON or SVG by command and format.
std::string execute(const Options& o) {
  const bool svg_out = o.format == "svg";
  const Input in = load(o);
  const Calibration& c = in.calibration;

  if (o.command == "gale") {
    if (svg_out) throw InvalidInput("gale has no SVG form");
    const GaleData g = GaleData::make(c);
    Json k = Json::array();
    for (Eigen::Index i = 0; i < g.k.rows(); ++i) k.push_back(io::to_json(VectorS(g.k.row(i).transpose())));
    Json gens = Json::array(), normals = Json::array();
    for (const auto& v : g.generators) gens.push_back(io::to_json(v));
    for (const auto& v : g.facet_normals) normals.push_back(io::to_json(v));
    return Json{{"calibration", io::to_json(c)}, {"r", g.r}, {"k", k}, {"generators", gens},
                {"gale_cone_facets", normals}}
        .dump(2);
  }

  if (o.command == "fan") {
    const VectorS b = field(in, "b", c.n);
    const QuantumFan f = normal_fan(c, b);
    if (svg_out) return svg::plot_fan(f, plot_spec(o, in, svg::PlotKind::Fan));
    return Json{{"fan", io::to_json(f)}, {"polytope", io::to_json(analyze(c, b))}}.dump(2);
  }

  if (o.command == "chamber") {
    const GaleData g = GaleData::make(c);
    const VectorS chi = character(in, g);
    const Chamber ch = chamber_of(g, chi);
    if (svg_out) return secondary_svg(o, in, g, enumerate_chambers(g));
    Json j{{"chi", io::to_json(chi)}, {"chamber", io::to_json(ch)}, {"product_split", product_split(ch)}};
    if (o.samples > 0) {
      // Interior points as positive combinations of the rays.
      std::mt19937_64 rng(o.seed);
      std::uniform_int_distribution<long> w(1, 1000);
      std::size_t agree = 0;
      for (int s = 0; s < o.samples; ++s) {
        VectorS p = VectorS::Zero(g.r);
        for (const auto& r : ch.rays) p += r * Scalar(Rational(w(rng)));
        agree += same_combinatorics(fan_at(g, p), ch.fan);
      }
      j["samples"] = samples_json(o.samples, o.samples, agree);
    }
    return j.dump(2);
  }

  if (o.command == "chambers") {
    const GaleData g = GaleData::make(c);
    const SecondaryFan sf = enumerate_chambers(g);
    if (svg_out) return secondary_svg(o, in, g, sf);
    Json j = io::to_json(sf);
    if (o.samples > 0) {
      const auto chis = sample_characters(g, o.samples, o.seed);
      std::set<std::pair<std::vector<IndexSet>, IndexSet>> seen;
      std::size_t agree = 0;
      for (const auto& chi : chis) {
        const QuantumFan f = fan_at(g, chi);
        seen.insert({f.max_cones, f.virtual_set});
        agree += std::any_of(sf.chambers.begin(), sf.chambers.end(), [&](const Chamber& ch) {
          return ch.interior(chi) && same_combinatorics(ch.fan, f);
        });
      }
      j["samples"] = samples_json(o.samples, chis.size(), agree);
      j["samples"]["classes"] = seen.size();
    }
    return j.dump(2);
  }

  if (o.command == "wall-cross" || o.command == "cobordism") {
    if (svg_out) throw InvalidInput(o.command + " has no SVG form");
    const GaleData g = GaleData::make(c);
    const AffinePath p = path_of(o, in);
    Json j{{"path", io::to_json(p)}};
    if (o.command == "wall-cross") j["crossing"] = io::to_json(cross_wall(p, g));
    else j["cobordism"] = io::to_json(cobordism_from_path(p, g));
    return j.dump(2);
  }

  if (o.command == "project-link") {
    if (svg_out) throw InvalidInput("project-link has no SVG form");
    Json j;
    const auto cert = projective_certificate(c);
    j["certificate"] = cert ? io::to_json(*cert) : Json(nullptr);
    if (cert) {
      j["simplex_parameter"] = io::to_json(simplex_parameter(c, *cert));
      j["openness_radius"] = io::to_json(openness_radius(c, *cert));
    }
    if (c.d == 2 && c.is_standard()) j["dim2_class"] = to_string(classify_dim2(c));
    if (in.doc.contains("b")) j["path"] = io::to_json(path_to_projective(c, field(in, "b", c.n)));
    return j.dump(2);
  }

  if (o.command == "stabilizers") {
    if (svg_out) throw InvalidInput("stabilizers has no SVG form");
    if (!in.doc.contains("cone")) throw InvalidInput("input needs \"cone\"");
    const IndexSet cone = io::indices_from_json(in.doc.at("cone"), c.n);
    const StabilizerReport r = stabilizer_profiles(c, cone);
    Json j = io::to_json(r);
    j["cone"] = io::indices_to_json(cone);
    j["group_old"] = group_string(r.profile_old);
    j["group_new"] = group_string(r.profile_new);
    return j.dump(2);
  }

  if (o.command == "plot") {
    if (o.format != "svg" && o.format != "json") throw InvalidInput("unknown format");
    const svg::PlotSpec spec = plot_spec(o, in, svg::PlotKind::Fan);
    switch (spec.kind) {
      case svg::PlotKind::Polytope: return svg::plot_polytope(c, field(in, "b", c.n), spec);
      case svg::PlotKind::Fan: return svg::plot_fan(normal_fan(c, field(in, "b", c.n)), spec);
      case svg::PlotKind::Secondary: {
        const GaleData g = GaleData::make(c);
        return svg::plot_secondary(g, enumerate_chambers(g), marks(in, g), spec);
      }
    }
  }
  throw InvalidInput("unknown command " + o.command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Quantum toric fans, secondary fans and wall crossings"};
  app.name("gkz");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--input", o.input, "JSON input with the calibration and parameters");
  app.add_option("--output", o.output, "write the result here instead of standard output");
  app.add_option("--format", o.format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
  app.add_option("--path", o.path, "affine path \"beta;alpha\"");
  app.add_option("--samples", o.samples, "oracle cross-check sample count")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "sampling seed");
  app.add_option("--kind", o.kind, "plot kind: polytope, fan or secondary");
  const std::vector<std::pair<const char*, const char*>> commands{
      {"gale", "Gale transform k of h"},
      {"fan", "normal fan of P_b"},
      {"chamber", "secondary chamber of chi (or of k^T b)"},
      {"chambers", "all chambers of the secondary fan"},
      {"wall-cross", "single wall crossing along a path"},
      {"cobordism", "every crossing along a path"},
      {"project-link", "projective certificate and a path to a simplex chamber"},
      {"stabilizers", "stabilizer profiles of a cone"},
      {"plot", "SVG of a polytope, fan or secondary fan"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  o.command = app.get_subcommands().front()->get_name();
  if (o.command == "plot") o.format = "svg";

  try {
    const std::string text = execute(o);
    if (o.output.empty()) {
      out << text;
      if (text.empty() || text.back() != '\n') out << '\n';
    } else {
      std::ofstream f(o.output);
      if (!f) throw InvalidInput("cannot write " + o.output);
      f << text;
      if (text.empty() || text.back() != '\n') f << '\n';
    }
    return 0;
  } catch (const OnWall& e) {
    err << "error: " << e.what();
    for (const auto& cone : e.cones()) {
      err << " {";
      for (std::size_t i = 0; i < cone.size(); ++i) err << (i ? "," : "") << cone[i] + 1;
      err << '}';
    }
    err << '\n';
    return e.exit_code();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace gkz::cli
