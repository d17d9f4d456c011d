#include "gkz/secondary.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "gkz/cone.hpp"
#include "gkz/lp.hpp"
#include "gkz/polytope.hpp"

namespace gkz {

namespace {

using Cons = lp::Constraint<Scalar>;

bool lex_less(const VectorS& a, const VectorS& b) {
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

bool lex_less(const std::vector<VectorS>& a, const std::vector<VectorS>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const VectorS& x, const VectorS& y) { return lex_less(x, y); });
}

std::vector<std::vector<int>> one_based(const std::vector<IndexSet>& sets) {
  std::vector<std::vector<int>> out;
  for (IndexSet s : sets) out.push_back(s.one_based());
  return out;
}

std::string describe(const VectorS& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

MatrixS left_inverse(const MatrixS& a) {
  const MatrixS at = a.transpose();
  const auto g = inverse(mul(at, a));
  if (!g) throw InvalidInput("columns are linearly dependent");
  return mul(*g, at);
}

// Coefficients of chi on the independent set J, or nullopt when chi is off span(g_J).
struct Membership {
  bool in_span = false;
  VectorS lambda;
};

Membership member(const GaleData& g, std::size_t idx, const VectorS& chi) {
  const auto& sc = g.small_cones[idx];
  Membership m;
  if (!is_zero(mul(sc.complement, chi))) return m;
  m.in_span = true;
  m.lambda = mul(sc.left_inverse, chi);
  return m;
}

bool nonnegative(const VectorS& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i].sign() < 0) return false;
  return true;
}

IndexSet positive_support(const GaleData& g, std::size_t idx, const VectorS& lambda) {
  IndexSet s;
  const auto el = g.small_cones[idx].j.elements();
  for (std::size_t t = 0; t < el.size(); ++t)
    if (lambda[static_cast<Eigen::Index>(t)].sign() > 0) s.insert(el[t]);
  return s;
}

// Slack functionals of every (vertex cone, constraint) pair pushed to chi-space.
std::vector<VectorS> slack_functionals(const GaleData& g, const QuantumFan& f) {
  const auto& c = g.calibration;
  std::vector<VectorS> out;
  for (IndexSet sigma : f.max_cones) {
    if (sigma.size() != c.d) throw OnWall("non-simplicial normal fan", {sigma.one_based()});
    const MatrixS hs = select_columns(c.h, sigma);
    const auto inv = inverse(hs);
    if (!inv) throw OnWall("degenerate maximal cone", {sigma.one_based()});
    const auto el = sigma.elements();
    for (int j = 0; j < c.n; ++j) {
      if (sigma.contains(j)) continue;
      const VectorS coef = mul(*inv, VectorS(c.h.col(j)));
      VectorS a = VectorS::Zero(c.n);
      a[j] = Scalar(1);
      for (std::size_t t = 0; t < el.size(); ++t) a[el[t]] = -coef[static_cast<Eigen::Index>(t)];
      out.push_back(mul(g.k_left_inverse, a));
    }
  }
  return out;
}

}  // namespace

GaleData GaleData::make(const Calibration& c) {
  GaleData g;
  g.calibration = c;
  g.k = gale_transform(c);
  g.r = c.n - c.d;
  g.generators = gale_generators(g.k);
  if (g.r == 0) return g;
  g.k_left_inverse = left_inverse(g.k);
  const MatrixS kt = g.k.transpose();
  g.facet_normals = cone::facet_normals(kt);
  const auto subsets = subsets_of_size(c.n, g.r - 1);
  if (subsets.size() > 200000) throw Unsupported("too many Gale subsets");
  for (IndexSet j : subsets) {
    const MatrixS gj = select_columns(kt, j);
    if (rank(gj) != g.r - 1) continue;
    SmallCone sc;
    sc.j = j;
    sc.complement = kernel_basis(MatrixS(gj.transpose())).transpose();
    sc.left_inverse = g.r == 1 ? MatrixS(0, 1) : left_inverse(gj);
    const VectorS z = cone::normalize_direction(VectorS(sc.complement.row(0).transpose()));
    auto it = std::find(g.arrangement.begin(), g.arrangement.end(), z);
    if (it == g.arrangement.end()) g.arrangement.push_back(z);
    g.small_cones.push_back(std::move(sc));
  }
  return g;
}

bool in_gale_cone(const GaleData& g, const VectorS& chi) {
  if (chi.size() != g.r) throw InvalidInput("character has the wrong length");
  return std::all_of(g.facet_normals.begin(), g.facet_normals.end(),
                     [&](const VectorS& a) { return dot(a, chi).sign() >= 0; });
}

bool is_admissible(const GaleData& g, const VectorS& chi) {
  if (chi.size() != g.r) throw InvalidInput("character has the wrong length");
  return std::all_of(g.facet_normals.begin(), g.facet_normals.end(),
                     [&](const VectorS& a) { return dot(a, chi).sign() > 0; });
}

bool is_admissible(const VectorS& chi, const Calibration& c) { return is_admissible(GaleData::make(c), chi); }

std::vector<IndexSet> degenerate_cones(const GaleData& g, const VectorS& chi) {
  if (chi.size() != g.r) throw InvalidInput("character has the wrong length");
  std::vector<IndexSet> out;
  if (g.r == 0) return out;
  for (std::size_t i = 0; i < g.small_cones.size(); ++i) {
    const auto m = member(g, i, chi);
    if (m.in_span && nonnegative(m.lambda)) out.push_back(positive_support(g, i, m.lambda));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_generic(const GaleData& g, const VectorS& chi) { return degenerate_cones(g, chi).empty(); }

bool is_generic(const VectorS& chi, const Calibration& c) { return is_generic(GaleData::make(c), chi); }

std::string to_string(WallType t) {
  switch (t) {
    case WallType::GaleBoundary: return "gale-boundary";
    case WallType::Divisorial: return "divisorial";
    case WallType::Flipping: return "flipping";
  }
  return "?";
}

bool Chamber::contains(const VectorS& chi) const {
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [&](const VectorS& a) { return dot(a, chi).sign() >= 0; });
}

bool Chamber::interior(const VectorS& chi) const {
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [&](const VectorS& a) { return dot(a, chi).sign() > 0; });
}

QuantumFan fan_at(const GaleData& g, const VectorS& chi) {
  return normal_fan(g.calibration, min_norm_preimage(g.k, chi));
}

Wall classify_wall(const Chamber& ch, std::size_t facet) {
  if (facet >= ch.facets.size()) throw InvalidInput("facet index out of range");
  Wall w;
  w.normal = ch.facets[facet].normal;
  w.functional = ch.facets[facet].functional;
  for (Eigen::Index i = 0; i < w.functional.size(); ++i) {
    const int s = w.functional[i].sign();
    if (s > 0) w.plus.insert(static_cast<int>(i));
    if (s < 0) w.minus.insert(static_cast<int>(i));
  }
  if (w.minus.size() == 0) {
    w.type = WallType::GaleBoundary;
  } else if (w.plus.size() == 1 && ch.fan.virtual_set.contains(w.plus.elements().front())) {
    w.type = WallType::Divisorial;
    w.virtual_index = w.plus.elements().front();
    w.ray_appears = true;
  } else if (w.minus.size() == 1) {
    w.type = WallType::Divisorial;
    w.virtual_index = w.minus.elements().front();
    w.ray_appears = false;
  } else {
    w.type = WallType::Flipping;
  }
  return w;
}

Chamber chamber_of(const GaleData& g, const VectorS& chi) {
  if (!g.calibration.bounded) throw NotAdmissible("P_b is unbounded for every b");
  if (!is_admissible(g, chi)) throw NotAdmissible("character " + describe(chi) + " is outside the open Gale cone");
  const auto bad = degenerate_cones(g, chi);
  if (!bad.empty()) throw OnWall("character " + describe(chi) + " is not generic", one_based(bad));

  Chamber ch;
  ch.fan = fan_at(g, chi);
  if (g.r == 0) return ch;

  // Distinct inequalities, then the irredundant ones.
  std::vector<VectorS> cand;
  for (const VectorS& y : slack_functionals(g, ch.fan)) {
    const VectorS ny = cone::normalize_direction(y);
    if (std::find(cand.begin(), cand.end(), ny) == cand.end()) cand.push_back(ny);
  }
  for (std::size_t i = 0; i < cand.size(); ++i) {
    std::vector<Cons> cs;
    for (std::size_t j = 0; j < cand.size(); ++j)
      if (j != i) cs.push_back({cand[j], Scalar(0), lp::Sense::Geq});
    cs.push_back({-cand[i], Scalar(0), lp::Sense::Gt});
    if (lp::feasible(cs, g.r)) ch.inequalities.push_back(cand[i]);
  }
  std::sort(ch.inequalities.begin(), ch.inequalities.end(),
            [](const VectorS& x, const VectorS& y) { return lex_less(x, y); });

  ch.rays = cone::extreme_rays(ch.inequalities, g.r);
  std::sort(ch.rays.begin(), ch.rays.end(), [](const VectorS& x, const VectorS& y) { return lex_less(x, y); });
  ch.rep_point = VectorS::Zero(g.r);
  for (const auto& v : ch.rays) ch.rep_point += v;

  for (const VectorS& y : ch.inequalities) {
    Wall w;
    w.normal = y;
    w.functional = mul(g.k, y);
    ch.facets.push_back(w);
    std::vector<VectorS> on;
    for (const auto& v : ch.rays)
      if (dot(y, v).is_zero()) on.push_back(v);
    ch.facet_rays.push_back(std::move(on));
  }
  for (std::size_t i = 0; i < ch.facets.size(); ++i) ch.facets[i] = classify_wall(ch, i);
  return ch;
}

bool product_split(const Chamber& ch) {
  const IndexSet virt = ch.fan.virtual_set;
  std::vector<int> per_virtual(ch.fan.n(), 0);
  for (const auto& w : ch.facets) {
    IndexSet touched;
    for (int i : virt.elements())
      if (!w.functional[i].is_zero()) touched.insert(i);
    if (touched.size() > 1) return false;
    for (int i : touched.elements()) ++per_virtual[i];
  }
  for (int i : virt.elements())
    if (per_virtual[i] != 1) return false;
  return true;
}

Chamber chamber_of(const VectorS& chi, const Calibration& c) { return chamber_of(GaleData::make(c), chi); }

namespace {

// A point strictly on the far side of facet f, off every other arrangement hyperplane.
VectorS step_across(const GaleData& g, const Chamber& ch, std::size_t f, int attempt) {
  const auto& rays = ch.facet_rays[f];
  VectorS p = VectorS::Zero(g.r);
  for (std::size_t i = 0; i < rays.size(); ++i)
    p += rays[i] * Scalar(Rational(1) + Rational(static_cast<long>(attempt) * static_cast<long>(i + 1),
                                                  static_cast<long>(7 + attempt)));
  const VectorS& y = ch.inequalities[f];
  std::optional<Scalar> best;
  for (const auto& z : g.arrangement) {
    const Scalar zp = dot(z, p);
    const Scalar zy = dot(z, y);
    if (zp.is_zero() || zy.is_zero()) continue;
    const Scalar s = zp / zy;
    if (s.sign() > 0 && (!best || s < *best)) best = s;
  }
  const Scalar s = best ? *best / Scalar(2) : Scalar(1);
  return p - y * s;
}

}  // namespace

SecondaryFan enumerate_chambers(const GaleData& g) {
  if (g.r > 3) throw Unsupported("chamber enumeration supports n - d <= 3");
  if (!g.calibration.bounded) throw NotAdmissible("P_b is unbounded for every b");
  SecondaryFan sf;

  VectorS start;
  for (int attempt = 0; attempt < 64; ++attempt) {
    VectorS chi = VectorS::Zero(g.r);
    for (std::size_t i = 0; i < g.generators.size(); ++i)
      chi += g.generators[i] * Scalar(Rational(static_cast<long>(13 + attempt + (i * i + 3 * i) % 17),
                                               static_cast<long>(13 + attempt)));
    if (is_generic(g, chi)) {
      start = chi;
      break;
    }
  }
  if (start.size() != g.r) throw Error("no generic starting character found");

  std::map<std::vector<VectorS>, int, bool (*)(const std::vector<VectorS>&, const std::vector<VectorS>&)> index(
      [](const std::vector<VectorS>& a, const std::vector<VectorS>& b) { return lex_less(a, b); });
  auto add = [&](Chamber ch) {
    auto it = index.find(ch.inequalities);
    if (it != index.end()) return it->second;
    const int id = static_cast<int>(sf.chambers.size());
    index.emplace(ch.inequalities, id);
    sf.adjacency.emplace_back(ch.facets.size(), -1);
    sf.chambers.push_back(std::move(ch));
    return id;
  };
  add(chamber_of(g, start));

  for (std::size_t cur = 0; cur < sf.chambers.size(); ++cur) {
    for (std::size_t f = 0; f < sf.chambers[cur].facets.size(); ++f) {
      if (sf.chambers[cur].facets[f].type == WallType::GaleBoundary) continue;
      std::optional<Chamber> next;
      for (int attempt = 0; attempt < 32 && !next; ++attempt) {
        const VectorS q = step_across(g, sf.chambers[cur], f, attempt);
        if (!is_generic(g, q)) continue;
        next = chamber_of(g, q);
      }
      if (!next) throw Error("could not step across a wall");
      const VectorS back = -sf.chambers[cur].inequalities[f];
      if (std::find(next->inequalities.begin(), next->inequalities.end(), back) == next->inequalities.end())
        throw Error("neighbouring chamber does not share the wall");
      sf.adjacency[cur][f] = add(std::move(*next));
    }
  }
  return sf;
}

SecondaryFan enumerate_chambers(const Calibration& c) { return enumerate_chambers(GaleData::make(c)); }

VectorS path_point(const GaleData& g, const AffinePath& p, const Scalar& t) {
  const auto n = g.calibration.n;
  if (p.beta.size() != n || p.alpha.size() != n) throw InvalidInput("path vectors must have length n");
  return mul_transpose(g.k, VectorS(p.beta + p.alpha * t));
}

bool WallCrossingReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

namespace {

// Crossing parameters in (-1, 1), sorted; DegeneratePath on ambiguous crossings.
std::vector<Scalar> crossing_parameters(const GaleData& g, const AffinePath& path) {
  const VectorS c0 = path_point(g, path, Scalar(0));
  const VectorS c1 = path_point(g, path, Scalar(1)) - c0;
  for (const Scalar& t : {Scalar(-1), Scalar(1)}) {
    const VectorS e = c0 + c1 * t;
    if (!is_admissible(g, e)) throw NotAdmissible("path endpoint " + describe(e) + " is not admissible");
    const auto bad = degenerate_cones(g, e);
    if (!bad.empty()) throw DegeneratePath("path endpoint " + describe(e) + " lies on a wall");
  }
  std::vector<Scalar> roots;
  for (std::size_t i = 0; i < g.small_cones.size(); ++i) {
    const VectorS z = g.small_cones[i].complement.row(0).transpose();
    const Scalar z0 = dot(z, c0), z1 = dot(z, c1);
    if (z1.is_zero()) {
      if (!z0.is_zero()) continue;
      // The path runs inside the hyperplane; it must avoid the cone entirely.
      const VectorS l0 = mul(g.small_cones[i].left_inverse, c0);
      const VectorS l1 = mul(g.small_cones[i].left_inverse, c1);
      Scalar lo(-1), hi(1);
      for (Eigen::Index e = 0; e < l0.size(); ++e) {
        if (l1[e].is_zero()) {
          if (l0[e].sign() < 0) hi = Scalar(-2);
          continue;
        }
        const Scalar t = -l0[e] / l1[e];
        if (l1[e].sign() > 0) lo = std::max(lo, t);
        else hi = std::min(hi, t);
      }
      if (lo <= hi) throw DegeneratePath("path runs inside a wall");
      continue;
    }
    const Scalar t = -z0 / z1;
    if (t <= Scalar(-1) || t >= Scalar(1)) continue;
    const VectorS lambda = mul(g.small_cones[i].left_inverse, VectorS(c0 + c1 * t));
    if (!nonnegative(lambda)) continue;
    roots.push_back(t);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (const Scalar& t : roots) {
    const VectorS p = c0 + c1 * t;
    std::vector<VectorS> planes;
    for (std::size_t i = 0; i < g.small_cones.size(); ++i) {
      const auto m = member(g, i, p);
      if (!m.in_span || !nonnegative(m.lambda)) continue;
      if (positive_support(g, i, m.lambda).size() < g.r - 1)
        throw DegeneratePath("path meets a cone of codimension two at t = " + t.to_string());
      const VectorS z = cone::normalize_direction(VectorS(g.small_cones[i].complement.row(0).transpose()));
      if (std::find(planes.begin(), planes.end(), z) == planes.end()) planes.push_back(z);
    }
    if (planes.size() > 1) throw DegeneratePath("path crosses several walls at t = " + t.to_string());
  }
  return roots;
}

void add_check(WallCrossingReport& r, std::string name, bool value) { r.checks.emplace_back(std::move(name), value); }

WallCrossingReport crossing_report(const GaleData& g, const AffinePath& path, const Scalar& t, const Scalar& eps) {
  WallCrossingReport r;
  r.crossed = true;
  r.t = t;
  r.eps = eps;
  const VectorS before_chi = path_point(g, path, t - eps);
  const VectorS on_chi = path_point(g, path, t);
  const VectorS after_chi = path_point(g, path, t + eps);
  const Chamber before = chamber_of(g, before_chi);
  r.before = before.fan;
  r.on = fan_at(g, on_chi);
  r.after = fan_at(g, after_chi);
  std::optional<std::size_t> facet;
  for (std::size_t f = 0; f < before.inequalities.size(); ++f)
    if (dot(before.inequalities[f], on_chi).is_zero()) facet = f;
  if (!facet) throw Error("crossing point is not on a wall of the chamber");
  r.wall = before.facets[*facet];

  if (r.wall.type == WallType::Divisorial) {
    const int i = r.wall.virtual_index;
    const IndexSet toggled = (r.before.virtual_set - r.after.virtual_set) | (r.after.virtual_set - r.before.virtual_set);
    add_check(r, "virtual_toggle", toggled == IndexSet().with(i));
    const bool star = r.wall.ray_appears ? same_combinatorics(star_subdivision(r.before, i), r.after)
                                         : same_combinatorics(star_subdivision(r.after, i), r.before);
    add_check(r, "star_subdivision", star);
  } else if (r.wall.type == WallType::Flipping) {
    add_check(r, "rays_preserved",
              r.before.rays() == r.after.rays() && r.before.virtual_set == r.after.virtual_set);
    add_check(r, "wall_fan_nonsimplicial", !r.on.simplicial());
    const GeometricFan gb = as_geometric(r.before), ga = as_geometric(r.after), go = as_geometric(r.on);
    add_check(r, "before_refines_wall", refines(gb, go));
    add_check(r, "after_refines_wall", refines(ga, go));
    if (g.calibration.d <= 3) add_check(r, "common_refinement_refines_wall", refines(common_refinement(gb, ga), go));
    // Cones that change contain Z \ {x}: x in I+ before, x in I- after, with the same links.
    const IndexSet z = r.wall.plus | r.wall.minus;
    auto exchanged = [&](const QuantumFan& from, const QuantumFan& to, IndexSet side) {
      std::vector<IndexSet> links;
      bool ok = true;
      for (IndexSet s : from.max_cones) {
        if (std::find(to.max_cones.begin(), to.max_cones.end(), s) != to.max_cones.end()) continue;
        const IndexSet missing = z - s;
        ok &= missing.size() == 1 && missing.subset_of(side);
        links.push_back(s - z);
      }
      std::sort(links.begin(), links.end());
      links.erase(std::unique(links.begin(), links.end()), links.end());
      return std::make_pair(ok, links);
    };
    const auto [ok_b, links_b] = exchanged(r.before, r.after, r.wall.plus);
    const auto [ok_a, links_a] = exchanged(r.after, r.before, r.wall.minus);
    add_check(r, "circuit_exchange", ok_b && ok_a && links_b == links_a && !links_b.empty());
  }
  return r;
}

// Half the distance from roots[i] to its nearest neighbour among the roots and +-1.
Scalar offset(const std::vector<Scalar>& roots, std::size_t i) {
  Scalar gap = roots[i] + Scalar(1);
  gap = std::min(gap, Scalar(1) - roots[i]);
  if (i > 0) gap = std::min(gap, roots[i] - roots[i - 1]);
  if (i + 1 < roots.size()) gap = std::min(gap, roots[i + 1] - roots[i]);
  return gap / Scalar(2);
}

}  // namespace

WallCrossingReport cross_wall(const AffinePath& path, const GaleData& g) {
  const auto roots = crossing_parameters(g, path);
  if (roots.size() > 1)
    throw InvalidInput("path crosses " + std::to_string(roots.size()) + " walls; split it at the crossings");
  if (roots.empty()) {
    WallCrossingReport r;
    r.before = fan_at(g, path_point(g, path, Scalar(-1)));
    r.on = r.before;
    r.after = fan_at(g, path_point(g, path, Scalar(1)));
    return r;
  }
  return crossing_report(g, path, roots[0], offset(roots, 0));
}

WallCrossingReport cross_wall(const AffinePath& path, const Calibration& c) { return cross_wall(path, GaleData::make(c)); }

CobordismReport cobordism_from_path(const AffinePath& path, const GaleData& g) {
  CobordismReport rep;
  rep.parameters = crossing_parameters(g, path);
  std::vector<Scalar> cuts{Scalar(-1)};
  cuts.insert(cuts.end(), rep.parameters.begin(), rep.parameters.end());
  cuts.push_back(Scalar(1));
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    rep.segments.push_back(fan_at(g, path_point(g, path, (cuts[i] + cuts[i + 1]) / Scalar(2))));
  for (std::size_t i = 0; i < rep.parameters.size(); ++i)
    rep.crossings.push_back(crossing_report(g, path, rep.parameters[i], offset(rep.parameters, i)));
  return rep;
}

CobordismReport cobordism_from_path(const AffinePath& path, const Calibration& c) {
  return cobordism_from_path(path, GaleData::make(c));
}

}  // namespace gkz

namespace gkz {

std::vector<VectorS> sample_characters(const GaleData& g, int count, std::uint64_t seed) {
  std::vector<VectorS> out;
  if (g.r == 0) return out;
  const int n = g.calibration.n;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dense(0, 40), sparse(1, 1000);
  std::uniform_int_distribution<int> pick(0, n - 1);
  const long budget = 100L * count + 1000;
  for (long attempt = 0; attempt < budget && static_cast<int>(out.size()) < count; ++attempt) {
    VectorS chi = VectorS::Zero(g.r);
    if (attempt % 2 == 0) {
      for (int i = 0; i < n; ++i) chi += g.generators[i] * Scalar(Rational(dense(rng)));
    } else {
      for (int t = 0; t < g.r; ++t) chi += g.generators[pick(rng)] * Scalar(Rational(sparse(rng)));
    }
    if (is_admissible(g, chi) && is_generic(g, chi)) out.push_back(chi);
  }
  return out;
}

std::size_t sampled_class_count(const GaleData& g, int count, std::uint64_t seed) {
  std::set<std::pair<std::vector<IndexSet>, IndexSet>> seen;
  for (const auto& chi : sample_characters(g, count, seed)) {
    const QuantumFan f = fan_at(g, chi);
    seen.insert({f.max_cones, f.virtual_set});
  }
  return seen.size();
}

}  // namespace gkz
