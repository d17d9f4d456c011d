#include "gkz/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

#include "gkz/cone.hpp"
#include "gkz/lp.hpp"

namespace gkz {

namespace {

using Cons = lp::Constraint<Scalar>;

void sort_unique(std::vector<IndexSet>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<VectorS> ray_vectors(const GeometricFan& f, IndexSet cone) {
  std::vector<VectorS> out;
  for (int r : cone.elements()) out.push_back(f.rays[r]);
  return out;
}

MatrixS as_matrix(const std::vector<VectorS>& vs, int d) {
  MatrixS m(d, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) m.col(j) = vs[j];
  return m;
}

int ray_index(std::vector<VectorS>& rays, const VectorS& v) {
  const VectorS n = cone::normalize_direction(v);
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (rays[i] == n) return static_cast<int>(i);
  rays.push_back(n);
  return static_cast<int>(rays.size() - 1);
}

// Count of faces containing each element, split by face size.
std::vector<std::vector<int>> degree_profiles(const CombinatorialType& t) {
  std::vector<std::vector<int>> deg(t.n, std::vector<int>(t.n + 1, 0));
  for (IndexSet f : t.faces)
    for (int i : f.elements()) ++deg[i][f.size()];
  return deg;
}

// Calls `visit` on each poset isomorphism a -> b in lexicographic order until it returns true.
void for_each_isomorphism(const CombinatorialType& a, const CombinatorialType& b,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  if (a.n != b.n || a.faces.size() != b.faces.size()) return;
  IndexSet sa, sb;
  for (IndexSet f : a.faces) sa = sa | f;
  for (IndexSet f : b.faces) sb = sb | f;
  if (sa.size() != sb.size()) return;
  const auto da = degree_profiles(a), db = degree_profiles(b);
  std::unordered_set<std::uint32_t> in_b;
  for (IndexSet f : b.faces) in_b.insert(f.bits());
  const std::vector<int> elems = sa.elements();
  const std::vector<int> targets = sb.elements();
  // faces of a grouped by their largest element, checked once that element is placed
  std::vector<std::vector<IndexSet>> closing(a.n);
  for (IndexSet f : a.faces)
    if (!f.empty()) closing[f.elements().back()].push_back(f);

  std::vector<int> perm(a.n, -1);
  for (int i = 0; i < a.n; ++i)
    if (!sa.contains(i)) perm[i] = i;
  std::vector<bool> used(b.n, false);
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (stop) return;
    if (k == elems.size()) {
      stop = visit(perm);
      return;
    }
    const int x = elems[k];
    for (int y : targets) {
      if (used[y] || da[x] != db[y]) continue;
      perm[x] = y;
      bool ok = true;
      for (IndexSet f : closing[x]) {
        IndexSet img;
        for (int e : f.elements()) img.insert(perm[e]);
        if (!in_b.count(img.bits())) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used[y] = true;
        rec(k + 1);
        used[y] = false;
      }
      perm[x] = -1;
      if (stop) return;
    }
  };
  rec(0);
}

}  // namespace

IndexSet QuantumFan::rays() const {
  IndexSet r;
  for (IndexSet s : max_cones) r = r | s;
  return r;
}

bool QuantumFan::simplicial() const {
  return std::all_of(max_cones.begin(), max_cones.end(), [&](IndexSet s) {
    return s.size() == calibration.d && rank(select_columns(calibration.h, s)) == calibration.d;
  });
}

bool same_combinatorics(const QuantumFan& a, const QuantumFan& b) {
  return a.max_cones == b.max_cones && a.virtual_set == b.virtual_set;
}

std::vector<IndexSet> CombinatorialType::maximal() const {
  std::vector<IndexSet> out;
  for (IndexSet f : faces) {
    const bool covered = std::any_of(faces.begin(), faces.end(),
                                     [&](IndexSet g) { return g != f && f.subset_of(g); });
    if (!covered) out.push_back(f);
  }
  return out;
}

bool CombinatorialType::contains(IndexSet s) const {
  return std::binary_search(faces.begin(), faces.end(), s);
}

QuantumFan normal_fan(const Calibration& c, const HPolytope& p) {
  if (p.dim < c.d)
    throw NotAdmissible("P_b has dimension " + std::to_string(p.dim) + " < " + std::to_string(c.d));
  if (!p.bounded) throw NotAdmissible("P_b is unbounded");
  const IndexSet facets = facet_set(p);
  QuantumFan f;
  f.calibration = c;
  for (const auto& v : p.vertices) f.max_cones.push_back(v.tight & facets);
  sort_unique(f.max_cones);
  f.virtual_set = IndexSet::range(c.n) - facets;
  f.complete = true;
  return f;
}

QuantumFan normal_fan(const Calibration& c, const VectorS& b) { return normal_fan(c, analyze(c, b)); }

std::vector<IndexSet> cone_faces(const MatrixS& h, IndexSet sigma) {
  std::vector<IndexSet> out;
  const bool simplicial = rank(select_columns(h, sigma)) == sigma.size();
  for (int k = 0; k <= sigma.size(); ++k)
    for (IndexSet j : subsets_of_size(sigma, k))
      if (simplicial || cone::is_face(h, sigma, j)) out.push_back(j);
  sort_unique(out);
  return out;
}

CombinatorialType combinatorial_type(const QuantumFan& f) {
  CombinatorialType t;
  t.n = f.n();
  t.faces.push_back(IndexSet());
  for (IndexSet s : f.max_cones) {
    const auto fs = cone_faces(f.calibration.h, s);
    t.faces.insert(t.faces.end(), fs.begin(), fs.end());
  }
  sort_unique(t.faces);
  return t;
}

std::string type_name(const CombinatorialType& t, int d) {
  const auto m = t.maximal();
  IndexSet support;
  for (IndexSet s : m) support = support | s;
  if (support.size() == d + 1 && static_cast<int>(m.size()) == d + 1 &&
      std::all_of(m.begin(), m.end(), [&](IndexSet s) { return s.size() == d; }))
    return "S" + std::to_string(d);
  if (d == 2 && m.size() >= 3 && m.size() == static_cast<std::size_t>(support.size()) &&
      std::all_of(m.begin(), m.end(), [](IndexSet s) { return s.size() == 2; })) {
    std::vector<int> deg(t.n, 0);
    for (IndexSet s : m)
      for (int i : s.elements()) ++deg[i];
    if (std::all_of(deg.begin(), deg.end(), [](int x) { return x == 0 || x == 2; })) {
      // a 2-regular graph is a single cycle iff it is connected
      IndexSet seen{support.elements().front()};
      for (bool grew = true; grew;) {
        grew = false;
        for (IndexSet s : m)
          if (!(s & seen).empty() && !s.subset_of(seen)) {
            seen = seen | s;
            grew = true;
          }
      }
      if (seen == support) return "C" + std::to_string(support.size());
    }
  }
  return "other";
}

QuantumFan star_subdivision(const QuantumFan& f, int i) {
  if (!f.virtual_set.contains(i)) return f;
  const MatrixS& h = f.calibration.h;
  const VectorS v = h.col(i);
  QuantumFan out = f;
  out.max_cones.clear();
  bool inside = false;
  for (IndexSet s : f.max_cones) {
    if (!cone::contains(select_columns(h, s), v)) {
      out.max_cones.push_back(s);
      continue;
    }
    inside = true;
    for (IndexSet tau : cone_faces(h, s)) {
      if (tau.empty() || rank(select_columns(h, tau)) != f.d() - 1) continue;
      if (cone::contains(select_columns(h, tau), v)) continue;
      out.max_cones.push_back(tau.with(i));
    }
  }
  if (!inside) throw InvalidInput("h(e_" + std::to_string(i + 1) + ") is outside the support");
  sort_unique(out.max_cones);
  out.virtual_set.erase(i);
  return out;
}

GeometricFan as_geometric(const QuantumFan& f) {
  GeometricFan g;
  g.d = f.d();
  std::map<int, int> idx;
  for (int i : f.rays().elements()) idx[i] = ray_index(g.rays, f.calibration.h.col(i));
  for (IndexSet s : f.max_cones) {
    IndexSet r;
    for (int i : s.elements()) r.insert(idx[i]);
    g.max_cones.push_back(r);
  }
  sort_unique(g.max_cones);
  return g;
}

GeometricFan common_refinement(const GeometricFan& a, const GeometricFan& b) {
  if (a.d != b.d) throw InvalidInput("fans live in different dimensions");
  if (a.d > 3) throw Unsupported("common refinement is implemented for d <= 3");
  GeometricFan out;
  out.d = a.d;
  for (IndexSet s : a.max_cones) {
    const auto na = cone::facet_normals(as_matrix(ray_vectors(a, s), a.d));
    for (IndexSet t : b.max_cones) {
      auto normals = na;
      for (const auto& n : cone::facet_normals(as_matrix(ray_vectors(b, t), b.d)))
        if (std::find(normals.begin(), normals.end(), n) == normals.end()) normals.push_back(n);
      const auto rays = cone::extreme_rays(normals, a.d);
      if (rays.empty() || rank(as_matrix(rays, a.d)) < a.d) continue;
      IndexSet c;
      for (const auto& r : rays) c.insert(ray_index(out.rays, r));
      out.max_cones.push_back(c);
    }
  }
  sort_unique(out.max_cones);
  return out;
}

GeometricFan common_refinement(const QuantumFan& a, const QuantumFan& b) {
  return common_refinement(as_geometric(a), as_geometric(b));
}

bool refines(const GeometricFan& fine, const GeometricFan& coarse) {
  return std::all_of(fine.max_cones.begin(), fine.max_cones.end(), [&](IndexSet s) {
    const auto rs = ray_vectors(fine, s);
    return std::any_of(coarse.max_cones.begin(), coarse.max_cones.end(),
                       [&](IndexSet t) { return cone::cone_subset(rs, ray_vectors(coarse, t)); });
  });
}

bool is_complete(const GeometricFan& f) {
  if (f.max_cones.empty()) return false;
  for (IndexSet s : f.max_cones) {
    const auto rs = ray_vectors(f, s);
    if (rank(as_matrix(rs, f.d)) < f.d) return false;
    for (const auto& a : cone::facet_normals(as_matrix(rs, f.d))) {
      IndexSet facet;
      for (int r : s.elements())
        if (dot(a, f.rays[r]).sign() == 0) facet.insert(r);
      int shared = 0;
      for (IndexSet t : f.max_cones)
        if (t != s && facet.subset_of(t)) ++shared;
      if (shared != 1) return false;
    }
  }
  return true;
}

bool same_fan(const GeometricFan& a, const GeometricFan& b) {
  if (a.d != b.d || a.rays.size() != b.rays.size() || a.max_cones.size() != b.max_cones.size())
    return false;
  std::vector<int> map(a.rays.size(), -1);
  for (std::size_t i = 0; i < a.rays.size(); ++i) {
    for (std::size_t j = 0; j < b.rays.size(); ++j)
      if (a.rays[i] == b.rays[j]) map[i] = static_cast<int>(j);
    if (map[i] < 0) return false;
  }
  std::vector<IndexSet> mapped;
  for (IndexSet s : a.max_cones) {
    IndexSet t;
    for (int r : s.elements()) t.insert(map[r]);
    mapped.push_back(t);
  }
  sort_unique(mapped);
  return mapped == b.max_cones;
}

std::optional<std::vector<int>> types_isomorphic(const CombinatorialType& a,
                                                 const CombinatorialType& b) {
  std::optional<std::vector<int>> out;
  for_each_isomorphism(a, b, [&](const std::vector<int>& p) {
    out = p;
    return true;
  });
  return out;
}

std::vector<std::vector<int>> fan_automorphisms(const CombinatorialType& t) {
  std::vector<std::vector<int>> out;
  for_each_isomorphism(t, t, [&](const std::vector<int>& p) {
    out.push_back(p);
    return false;
  });
  return out;
}

std::optional<FanIsomorphism> fans_isomorphic(const QuantumFan& a, const QuantumFan& b) {
  if (a.d() != b.d() || a.n() != b.n() || a.virtual_set.size() != b.virtual_set.size())
    return std::nullopt;
  const int d = a.d();
  const CombinatorialType ta = combinatorial_type(a), tb = combinatorial_type(b);
  const IndexSet gens = a.rays();
  IndexSet basis;
  for (IndexSet s : subsets_of_size(gens, d))
    if (rank(select_columns(a.calibration.h, s)) == d) {
      basis = s;
      break;
    }
  const auto hb_inv = inverse(select_columns(a.calibration.h, basis));
  if (!hb_inv) return std::nullopt;
  std::optional<FanIsomorphism> out;
  for_each_isomorphism(ta, tb, [&](const std::vector<int>& p) {
    MatrixS target(d, d);
    int col = 0;
    for (int i : basis.elements()) target.col(col++) = b.calibration.h.col(p[i]);
    const MatrixS L = mul(target, *hb_inv);
    for (int i : gens.elements())
      if (mul(L, VectorS(a.calibration.h.col(i))) != VectorS(b.calibration.h.col(p[i]))) return false;
    FanIsomorphism iso{L, std::vector<int>(a.n(), -1), std::vector<int>(a.n(), -1)};
    for (int i : gens.elements()) iso.sigma[i] = p[i];
    const auto va = a.virtual_set.elements(), vb = b.virtual_set.elements();
    for (std::size_t k = 0; k < va.size(); ++k) iso.tau[va[k]] = vb[k];
    out = iso;
    return true;
  });
  return out;
}

std::vector<IndexSet> s_variety_strata(const Calibration& c, const VectorS& b) {
  if (dimension_lp(c, b) != c.d) throw NotAdmissible("P_b is not full-dimensional");
  IndexSet facets;
  for (int i = 0; i < c.n; ++i)
    if (facet_dim_lp(c, b, i) == c.d - 1) facets.insert(i);
  std::vector<IndexSet> found;
  for (int k = facets.size(); k >= c.d; --k)
    for (IndexSet s : subsets_of_size(facets, k)) {
      if (std::any_of(found.begin(), found.end(), [&](IndexSet f) { return s.subset_of(f); }))
        continue;
      const MatrixS hs = select_columns(c.h, s);
      if (rank(hs) != c.d) continue;
      const auto sol = solve(MatrixS(hs.transpose()), VectorS(-select_entries(b, s)));
      if (!sol) continue;
      bool ok = true;
      for (int j = 0; j < c.n && ok; ++j)
        if (!s.contains(j)) ok = (dot(VectorS(c.h.col(j)), sol->x) + b[j]).sign() >= 0;
      if (ok) found.push_back(s);
    }
  sort_unique(found);
  return found;
}

StabilizerReport stabilizer_profiles(const Calibration& c, IndexSet i) {
  const MatrixS hi = select_columns(c.h, i);
  if (rank(hi) != c.d) throw InvalidInput("the cone " + i.to_string() + " is not full-dimensional");
  const int k = i.size();
  const int r = k - integer_kernel_rank(hi);
  StabilizerReport rep;
  rep.profile_old = {r - c.d, k - r, c.n - c.d};
  rep.profile_new = {k - c.d, 0, c.n - k};
  rep.isomorphic = rep.profile_old == rep.profile_new;
  return rep;
}

FanValidity validate(const QuantumFan& f) {
  FanValidity v;
  const MatrixS& h = f.calibration.h;
  v.strongly_convex = std::all_of(f.max_cones.begin(), f.max_cones.end(), [&](IndexSet s) {
    return cone::strongly_convex(select_columns(h, s));
  });
  v.covers_generators = f.rays() == (IndexSet::range(f.n()) - f.virtual_set);
  v.intersections_are_faces = true;
  for (std::size_t a = 0; a < f.max_cones.size() && v.intersections_are_faces; ++a)
    for (std::size_t b = a + 1; b < f.max_cones.size(); ++b) {
      // separation: w >= 0 on sigma, <= 0 on sigma', vanishing exactly on the shared face
      const IndexSet s = f.max_cones[a], t = f.max_cones[b], j = s & t;
      std::vector<Cons> cs;
      for (int i : (s | t).elements()) {
        if (j.contains(i))
          cs.push_back({h.col(i), Scalar(0), lp::Sense::Eq});
        else if (s.contains(i))
          cs.push_back({h.col(i), Scalar(0), lp::Sense::Gt});
        else
          cs.push_back({VectorS(-h.col(i)), Scalar(0), lp::Sense::Gt});
      }
      if (!lp::feasible(cs, f.d())) {
        v.intersections_are_faces = false;
        break;
      }
    }
  v.complete = v.strongly_convex && is_complete(as_geometric(f));
  return v;
}

SupportFunction support_function(const QuantumFan& f, const VectorS& b) {
  const MatrixS& h = f.calibration.h;
  SupportFunction sf;
  sf.convex = sf.strict = true;
  const IndexSet gens = f.rays();
  for (IndexSet s : f.max_cones) {
    const auto sol = solve(MatrixS(select_columns(h, s).transpose()), VectorS(-select_entries(b, s)));
    if (!sol || sol->kernel.cols() > 0)
      throw InvalidInput("b does not define a linear form on " + s.to_string());
    sf.cones.push_back(s);
    sf.forms.push_back(sol->x);
    for (int j : (gens - s).elements()) {
      const int sg = (dot(VectorS(h.col(j)), sol->x) + b[j]).sign();
      sf.convex &= sg >= 0;
      sf.strict &= sg > 0;
    }
  }
  return sf;
}

bool is_constructible(const QuantumFan& f) {
  if (!validate(f).valid()) return false;
  const int d = f.d(), nc = static_cast<int>(f.max_cones.size()), n = f.n();
  const MatrixS& h = f.calibration.h;
  const IndexSet gens = f.rays();
  const Eigen::Index nv = static_cast<Eigen::Index>(d) * nc + n;
  std::vector<Cons> cs;
  for (int c = 0; c < nc; ++c)
    for (int j : gens.elements()) {
      Cons k{VectorS::Zero(nv), Scalar(0), f.max_cones[c].contains(j) ? lp::Sense::Eq : lp::Sense::Gt};
      for (int r = 0; r < d; ++r) k.a[c * d + r] = h(r, j);
      k.a[d * nc + j] = Scalar(-1);
      cs.push_back(std::move(k));
    }
  return lp::simplex_feasible(cs, nv).has_value();
}

AdmissibilityReport admissibility(const Calibration& c, const CombinatorialType& t) {
  AdmissibilityReport r;
  const auto m = t.maximal();
  r.cones_strongly_convex = std::all_of(m.begin(), m.end(), [&](IndexSet s) {
    return cone::strongly_convex(select_columns(c.h, s));
  });
  QuantumFan f;
  f.calibration = c;
  f.max_cones = m;
  std::sort(f.max_cones.begin(), f.max_cones.end());
  IndexSet support;
  for (IndexSet s : m) support = support | s;
  f.virtual_set = IndexSet::range(c.n) - support;
  const FanValidity v = validate(f);
  r.forms_fan = v.valid() && v.complete;
  f.complete = v.complete;
  // faces recomputed over c must reproduce t
  r.forms_fan = r.forms_fan && combinatorial_type(f) == t;
  return r;
}

}  // namespace gkz
