#include "gkz/projective.hpp"

#include <algorithm>
#include <numeric>

#include "gkz/polytope.hpp"

namespace gkz {

namespace {

std::optional<VectorS> weights(const Calibration& c, IndexSet s) {
  MatrixS m(c.d + 1, s.size());
  const auto el = s.elements();
  for (std::size_t t = 0; t < el.size(); ++t) {
    m.block(0, t, c.d, 1) = c.h.col(el[t]);
    m(c.d, t) = Scalar(1);
  }
  VectorS rhs = VectorS::Zero(c.d + 1);
  rhs[c.d] = Scalar(1);
  return solve_unique(m, rhs);
}

bool positive(const VectorS& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i].sign() <= 0) return false;
  return true;
}

// Half-plane index for the angular order starting at the positive x-axis.
int half(const VectorS& v) { return v[1].sign() > 0 || (v[1].is_zero() && v[0].sign() > 0) ? 0 : 1; }

bool same_key(const QuantumFan& a, const QuantumFan& b) {
  return a.max_cones == b.max_cones && a.virtual_set == b.virtual_set;
}

}  // namespace

std::optional<ProjectiveCertificate> certificate_for(const Calibration& c, IndexSet indices) {
  if (indices.size() != c.d + 1) return std::nullopt;
  const auto w = weights(c, indices);
  if (w && positive(*w)) return ProjectiveCertificate{indices, *w};
  return std::nullopt;
}

std::optional<ProjectiveCertificate> projective_certificate(const Calibration& c) {
  for (IndexSet s : subsets_of_size(c.n, c.d + 1))
    if (auto cert = certificate_for(c, s)) return cert;
  return std::nullopt;
}

bool verify_certificate(const Calibration& c, const ProjectiveCertificate& cert) {
  if (cert.indices.size() != c.d + 1 || cert.lambda.size() != c.d + 1) return false;
  if (!positive(cert.lambda)) return false;
  VectorS sum = VectorS::Zero(c.d);
  Scalar total(0);
  const auto el = cert.indices.elements();
  for (std::size_t t = 0; t < el.size(); ++t) {
    sum += VectorS(c.h.col(el[t])) * cert.lambda[t];
    total += cert.lambda[t];
  }
  return is_zero(sum) && total == Scalar(1);
}

VectorS simplex_parameter(const Calibration& c, const ProjectiveCertificate& cert) {
  if (!verify_certificate(c, cert)) throw InvalidInput("degenerate or invalid projective certificate");
  std::vector<VectorS> verts;
  for (int i : cert.indices.elements()) {
    const IndexSet rest = cert.indices.without(i);
    const MatrixS a = select_columns(c.h, rest).transpose();
    const auto v = solve_unique(a, VectorS(VectorS::Constant(c.d, Scalar(-1))));
    if (!v) throw InvalidInput("degenerate projective certificate");
    verts.push_back(*v);
  }
  VectorS b(c.n);
  for (int j = 0; j < c.n; ++j) {
    if (cert.indices.contains(j)) {
      b[j] = Scalar(1);
      continue;
    }
    const VectorS hj = c.h.col(j);
    Scalar worst = -dot(verts[0], hj);
    for (const auto& v : verts) worst = std::max(worst, Scalar(-dot(v, hj)));
    b[j] = Scalar(1) + worst;
  }
  return b;
}

Scalar openness_radius(const Calibration& c, const ProjectiveCertificate& cert) {
  if (!verify_certificate(c, cert)) throw InvalidInput("invalid projective certificate");
  const int m = c.d + 1;
  MatrixS a(m, m);
  const auto el = cert.indices.elements();
  for (int t = 0; t < m; ++t) {
    a.block(0, t, c.d, 1) = c.h.col(el[t]);
    a(c.d, t) = Scalar(1);
  }
  const auto inv = inverse(a);
  if (!inv) throw InvalidInput("singular certificate system");
  Scalar kappa(0);
  for (int i = 0; i < m; ++i) {
    Scalar row(0);
    for (int j = 0; j < m; ++j) row += abs((*inv)(i, j));
    kappa = std::max(kappa, row);
  }
  Scalar mu = cert.lambda[0];
  for (int i = 1; i < m; ++i) mu = std::min(mu, cert.lambda[i]);
  return mu / (Scalar(2) * kappa * Scalar(m) * (Scalar(1) + mu));
}

std::string to_string(Dim2Class k) {
  switch (k) {
    case Dim2Class::ProjectiveLinkable: return "projective-linkable";
    case Dim2Class::ExceptionalN4: return "exceptional-n4";
    case Dim2Class::Invalid: return "invalid";
  }
  return "?";
}

QuantumFan angular_fan(const Calibration& c) {
  if (c.d != 2) throw InvalidInput("angular fan needs d = 2");
  std::vector<int> order(c.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    const VectorS u = c.h.col(i), v = c.h.col(j);
    if (half(u) != half(v)) return half(u) < half(v);
    return (u[0] * v[1] - u[1] * v[0]).sign() > 0;
  });
  QuantumFan f;
  f.calibration = c;
  for (int t = 0; t < c.n; ++t) f.max_cones.push_back(IndexSet().with(order[t]).with(order[(t + 1) % c.n]));
  std::sort(f.max_cones.begin(), f.max_cones.end());
  f.complete = true;
  return f;
}

Dim2Class classify_dim2(const Calibration& c) {
  if (c.d != 2) throw InvalidInput("classify_dim2 needs d = 2");
  if (!c.is_standard()) throw InvalidInput("classify_dim2 needs a standard calibration");
  if (c.n < 3) return Dim2Class::Invalid;
  const QuantumFan f = angular_fan(c);
  const FanValidity v = validate(f);
  if (!v.valid() || !v.complete || !is_constructible(f)) return Dim2Class::Invalid;
  if (c.n == 4 && c.h(1, 2).is_zero() && c.h(0, 2).sign() < 0 && c.h(0, 3).is_zero() && c.h(1, 3).sign() < 0)
    return Dim2Class::ExceptionalN4;
  return projective_certificate(c) ? Dim2Class::ProjectiveLinkable : Dim2Class::Invalid;
}

ProjectivePath path_to_projective(const Calibration& c, const VectorS& b, int steps) {
  if (b.size() != c.n) throw InvalidInput("b has the wrong length");
  if (steps < 1) throw InvalidInput("steps must be positive");
  const HPolytope p = analyze(c, b);
  if (!p.full() || !p.bounded) throw NotAdmissible("P_b is not a full-dimensional polytope");
  const GaleData g = GaleData::make(c);
  const VectorS chi = mul_transpose(g.k, b);
  const Chamber start = chamber_of(g, chi);

  ProjectivePath rep;
  rep.start_chi = chi;
  rep.target_calibration = c;
  rep.certificate = projective_certificate(c);

  if (!rep.certificate) {
    // Nudge one entry at a time, non-standard columns first, until certified.
    std::vector<int> columns;
    for (int j = c.d; j < c.n; ++j) columns.push_back(j);
    for (int j = 0; j < c.d; ++j) columns.push_back(j);
    bool done = false;
    for (int j : columns) {
      for (int a = 0; a < c.d && !done; ++a)
        for (const char* e : {"1/10", "-1/10", "1/100", "-1/100", "1/1000", "-1/1000"}) {
          MatrixS h2 = c.h;
          h2(a, j) += Scalar(Rational::parse(e));
          Calibration c2;
          try {
            c2 = Calibration::make(h2, c.virtual_set);
          } catch (const Error&) {
            continue;
          }
          auto cert = projective_certificate(c2);
          if (!cert || !c2.bounded) continue;
          bool ok = true;
          for (int m = 1; m <= steps && ok; ++m) {
            const Scalar s(Rational(m, steps));
            const MatrixS hm = MatrixS(c.h + (h2 - c.h) * s);
            try {
              const Calibration cm = Calibration::make(hm, c.virtual_set);
              const GaleData gm = GaleData::make(cm);
              const VectorS chim = mul_transpose(gm.k, b);
              ok = cm.bounded && is_admissible(gm, chim) && is_generic(gm, chim) &&
                   same_key(fan_at(gm, chim), start.fan);
            } catch (const Error&) {
              ok = false;
            }
          }
          if (!ok) continue;
          rep.calibration_segment = CalibrationSegment{h2, steps, true};
          rep.certificate = cert;
          rep.target_calibration = c2;
          done = true;
          break;
        }
      if (done) break;
    }
    if (!done) {
      rep.note = "no certified calibration found along validated straight segments";
      return rep;
    }
  }

  const Calibration& ct = rep.target_calibration;
  const GaleData gt = GaleData::make(ct);
  const VectorS base = simplex_parameter(ct, *rep.certificate);
  const QuantumFan target_fan = normal_fan(ct, base);
  std::vector<VectorS> candidates{base};
  for (const char* e : {"1/10", "1/100", "1/1000"})
    for (int j = 0; j < ct.n; ++j) {
      VectorS bt = base;
      bt[j] += Scalar(Rational::parse(e));
      candidates.push_back(bt);
    }
  for (const auto& bt : candidates) {
    try {
      if (!same_key(normal_fan(ct, bt), target_fan)) continue;
      AffinePath path{VectorS((b + bt) * Scalar(Rational(1, 2))), VectorS((bt - b) * Scalar(Rational(1, 2)))};
      rep.cobordism = cobordism_from_path(path, gt);
      rep.path = path;
      rep.target_b = bt;
      rep.found = true;
      return rep;
    } catch (const DegeneratePath&) {
    } catch (const OnWall&) {
    }
  }
  rep.note = "every tried path to the simplex chamber meets a wall in codimension two";
  return rep;
}

}  // namespace gkz
