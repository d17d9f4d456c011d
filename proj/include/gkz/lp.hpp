#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "gkz/linalg.hpp"

namespace gkz::lp {

enum class Sense { Geq, Gt, Eq };

/// a . x (>=|>|=) c
template <typename T>
struct Constraint {
  Vector<T> a;
  T c{0};
  Sense sense = Sense::Geq;
};

namespace detail {

template <typename T>
bool normalize(Constraint<T>& k) {
  Eigen::Index lead = -1;
  for (Eigen::Index i = 0; i < k.a.size(); ++i)
    if (!is_zero(k.a[i])) {
      lead = i;
      break;
    }
  if (lead < 0) return false;
  const T s = T(1) / abs(k.a[lead]);
  for (Eigen::Index i = 0; i < k.a.size(); ++i)
    if (!is_zero(k.a[i])) k.a[i] *= s;
  k.c *= s;
  return true;
}

// Keeps the tightest inequality per normal direction.
template <typename T>
void dedupe(std::vector<Constraint<T>>& cs) {
  std::vector<Constraint<T>> out;
  for (auto& k : cs) {
    bool merged = false;
    for (auto& o : out) {
      if (o.a != k.a) continue;
      if (k.c > o.c || (k.c == o.c && k.sense == Sense::Gt)) o = k;
      merged = true;
      break;
    }
    if (!merged) out.push_back(std::move(k));
  }
  cs = std::move(out);
}

template <typename T>
struct Bound {
  Vector<T> a;  // coefficients on the remaining variables
  T c;          // x_j (>=|<=) (c - a . rest) / 1 after scaling
  bool strict;
};

}  // namespace detail

/// Feasibility of a small linear system by Fourier-Motzkin elimination.
/// Returns a witness point when feasible.
template <typename T>
std::optional<Vector<T>> fm_feasible(std::vector<Constraint<T>> cs, Eigen::Index nvars) {
  // Equalities: substitute out one variable each.
  struct Subst {
    Eigen::Index var;
    Vector<T> a;  // x_var = c - a . x  (a[var] == 0)
    T c;
  };
  std::vector<Subst> substs;
  for (std::size_t e = 0; e < cs.size(); ++e) {
    if (cs[e].sense != Sense::Eq) continue;
    Constraint<T> eq = cs[e];
    Eigen::Index j = -1;
    for (Eigen::Index i = 0; i < nvars; ++i)
      if (!is_zero(eq.a[i])) {
        j = i;
        break;
      }
    if (j < 0) {
      if (!is_zero(eq.c)) return std::nullopt;
      continue;
    }
    const T inv = T(1) / eq.a[j];
    Subst s{j, eq.a * inv, eq.c * inv};
    s.a[j] = T(0);
    for (auto& k : cs) {
      if (is_zero(k.a[j])) continue;
      const T f = k.a[j];
      k.c -= f * s.c;
      for (Eigen::Index i = 0; i < nvars; ++i)
        if (!is_zero(s.a[i])) k.a[i] -= f * s.a[i];
      k.a[j] = T(0);
    }
    for (auto& t : substs) {
      if (is_zero(t.a[j])) continue;
      const T f = t.a[j];
      t.c -= f * s.c;
      for (Eigen::Index i = 0; i < nvars; ++i)
        if (!is_zero(s.a[i])) t.a[i] -= f * s.a[i];
      t.a[j] = T(0);
    }
    substs.push_back(std::move(s));
  }
  std::vector<Constraint<T>> ineq;
  for (auto& k : cs) {
    if (k.sense == Sense::Eq) {
      if (!is_zero(k.c)) return std::nullopt;  // residual 0 = c
      continue;
    }
    ineq.push_back(k);
  }

  std::vector<bool> eliminated(nvars, false);
  for (const auto& s : substs) eliminated[s.var] = true;

  struct Level {
    Eigen::Index var;
    std::vector<detail::Bound<T>> lower, upper;
  };
  std::vector<Level> levels;

  auto settle_constants = [&]() -> bool {
    std::vector<Constraint<T>> keep;
    for (auto& k : ineq) {
      if (!detail::normalize(k)) {
        const int sg = sign(k.c);
        if (sg > 0 || (sg == 0 && k.sense == Sense::Gt)) return false;
        continue;
      }
      keep.push_back(std::move(k));
    }
    ineq = std::move(keep);
    detail::dedupe(ineq);
    return true;
  };
  if (!settle_constants()) return std::nullopt;

  while (true) {
    Eigen::Index best = -1;
    long best_cost = 0;
    for (Eigen::Index j = 0; j < nvars; ++j) {
      if (eliminated[j]) continue;
      long p = 0, q = 0;
      for (const auto& k : ineq) {
        const int s = sign(k.a[j]);
        p += s > 0;
        q += s < 0;
      }
      if (p == 0 && q == 0) continue;
      const long cost = p * q - p - q;
      if (best < 0 || cost < best_cost) {
        best = j;
        best_cost = cost;
      }
    }
    if (best < 0) break;
    const Eigen::Index j = best;
    Level lv{j, {}, {}};
    std::vector<Constraint<T>> pos, neg, rest;
    for (auto& k : ineq) {
      const int s = sign(k.a[j]);
      if (s == 0) {
        rest.push_back(std::move(k));
        continue;
      }
      // a_j x_j >= c - a' . x'  ->  x_j (>=|<=) (c - a'.x') / a_j
      const T inv = T(1) / k.a[j];
      detail::Bound<T> b{k.a * inv, k.c * inv, k.sense == Sense::Gt};
      b.a[j] = T(0);
      (s > 0 ? lv.lower : lv.upper).push_back(b);
      (s > 0 ? pos : neg).push_back(std::move(k));
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        const T fp = T(1) / p.a[j];
        const T fq = T(1) / (-q.a[j]);
        Constraint<T> k{p.a * fp + q.a * fq, p.c * fp + q.c * fq,
                        (p.sense == Sense::Gt || q.sense == Sense::Gt) ? Sense::Gt : Sense::Geq};
        k.a[j] = T(0);
        rest.push_back(std::move(k));
      }
    ineq = std::move(rest);
    eliminated[j] = true;
    levels.push_back(std::move(lv));
    if (!settle_constants()) return std::nullopt;
  }

  Vector<T> x = Vector<T>::Zero(nvars);
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    const Eigen::Index j = it->var;
    std::optional<T> lo, hi;
    for (const auto& b : it->lower) {
      const T v = b.c - dot(b.a, x);
      if (!lo || v > *lo) lo = v;
    }
    for (const auto& b : it->upper) {
      const T v = b.c - dot(b.a, x);
      if (!hi || v < *hi) hi = v;
    }
    if (lo && hi)
      x[j] = (*lo == *hi) ? *lo : (*lo + *hi) * T(Rational(1, 2));
    else if (lo)
      x[j] = *lo + T(1);
    else if (hi)
      x[j] = *hi - T(1);
    else
      x[j] = T(0);
  }
  for (auto it = substs.rbegin(); it != substs.rend(); ++it) x[it->var] = it->c - dot(it->a, x);
  return x;
}

/// True iff x satisfies every constraint exactly.
template <typename T>
bool satisfies(const std::vector<Constraint<T>>& cs, const Vector<T>& x) {
  for (const auto& k : cs) {
    const int s = sign(dot(k.a, x) - k.c);
    if (k.sense == Sense::Eq ? s != 0 : (k.sense == Sense::Gt ? s <= 0 : s < 0)) return false;
  }
  return true;
}

enum class Status { Optimal, Infeasible, Unbounded };

template <typename T>
struct LpResult {
  Status status = Status::Infeasible;
  Vector<T> x;
  T value{0};
};

/// maximize c . x subject to constraints (strict senses are treated as >=);
/// variables are free. Dense two-phase simplex with Bland's rule.
template <typename T>
LpResult<T> maximize(const Vector<T>& c, const std::vector<Constraint<T>>& cs) {
  const Eigen::Index nv = c.size();
  const Eigen::Index m = static_cast<Eigen::Index>(cs.size());
  // z = [u; v], x = u - v. Each row: a.u - a.v (>=|=) c, made into rhs >= 0.
  std::vector<int> kind(m);  // 0: <=, 1: >=, 2: =
  Matrix<T> a(m, 2 * nv);
  Vector<T> rhs(m);
  for (Eigen::Index r = 0; r < m; ++r) {
    const auto& k = cs[r];
    T sgn(1);
    int kd = k.sense == Sense::Eq ? 2 : 1;
    const int sc0 = sign(k.c);
    if (sc0 < 0 || (sc0 == 0 && kd == 1)) {
      sgn = T(-1);
      if (kd == 1) kd = 0;
    }
    for (Eigen::Index j = 0; j < nv; ++j) {
      a(r, j) = sgn * k.a[j];
      a(r, nv + j) = -a(r, j);
    }
    rhs[r] = sgn * k.c;
    kind[r] = kd;
  }
  Eigen::Index nslack = 0, nart = 0;
  for (int kd : kind) {
    nslack += kd != 2;
    nart += kd != 0;
  }
  const Eigen::Index ncol = 2 * nv + nslack + nart;
  Matrix<T> t = Matrix<T>::Zero(m + 1, ncol + 1);  // last row: objective, last col: rhs
  std::vector<Eigen::Index> basis(m);
  Eigen::Index sc = 2 * nv, ac = 2 * nv + nslack;
  std::vector<bool> artificial(ncol, false);
  for (Eigen::Index r = 0; r < m; ++r) {
    t.row(r).head(2 * nv) = a.row(r);
    t(r, ncol) = rhs[r];
    if (kind[r] == 0) {
      t(r, sc) = T(1);
      basis[r] = sc++;
    } else {
      if (kind[r] == 1) t(r, sc++) = T(-1);
      t(r, ac) = T(1);
      artificial[ac] = true;
      basis[r] = ac++;
    }
  }

  // Objective row holds reduced costs for maximization: row = -(cost) initially.
  auto pivot = [&](Eigen::Index pr, Eigen::Index pc) {
    const T inv = T(1) / t(pr, pc);
    for (Eigen::Index j = 0; j <= ncol; ++j)
      if (!is_zero(t(pr, j))) t(pr, j) *= inv;
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == pr || is_zero(t(i, pc))) continue;
      const T f = t(i, pc);
      for (Eigen::Index j = 0; j <= ncol; ++j)
        if (!is_zero(t(pr, j))) t(i, j) -= f * t(pr, j);
    }
    basis[pr] = pc;
  };
  auto run = [&](const std::vector<bool>& allowed) -> bool {
    while (true) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < ncol; ++j)
        if (allowed[j] && sign(t(m, j)) < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      T best;
      for (Eigen::Index i = 0; i < m; ++i) {
        if (sign(t(i, enter)) <= 0) continue;
        const T ratio = t(i, ncol) / t(i, enter);
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  };

  std::vector<bool> all(ncol, true);
  if (nart > 0) {
    // Phase I: maximize -sum(artificials).
    for (Eigen::Index j = 0; j < ncol; ++j)
      if (artificial[j]) t(m, j) = T(1);
    for (Eigen::Index r = 0; r < m; ++r)
      if (artificial[basis[r]])
        for (Eigen::Index j = 0; j <= ncol; ++j)
          if (!is_zero(t(r, j))) t(m, j) -= t(r, j);
    run(all);
    if (sign(t(m, ncol)) != 0) return {};
    for (Eigen::Index r = 0; r < m; ++r) {
      if (!artificial[basis[r]]) continue;
      for (Eigen::Index j = 0; j < ncol; ++j)
        if (!artificial[j] && !is_zero(t(r, j))) {
          pivot(r, j);
          break;
        }
    }
  }
  std::vector<bool> allowed(ncol);
  for (Eigen::Index j = 0; j < ncol; ++j) allowed[j] = !artificial[j];
  for (Eigen::Index j = 0; j <= ncol; ++j) t(m, j) = T(0);
  for (Eigen::Index j = 0; j < nv; ++j) {
    t(m, j) = -c[j];
    t(m, nv + j) = c[j];
  }
  for (Eigen::Index r = 0; r < m; ++r) {
    const Eigen::Index b = basis[r];
    if (artificial[b] || is_zero(t(m, b))) continue;
    const T f = t(m, b);
    for (Eigen::Index j = 0; j <= ncol; ++j)
      if (!is_zero(t(r, j))) t(m, j) -= f * t(r, j);
  }
  LpResult<T> res;
  if (!run(allowed)) {
    res.status = Status::Unbounded;
    return res;
  }
  Vector<T> z = Vector<T>::Zero(ncol);
  for (Eigen::Index r = 0; r < m; ++r) z[basis[r]] = t(r, ncol);
  res.status = Status::Optimal;
  res.x = z.head(nv) - z.segment(nv, nv);
  res.value = t(m, ncol);
  return res;
}

/// Strict feasibility through an auxiliary margin: maximize s <= 1 subject to
/// a.x - s >= c on strict rows. Returns a witness when the optimum is positive.
template <typename T>
std::optional<Vector<T>> simplex_feasible(const std::vector<Constraint<T>>& cs, Eigen::Index nvars) {
  std::vector<Constraint<T>> ext;
  bool any_strict = false;
  for (const auto& k : cs) {
    Constraint<T> e{Vector<T>::Zero(nvars + 1), k.c, k.sense};
    e.a.head(nvars) = k.a;
    if (k.sense == Sense::Gt) {
      e.a[nvars] = T(-1);
      e.sense = Sense::Geq;
      any_strict = true;
    }
    ext.push_back(std::move(e));
  }
  Constraint<T> cap{Vector<T>::Zero(nvars + 1), T(-1), Sense::Geq};
  cap.a[nvars] = T(-1);
  ext.push_back(cap);
  Vector<T> obj = Vector<T>::Zero(nvars + 1);
  if (any_strict) obj[nvars] = T(1);
  const auto r = maximize(obj, ext);
  if (r.status != Status::Optimal) return std::nullopt;
  if (any_strict && sign(r.value) <= 0) return std::nullopt;
  return Vector<T>(r.x.head(nvars));
}

/// Fourier-Motzkin for at most three variables, simplex beyond.
template <typename T>
std::optional<Vector<T>> feasible(const std::vector<Constraint<T>>& cs, Eigen::Index nvars) {
  if (nvars <= 3) return fm_feasible(cs, nvars);
  return simplex_feasible(cs, nvars);
}

}  // namespace gkz::lp
