#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "gkz/linalg.hpp"

namespace testing {

inline gkz::Scalar S(const std::string& s) { return gkz::Scalar::parse(s); }

/// Row-major literal.
inline gkz::MatrixS mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  gkz::MatrixS m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const char* e : row) m(i, j++) = S(e);
    ++i;
  }
  return m;
}

inline gkz::VectorS vec(std::initializer_list<const char*> xs) {
  gkz::VectorS v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const char* e : xs) v[i++] = S(e);
  return v;
}

/// Columns given as lists of entries.
inline gkz::MatrixS cols(std::initializer_list<std::initializer_list<const char*>> columns) {
  const auto c = static_cast<Eigen::Index>(columns.size());
  const auto r = static_cast<Eigen::Index>(columns.begin()->size());
  gkz::MatrixS m(r, c);
  Eigen::Index j = 0;
  for (const auto& col : columns) {
    Eigen::Index i = 0;
    for (const char* e : col) m(i++, j) = S(e);
    ++j;
  }
  return m;
}

inline gkz::Scalar random_entry(std::mt19937_64& rng, int range, bool irrational) {
  std::uniform_int_distribution<long> a(-range, range);
  gkz::Scalar x(gkz::Rational(a(rng)));
  if (irrational && rng() % 3 == 0) x += gkz::Scalar(gkz::Rational(), gkz::Rational(a(rng)), 2);
  return x;
}

inline gkz::Calibration p2() {
  return gkz::Calibration::make(cols({{"1", "0"}, {"0", "1"}, {"-1", "-1"}}));
}

/// h = [e1, e2, (-sqrt2,-1), (-1,-sqrt2)], Gale generators (sqrt2,1),(1,sqrt2),(1,0),(0,1).
inline gkz::Calibration qex() {
  return gkz::Calibration::make(cols({{"1", "0"}, {"0", "1"}, {"-sqrt(2)", "-1"}, {"-1", "-sqrt(2)"}}));
}

inline gkz::Calibration figures() {
  return gkz::Calibration::make(cols({{"1", "0"}, {"0", "1"}, {"-3", "1"}, {"1", "-3"}, {"-2", "-1"}}));
}

/// n = 5, d = 3 with two flipping walls.
inline gkz::Calibration flip3() {
  return gkz::Calibration::make(
      cols({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}, {"-1", "2", "-2"}, {"-1", "-2", "-1"}}));
}

}  // namespace testing
