#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace gkz {

/// Arbitrary-precision rational in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q" with arbitrary-length integers.
  static Rational parse(std::string_view text);

  const mpq_class& get() const noexcept { return v_; }
  int sign() const noexcept { return sgn(v_); }
  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  double to_double() const { return v_.get_d(); }
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

Rational abs(const Rational& x);
inline int sign(const Rational& x) { return x.sign(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Exact element a + b*sqrt(m) of Q or of a real quadratic field Q(sqrt(m)).
///
/// m is squarefree and >= 2 whenever b != 0; a value with b == 0 is stored
/// as rational-only (m == 0) and combines with any field. Mixing two values
/// with distinct radicals raises FieldMismatch.
class Quadratic {
 public:
  Quadratic() = default;
  Quadratic(int n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  Quadratic(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  Quadratic(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Quadratic(Rational a, Rational b, std::int64_t m);

  /// sqrt(m) for squarefree m >= 2.
  static Quadratic sqrt(std::int64_t m);

  /// Parses "p/q", "p/q*sqrt(m)", "sqrt(m)", "p/q + r/s*sqrt(m)" and similar.
  static Quadratic parse(std::string_view text);

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& radical_part() const noexcept { return b_; }
  /// 0 marks rational-only.
  std::int64_t radicand() const noexcept { return m_; }
  bool is_rational() const noexcept { return m_ == 0; }

  int sign() const;
  bool is_zero() const noexcept { return m_ == 0 && a_.is_zero(); }
  Quadratic conjugate() const;
  Quadratic inverse() const;
  double to_double() const;
  std::string to_string() const;

  Quadratic operator-() const;
  Quadratic& operator+=(const Quadratic& o);
  Quadratic& operator-=(const Quadratic& o);
  Quadratic& operator*=(const Quadratic& o);
  Quadratic& operator/=(const Quadratic& o) { return *this *= o.inverse(); }

  friend Quadratic operator+(Quadratic x, const Quadratic& y) { return x += y; }
  friend Quadratic operator-(Quadratic x, const Quadratic& y) { return x -= y; }
  friend Quadratic operator*(Quadratic x, const Quadratic& y) { return x *= y; }
  friend Quadratic operator/(Quadratic x, const Quadratic& y) { return x /= y; }
  friend bool operator==(const Quadratic& x, const Quadratic& y) {
    return x.m_ == y.m_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const Quadratic& x, const Quadratic& y);

 private:
  void canonicalize() noexcept;
  static std::int64_t join(std::int64_t m1, std::int64_t m2);

  Rational a_;
  Rational b_;
  std::int64_t m_ = 0;
};

inline int sign(const Quadratic& x) { return x.sign(); }
inline bool is_zero(const Quadratic& x) { return x.is_zero(); }
Quadratic abs(const Quadratic& x);
std::ostream& operator<<(std::ostream& os, const Quadratic& x);

/// Largest k/2^bits not exceeding x (presentation helpers and radii).
Rational rational_floor(const Quadratic& x, int bits);

bool is_squarefree(std::int64_t m);

/// The coordinate domain used throughout: a single quadratic field per instance.
using Scalar = Quadratic;

}  // namespace gkz

namespace Eigen {

template <>
struct NumTraits<gkz::Rational> : GenericNumTraits<gkz::Rational> {
  using Real = gkz::Rational;
  using NonInteger = gkz::Rational;
  using Literal = gkz::Rational;
  using Nested = gkz::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<gkz::Quadratic> : GenericNumTraits<gkz::Quadratic> {
  using Real = gkz::Quadratic;
  using NonInteger = gkz::Quadratic;
  using Literal = gkz::Quadratic;
  using Nested = gkz::Quadratic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen
