#include "gkz/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

#include "gkz/errors.hpp"

namespace gkz {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Writes m = s^2 * r with r squarefree.
void split_square(std::int64_t m, std::int64_t& s, std::int64_t& r) {
  s = 1;
  r = 1;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      s *= p;
      m /= p * p;
    }
    if (m % p == 0) {
      r *= p;
      m /= p;
    }
  }
  r *= m;
}

mpf_class to_mpf(const Quadratic& x) {
  constexpr int kBits = 256;
  mpf_class a(x.rational_part().get(), kBits);
  if (x.is_rational()) return a;
  mpf_class r(static_cast<double>(x.radicand()), kBits);
  r = sqrt(r);
  mpf_class b(x.radical_part().get(), kBits);
  return a + b * r;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  mpq_class v;
  const auto slash = s.find('/');
  const auto dot = s.find('.');
  if (slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw InvalidInput("malformed rational '" + std::string(text) + "'");
    mpz_class q(std::string(den), 10);
    if (q == 0) throw DivisionByZero("rational with zero denominator");
    v = mpq_class(mpz_class(std::string(num), 10), q);
  } else if (dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      throw InvalidInput("malformed decimal '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    mpz_class digits(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
    v = mpq_class(digits, scale);
  } else {
    if (!all_digits(s)) throw InvalidInput("malformed rational '" + std::string(text) + "'");
    v = mpq_class(mpz_class(std::string(s), 10));
  }
  v.canonicalize();
  if (neg) v = -v;
  return Rational(v);
}

std::string Rational::to_string() const { return v_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

bool is_squarefree(std::int64_t m) {
  if (m < 2) return false;
  std::int64_t s, r;
  split_square(m, s, r);
  return s == 1;
}

Quadratic::Quadratic(Rational a, Rational b, std::int64_t m)
    : a_(std::move(a)), b_(std::move(b)), m_(m) {
  if (b_.is_zero()) {
    m_ = 0;
    return;
  }
  if (m_ < 1) throw InvalidInput("radicand must be positive");
  std::int64_t s, r;
  split_square(m_, s, r);
  if (r == 1) {
    a_ += b_ * Rational(static_cast<long>(s));
    b_ = Rational();
    m_ = 0;
    return;
  }
  b_ *= Rational(static_cast<long>(s));
  m_ = r;
}

Quadratic Quadratic::sqrt(std::int64_t m) { return Quadratic(Rational(), Rational(1), m); }

void Quadratic::canonicalize() noexcept {
  if (b_.is_zero()) m_ = 0;
}

std::int64_t Quadratic::join(std::int64_t m1, std::int64_t m2) {
  if (m1 == 0) return m2;
  if (m2 == 0 || m1 == m2) return m1;
  throw FieldMismatch("operands lie in Q(sqrt(" + std::to_string(m1) + ")) and Q(sqrt(" +
                      std::to_string(m2) + "))");
}

int Quadratic::sign() const {
  const int sa = a_.sign();
  if (m_ == 0) return sa;
  const int sb = b_.sign();
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  const mpq_class lhs = a_.get() * a_.get();
  const mpq_class rhs = b_.get() * b_.get() * static_cast<long>(m_);
  const int c = cmp(lhs, rhs);
  if (c > 0) return sa;
  if (c < 0) return sb;
  return 0;
}

Quadratic Quadratic::conjugate() const {
  Quadratic r = *this;
  r.b_ = -r.b_;
  return r;
}

Quadratic Quadratic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (m_ == 0) return Quadratic(Rational(1) / a_);
  const Rational norm = a_ * a_ - b_ * b_ * Rational(static_cast<long>(m_));
  Quadratic r;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  r.m_ = m_;
  return r;
}

double Quadratic::to_double() const {
  if (m_ == 0) return a_.to_double();
  return to_mpf(*this).get_d();
}

std::string Quadratic::to_string() const {
  if (m_ == 0) return a_.to_string();
  std::string out;
  Rational b = b_;
  if (!a_.is_zero()) {
    out = a_.to_string();
    out += b.sign() < 0 ? " - " : " + ";
    b = abs(b);
  } else if (b.sign() < 0) {
    out = "-";
    b = -b;
  }
  if (b != Rational(1)) out += b.to_string() + "*";
  out += "sqrt(" + std::to_string(m_) + ")";
  return out;
}

Quadratic Quadratic::operator-() const {
  Quadratic r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Quadratic& Quadratic::operator+=(const Quadratic& o) {
  m_ = join(m_, o.m_);
  a_ += o.a_;
  if (o.m_ != 0) b_ += o.b_;
  canonicalize();
  return *this;
}

Quadratic& Quadratic::operator-=(const Quadratic& o) {
  m_ = join(m_, o.m_);
  a_ -= o.a_;
  if (o.m_ != 0) b_ -= o.b_;
  canonicalize();
  return *this;
}

Quadratic& Quadratic::operator*=(const Quadratic& o) {
  if (o.m_ == 0) {
    a_ *= o.a_;
    b_ *= o.a_;
    canonicalize();
    return *this;
  }
  if (m_ == 0) {
    const Rational a = a_;
    a_ = a * o.a_;
    b_ = a * o.b_;
    m_ = o.m_;
    canonicalize();
    return *this;
  }
  m_ = join(m_, o.m_);
  const Rational a = a_ * o.a_ + b_ * o.b_ * Rational(static_cast<long>(m_));
  const Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const Quadratic& x, const Quadratic& y) {
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Quadratic abs(const Quadratic& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Quadratic& x) { return os << x.to_string(); }

Quadratic Quadratic::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InvalidInput("empty scalar");

  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '*' && s[i - 1] != '/' && s[i - 1] != '(') {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  }
  terms.push_back(s.substr(start));

  Quadratic total;
  for (std::string t : terms) {
    Rational coeff(1);
    if (t.front() == '+' || t.front() == '-') {
      if (t.front() == '-') coeff = Rational(-1);
      t.erase(0, 1);
    }
    const auto pos = t.find("sqrt(");
    if (pos == std::string::npos) {
      total += Quadratic(coeff * Rational::parse(t));
      continue;
    }
    if (t.back() != ')') throw InvalidInput("malformed scalar '" + std::string(text) + "'");
    const std::string rad = t.substr(pos + 5, t.size() - pos - 6);
    if (!all_digits(rad)) throw InvalidInput("malformed radicand in '" + std::string(text) + "'");
    if (pos > 0) {
      if (t[pos - 1] != '*') throw InvalidInput("malformed scalar '" + std::string(text) + "'");
      coeff *= Rational::parse(t.substr(0, pos - 1));
    }
    const long m = std::stol(rad);
    if (m < 1) throw InvalidInput("radicand must be positive");
    total += Quadratic(Rational(), coeff, m);
  }
  return total;
}

Rational rational_floor(const Quadratic& x, int bits) {
  mpz_class scale = 1;
  scale <<= bits;
  const Quadratic y = x * Quadratic(Rational(mpq_class(scale)));
  mpf_class approx = to_mpf(y);
  mpf_class fl = floor(approx);
  mpz_class g(fl);
  while ((y - Quadratic(Rational(mpq_class(g)))).sign() < 0) --g;
  while ((y - Quadratic(Rational(mpq_class(g + 1)))).sign() >= 0) ++g;
  return Rational(mpq_class(g, scale));
}

}  // namespace gkz
