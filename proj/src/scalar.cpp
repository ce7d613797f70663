#include "perfekt/scalar.hpp"

#include <cctype>
#include <string>

#include "perfekt/error.hpp"

namespace perfekt {

namespace {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty rational");
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  bool slash = false;
  bool digits = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      throw InputError("malformed rational '" + s + "'");
    }
  }
  if (!digits) throw InputError("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw InputError("malformed rational '" + s + "'");
  if (r.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_radicand(std::string_view s) {
  // s looks like "sqrt(d)"
  if (s.substr(0, 5) != "sqrt(" || s.back() != ')') {
    throw InputError("malformed radical '" + std::string(s) + "'");
  }
  auto inner = s.substr(5, s.size() - 6);
  if (inner.empty() || inner.size() > 9) throw InputError("bad radicand '" + std::string(s) + "'");
  for (char c : inner) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InputError("bad radicand '" + std::string(s) + "'");
    }
  }
  return std::stoi(std::string(inner));
}

}  // namespace

bool is_squarefree(long d) {
  if (d < 2) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

int common_field(int d1, int d2) {
  if (d1 == 0) return d2;
  if (d2 == 0 || d1 == d2) return d1;
  throw FieldMismatch("mixed quadratic fields sqrt(" + std::to_string(d1) + ") and sqrt(" +
                      std::to_string(d2) + ")");
}

int sign_of(const Integer& x, const Integer& y, int d) {
  int sx = sgn(x);
  int sy = d == 0 ? 0 : sgn(y);
  if (sy == 0) return sx;
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  // Opposite signs: compare x^2 with y^2 d.
  Integer lhs = x * x;
  Integer rhs = y * y * d;
  int c = cmp(lhs, rhs);
  return sx > 0 ? c : -c;
}

int sign_of(const Rational& x, const Rational& y, int d) {
  int sx = sgn(x);
  int sy = d == 0 ? 0 : sgn(y);
  if (sy == 0) return sx;
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  Rational lhs = x * x;
  Rational rhs = y * y * d;
  int c = cmp(lhs, rhs);
  return sx > 0 ? c : -c;
}

Scalar::Scalar(const Rational& v) : a_(v) { a_.canonicalize(); }

Scalar::Scalar(const Rational& a, const Rational& b, int d) : a_(a), b_(b), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) != 0 && !is_squarefree(d)) {
    throw InputError("radicand " + std::to_string(d) + " is not a squarefree integer >= 2");
  }
  normalize();
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return Scalar(r);
}

Scalar Scalar::sqrt(int d) { return Scalar(Rational(0), Rational(1), d); }

void Scalar::normalize() {
  if (sgn(b_) == 0) {
    d_ = 0;
    b_ = 0;
  }
}

int Scalar::sign() const { return sign_of(a_, b_, d_); }

const Rational& Scalar::as_rational() const {
  if (!is_rational()) throw PreconditionViolated("value " + str() + " is not rational");
  return a_;
}

Integer Scalar::as_integer() const {
  if (!is_integer()) throw PreconditionViolated("value " + str() + " is not an integer");
  return a_.get_num();
}

Integer Scalar::floor() const {
  if (is_rational()) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
    return q;
  }
  // Estimate in high precision, then correct with exact comparisons.
  mpf_class est(0, 512);
  mpf_class root(d_, 512);
  mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
  est = mpf_class(a_, 512) + mpf_class(b_, 512) * root;
  mpf_floor(est.get_mpf_t(), est.get_mpf_t());
  Integer f(est);
  while (Scalar(Rational(f)) > *this) f -= 1;
  while (Scalar(Rational(f + 1)) <= *this) f += 1;
  return f;
}

Integer Scalar::ceil() const {
  Integer f = floor();
  if (Scalar(Rational(f)) == *this) return f;
  return f + 1;
}

Integer Scalar::round() const { return (*this + Scalar(Rational(1, 2))).floor(); }

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  r.b_ = -r.b_;
  return r;
}

double Scalar::to_double() const {
  if (is_rational()) return a_.get_d();
  mpf_class root(d_, 256);
  mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
  mpf_class v = mpf_class(a_, 256) + mpf_class(b_, 256) * root;
  return v.get_d();
}

std::string to_string(const Integer& v) { return v.get_str(10); }

std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str(10);
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

std::string Scalar::str() const {
  if (is_rational()) return to_string(a_);
  return "(" + to_string(a_) + ")+(" + to_string(b_) + ")*sqrt(" + std::to_string(d_) + ")";
}

Scalar Scalar::parse(std::string_view text) {
  auto s = trim(text);
  if (s.empty()) throw InputError("empty scalar");
  if (s.find("sqrt") == std::string_view::npos) return Scalar(parse_rational(s));
  if (s.front() != '(') {
    bool neg = false;
    if (s.front() == '-') {
      neg = true;
      s.remove_prefix(1);
    }
    int d = parse_radicand(s);
    return Scalar(Rational(0), Rational(neg ? -1 : 1), d);
  }
  // "(a)+(b)*sqrt(d)" or "(b)*sqrt(d)"
  auto close = s.find(')');
  if (close == std::string_view::npos) throw InputError("malformed scalar '" + std::string(s) + "'");
  auto first = s.substr(1, close - 1);
  auto rest = s.substr(close + 1);
  if (rest.substr(0, 1) == "*") {
    int d = parse_radicand(rest.substr(1));
    return Scalar(Rational(0), parse_rational(first), d);
  }
  if (rest.substr(0, 2) != "+(") throw InputError("malformed scalar '" + std::string(s) + "'");
  rest.remove_prefix(2);
  auto close2 = rest.find(')');
  if (close2 == std::string_view::npos || rest.substr(close2, 2) != ")*") {
    throw InputError("malformed scalar '" + std::string(s) + "'");
  }
  auto second = rest.substr(0, close2);
  int d = parse_radicand(rest.substr(close2 + 2));
  return Scalar(parse_rational(first), parse_rational(second), d);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = common_field(d_, o.d_);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = common_field(d_, o.d_);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  int d = common_field(d_, o.d_);
  if (d == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational na = a_ * o.a_ + b_ * o.b_ * d;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = na;
  b_ = nb;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  int d = common_field(d_, o.d_);
  if (o.is_rational()) {
    a_ /= o.a_;
    b_ /= o.a_;
    d_ = d;
    normalize();
    return *this;
  }
  // 1/(x + y sqrt d) = (x - y sqrt d)/(x^2 - y^2 d); the norm is nonzero for squarefree d.
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * o.d_;
  *this *= Scalar(o.a_ / norm, -o.b_ / norm, o.d_);
  return *this;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace perfekt
