#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace perfekt {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact real number a + b*sqrt(d) with rational a, b and squarefree d >= 2.
///
/// Values with b == 0 are plain rationals and carry d == 0, so equality is
/// structural. Arithmetic between two irrational values requires the same d;
/// anything else throws FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : a_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(const Integer& v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v);           // NOLINT(google-explicit-constructor)
  Scalar(const Rational& a, const Rational& b, int d);

  static Scalar fraction(long num, long den);
  /// sqrt(d) for squarefree d >= 2.
  static Scalar sqrt(int d);

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  /// 0 for rational values.
  int radicand() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  bool is_integer() const { return d_ == 0 && a_.get_den() == 1; }
  bool is_zero() const { return d_ == 0 && sgn(a_) == 0; }

  /// Exact sign, using only integer comparisons.
  int sign() const;

  /// Largest integer <= value.
  Integer floor() const;
  Integer ceil() const;
  /// Nearest integer, halves rounded up.
  Integer round() const;

  /// Requires is_rational().
  const Rational& as_rational() const;
  Integer as_integer() const;

  /// a - b*sqrt(d).
  Scalar conjugate() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const;

  /// "p/q" (q omitted when 1) or "(a)+(b)*sqrt(d)".
  std::string str() const;
  /// Accepts the canonical text format, plus "sqrt(d)" and "-sqrt(d)".
  static Scalar parse(std::string_view text);

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

 private:
  void normalize();

  Rational a_{0};
  Rational b_{0};
  int d_ = 0;
};

/// Sign of x + y*sqrt(d) for integers x, y.
int sign_of(const Integer& x, const Integer& y, int d);
/// Sign of x + y*sqrt(d) for rationals x, y.
int sign_of(const Rational& x, const Rational& y, int d);

/// Common radicand of two values (0 when both rational).
int common_field(int d1, int d2);

bool is_squarefree(long d);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

}  // namespace perfekt
