#pragma once

#include "g2hol/rational.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace g2hol {

// a + b*sqrt(2) with a, b rational.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt2 sqrt2() { return QSqrt2(Rational(0), Rational(1)); }
  // Same grammar as expressions, restricted to constants.
  static QSqrt2 parse(std::string_view text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  // a^2 - 2 b^2
  Rational norm() const { return a_ * a_ - Rational(2) * b_ * b_; }
  QSqrt2 conjugate() const { return QSqrt2(a_, -b_); }
  std::optional<QSqrt2> inverse() const;
  int sign() const;
  double to_double() const;
  // "p/q + r/s*sqrt2", zero parts omitted.
  std::string to_string() const;

  QSqrt2 operator-() const { return QSqrt2(-a_, -b_); }
  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  // Throws DivisionByZero; use inverse() for the non-throwing path.
  QSqrt2& operator/=(const QSqrt2& o);

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) = default;

 private:
  Rational a_;
  Rational b_;
};

inline QSqrt2 qs_add(const QSqrt2& x, const QSqrt2& y) { return x + y; }
inline QSqrt2 qs_mul(const QSqrt2& x, const QSqrt2& y) { return x * y; }
inline std::optional<QSqrt2> qs_inv(const QSqrt2& x) { return x.inverse(); }

}  // namespace g2hol
