#include "g2hol/qsqrt2.hpp"

#include <cmath>

namespace g2hol {

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  if (o.b_.is_zero()) {
    a_ *= o.a_;
    b_ *= o.a_;
    return *this;
  }
  if (b_.is_zero()) {
    b_ = a_ * o.b_;
    a_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + Rational(2) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::optional<QSqrt2> QSqrt2::inverse() const {
  if (is_zero()) return std::nullopt;
  Rational n = norm();  // nonzero: 2 is not a rational square
  return QSqrt2(a_ / n, -b_ / n);
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) {
  auto inv = o.inverse();
  if (!inv) throw DivisionByZero();
  return *this *= *inv;
}

int QSqrt2::sign() const {
  int sa = a_.sign(), sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with 2 b^2
  int c = (a_ * a_ <=> Rational(2) * b_ * b_) > 0 ? 1 : -1;
  return c > 0 ? sa : sb;
}

double QSqrt2::to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(2.0); }

std::string QSqrt2::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string s;
  Rational b = b_;
  if (!a_.is_zero()) {
    s = a_.to_string();
    s += b.sign() < 0 ? " - " : " + ";
    if (b.sign() < 0) b = -b;
  } else if (b.sign() < 0) {
    s = "-";
    b = -b;
  }
  if (!b.is_one()) s += b.to_string() + "*";
  s += "sqrt2";
  return s;
}

}  // namespace g2hol
