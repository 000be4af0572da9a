#pragma once

#include "g2hol/qsqrt2.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace g2hol {

// Coordinates are x1..x7. Public functions take 1-based variable labels;
// arrays are indexed 0..6.
inline constexpr int kDim = 7;

using Point = std::array<Rational, kDim>;
using FloatPoint = std::array<double, kDim>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class NonUnitDivisor : public std::domain_error {
 public:
  NonUnitDivisor()
      : std::domain_error("divisor is not a unit (c*exp(L)); use ExprFraction") {}
};

class TranscendentalEvaluation : public std::domain_error {
 public:
  TranscendentalEvaluation()
      : std::domain_error("transcendental evaluation: exp(L) with L(pt) != 0; use eval_float") {}
};

// Exponent coefficients stay small in practice; overflow is detected and
// reported rather than silently wrapped.
class SmallRational {
 public:
  constexpr SmallRational() = default;
  SmallRational(std::int64_t n, std::int64_t d = 1);

  std::int64_t num() const { return n_; }
  std::int64_t den() const { return d_; }
  bool is_zero() const { return n_ == 0; }
  Rational to_rational() const { return Rational(n_, d_); }
  static SmallRational from_rational(const Rational& r);

  SmallRational operator-() const { return SmallRational(-n_, d_); }
  friend SmallRational operator+(const SmallRational& a, const SmallRational& b);
  friend SmallRational operator*(const SmallRational& a, const SmallRational& b);
  friend bool operator==(const SmallRational&, const SmallRational&) = default;
  friend std::strong_ordering operator<=>(const SmallRational& a, const SmallRational& b);

 private:
  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
};

struct Monomial {
  std::array<std::uint16_t, kDim> powers{};

  unsigned degree() const;
  bool is_one() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Linear form L(x) = sum c_k x_k inside exp(L); the zero form means no exponential.
struct LinForm {
  std::array<SmallRational, kDim> coeffs{};

  bool is_zero() const;
  Rational eval(const Point& pt) const;
  double eval(const FloatPoint& pt) const;
  friend LinForm operator+(const LinForm& a, const LinForm& b);
  friend bool operator==(const LinForm&, const LinForm&) = default;
  friend auto operator<=>(const LinForm&, const LinForm&) = default;
};

struct TermKey {
  LinForm exp;
  Monomial mono;

  friend bool operator==(const TermKey&, const TermKey&) = default;
  // exp ascending, then monomial descending so "x1 + x2 + 1" renders in that order.
  friend std::strong_ordering operator<=>(const TermKey& a, const TermKey& b) {
    if (auto c = a.exp <=> b.exp; c != 0) return c;
    return b.mono <=> a.mono;
  }
};

// Finite sum of c * x^alpha * exp(L), kept sorted by TermKey with no zero
// coefficients, so equality is structural.
class Expr {
 public:
  using Term = std::pair<TermKey, QSqrt2>;

  Expr() = default;
  Expr(const QSqrt2& c);  // NOLINT(google-explicit-constructor)
  Expr(long c) : Expr(QSqrt2(c)) {}  // NOLINT(google-explicit-constructor)

  static Expr var(int k);
  static Expr exp(const LinForm& l);
  static Expr term(const QSqrt2& c, const Monomial& m, const LinForm& l);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The constant coefficient when is_constant(), else throws.
  QSqrt2 constant_value() const;
  // Single term c*exp(L) with c != 0 and no monomial part.
  bool is_unit() const;
  bool depends_on(int k) const;

  Expr operator-() const;
  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  Expr& operator*=(const Expr& o);
  Expr& operator*=(const QSqrt2& c);

  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator*(Expr a, const QSqrt2& c) { return a *= c; }
  friend Expr operator*(const QSqrt2& c, Expr a) { return a *= c; }
  friend bool operator==(const Expr&, const Expr&) = default;

  // Builds from unsorted terms, merging duplicates and dropping zeros.
  static Expr from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

Expr pow_nat(const Expr& e, unsigned n);
Expr ddx(const Expr& e, int k);
Expr divide_unit(const Expr& e, const Expr& u);
Expr antiderivative(const Expr& e, int k);
QSqrt2 eval_exact(const Expr& e, const Point& pt);
double eval_float(const Expr& e, const FloatPoint& pt);

Expr parse(std::string_view text);
std::string render(const Expr& e);

Point origin();

// Numerator/denominator pair; arithmetic reduces whenever the denominator is a unit.
class ExprFraction {
 public:
  ExprFraction() : den_(1) {}
  ExprFraction(Expr num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  ExprFraction(Expr num, Expr den);

  const Expr& num() const { return num_; }
  const Expr& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial_exp() const { return den_ == Expr(1); }
  // Throws NonUnitDivisor unless the fraction reduced to an Expr.
  Expr to_expr() const;

  friend ExprFraction operator+(const ExprFraction& a, const ExprFraction& b);
  friend ExprFraction operator-(const ExprFraction& a, const ExprFraction& b);
  friend ExprFraction operator*(const ExprFraction& a, const ExprFraction& b);
  friend ExprFraction operator/(const ExprFraction& a, const ExprFraction& b);

 private:
  void reduce();
  Expr num_;
  Expr den_;
};

}  // namespace g2hol
