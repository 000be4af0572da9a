#include "g2hol/expr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace g2hol {

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("exponent coefficient overflow");
  return static_cast<std::int64_t>(v);
}

void check_var(int k) {
  if (k < 1 || k > kDim) throw std::out_of_range("variable index must be in 1..7");
}

}  // namespace

// -- SmallRational ---------------------------------------------------------

SmallRational::SmallRational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DivisionByZero();
  if (d < 0) {
    n = checked(-static_cast<__int128>(n));
    d = checked(-static_cast<__int128>(d));
  }
  std::int64_t g = std::gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  n_ = n;
  d_ = d;
}

SmallRational SmallRational::from_rational(const Rational& r) {
  mpz_class n = r.numerator(), d = r.denominator();
  if (!n.fits_slong_p() || !d.fits_slong_p()) throw std::overflow_error("exponent coefficient overflow");
  return SmallRational(n.get_si(), d.get_si());
}

SmallRational operator+(const SmallRational& a, const SmallRational& b) {
  if (a.d_ == b.d_) return SmallRational(checked(static_cast<__int128>(a.n_) + b.n_), a.d_);
  __int128 n = static_cast<__int128>(a.n_) * b.d_ + static_cast<__int128>(b.n_) * a.d_;
  __int128 d = static_cast<__int128>(a.d_) * b.d_;
  __int128 g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return SmallRational(checked(n), checked(d));
}

SmallRational operator*(const SmallRational& a, const SmallRational& b) {
  __int128 n = static_cast<__int128>(a.n_) * b.n_;
  __int128 d = static_cast<__int128>(a.d_) * b.d_;
  __int128 g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return SmallRational(checked(n), checked(d));
}

std::strong_ordering operator<=>(const SmallRational& a, const SmallRational& b) {
  if (a.d_ == b.d_) return a.n_ <=> b.n_;
  return static_cast<__int128>(a.n_) * b.d_ <=> static_cast<__int128>(b.n_) * a.d_;
}

// -- Monomial / LinForm ----------------------------------------------------

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto p : powers) d += p;
  return d;
}

bool Monomial::is_one() const { return degree() == 0; }

bool LinForm::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

Rational LinForm::eval(const Point& pt) const {
  Rational s;
  for (int i = 0; i < kDim; ++i)
    if (!coeffs[i].is_zero()) s += coeffs[i].to_rational() * pt[i];
  return s;
}

double LinForm::eval(const FloatPoint& pt) const {
  double s = 0;
  for (int i = 0; i < kDim; ++i)
    if (!coeffs[i].is_zero())
      s += static_cast<double>(coeffs[i].num()) / static_cast<double>(coeffs[i].den()) * pt[i];
  return s;
}

LinForm operator+(const LinForm& a, const LinForm& b) {
  LinForm r;
  for (int i = 0; i < kDim; ++i) r.coeffs[i] = a.coeffs[i] + b.coeffs[i];
  return r;
}

// -- Expr ------------------------------------------------------------------

Expr::Expr(const QSqrt2& c) {
  if (!c.is_zero()) terms_.push_back({TermKey{}, c});
}

Expr Expr::var(int k) {
  check_var(k);
  Monomial m;
  m.powers[k - 1] = 1;
  return term(1, m, LinForm{});
}

Expr Expr::exp(const LinForm& l) { return term(1, Monomial{}, l); }

Expr Expr::term(const QSqrt2& c, const Monomial& m, const LinForm& l) {
  Expr e;
  if (!c.is_zero()) e.terms_.push_back({TermKey{l, m}, c});
  return e;
}

Expr Expr::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Expr e;
  for (auto& t : terms) {
    if (!e.terms_.empty() && e.terms_.back().first == t.first) {
      e.terms_.back().second += t.second;
      if (e.terms_.back().second.is_zero()) e.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      e.terms_.push_back(std::move(t));
    }
  }
  return e;
}

bool Expr::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == TermKey{});
}

QSqrt2 Expr::constant_value() const {
  if (!is_constant()) throw std::domain_error("expression is not constant");
  return terms_.empty() ? QSqrt2() : terms_[0].second;
}

bool Expr::is_unit() const { return terms_.size() == 1 && terms_[0].first.mono.is_one(); }

bool Expr::depends_on(int k) const {
  check_var(k);
  for (const auto& [key, c] : terms_)
    if (key.mono.powers[k - 1] != 0 || !key.exp.coeffs[k - 1].is_zero()) return true;
  return false;
}

Expr Expr::operator-() const {
  Expr r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

template <class Op>
std::vector<Expr::Term> merge(const std::vector<Expr::Term>& a, const std::vector<Expr::Term>& b, Op combine_b) {
  std::vector<Expr::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back({b[j].first, combine_b(QSqrt2(), b[j].second)});
      ++j;
    } else {
      QSqrt2 c = combine_b(a[i].second, b[j].second);
      if (!c.is_zero()) out.push_back({a[i].first, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Expr& Expr::operator+=(const Expr& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, [](const QSqrt2& x, const QSqrt2& y) { return x + y; });
  return *this;
}

Expr& Expr::operator-=(const Expr& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, [](const QSqrt2& x, const QSqrt2& y) { return x - y; });
  return *this;
}

Expr& Expr::operator*=(const QSqrt2& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Expr& Expr::operator*=(const Expr& o) { return *this = *this * o; }

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kDim; ++i) {
    unsigned p = unsigned(a.powers[i]) + b.powers[i];
    if (p > UINT16_MAX) throw std::overflow_error("monomial degree overflow");
    m.powers[i] = static_cast<std::uint16_t>(p);
  }
  return m;
}

}  // namespace

Expr operator*(const Expr& a, const Expr& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Expr();
  if (b.is_constant()) return a * b.terms_[0].second;
  if (a.is_constant()) return b * a.terms_[0].second;
  std::vector<Expr::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      prod.push_back({TermKey{ka.exp + kb.exp, mono_mul(ka.mono, kb.mono)}, ca * cb});
  return Expr::from_terms(std::move(prod));
}

Expr pow_nat(const Expr& e, unsigned n) {
  Expr r(1), base = e;
  while (n) {
    if (n & 1u) r *= base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return r;
}

Expr ddx(const Expr& e, int k) {
  check_var(k);
  const int i = k - 1;
  std::vector<Expr::Term> out;
  out.reserve(2 * e.size());
  for (const auto& [key, c] : e.terms()) {
    if (key.mono.powers[i] != 0) {
      TermKey k2 = key;
      k2.mono.powers[i] -= 1;
      out.push_back({k2, c * QSqrt2(Rational(long(key.mono.powers[i])))});
    }
    const SmallRational& l = key.exp.coeffs[i];
    if (!l.is_zero()) out.push_back({key, c * QSqrt2(l.to_rational())});
  }
  return Expr::from_terms(std::move(out));
}

Expr divide_unit(const Expr& e, const Expr& u) {
  if (!u.is_unit()) throw NonUnitDivisor();
  const auto& [ukey, uc] = u.terms()[0];
  QSqrt2 inv = *uc.inverse();
  LinForm neg;
  for (int i = 0; i < kDim; ++i) neg.coeffs[i] = -ukey.exp.coeffs[i];
  std::vector<Expr::Term> out;
  out.reserve(e.size());
  for (const auto& [key, c] : e.terms()) out.push_back({TermKey{key.exp + neg, key.mono}, c * inv});
  return Expr::from_terms(std::move(out));
}

Expr antiderivative(const Expr& e, int k) {
  check_var(k);
  const int i = k - 1;
  std::vector<Expr::Term> out;
  for (const auto& [key, c] : e.terms()) {
    const unsigned n = key.mono.powers[i];
    const SmallRational& lam = key.exp.coeffs[i];
    if (lam.is_zero()) {
      TermKey k2 = key;
      k2.mono.powers[i] = static_cast<std::uint16_t>(n + 1);
      out.push_back({k2, c / QSqrt2(Rational(long(n + 1)))});
      continue;
    }
    // x^n e^{lam x}: e^{lam x} * sum_j (-1)^j n!/(n-j)! x^{n-j} / lam^{j+1}
    const Rational l = lam.to_rational();
    Rational falling(1), lpow = l;
    for (unsigned j = 0; j <= n; ++j) {
      TermKey k2 = key;
      k2.mono.powers[i] = static_cast<std::uint16_t>(n - j);
      Rational coef = falling / lpow;
      if (j % 2) coef = -coef;
      out.push_back({k2, c * QSqrt2(coef)});
      falling *= Rational(long(n - j));
      lpow *= l;
    }
  }
  return Expr::from_terms(std::move(out));
}

QSqrt2 eval_exact(const Expr& e, const Point& pt) {
  QSqrt2 s;
  for (const auto& [key, c] : e.terms()) {
    if (!key.exp.eval(pt).is_zero()) throw TranscendentalEvaluation();
    Rational m(1);
    for (int i = 0; i < kDim; ++i)
      if (key.mono.powers[i]) m *= pow(pt[i], key.mono.powers[i]);
    if (!m.is_zero()) s += c * QSqrt2(m);
  }
  return s;
}

double eval_float(const Expr& e, const FloatPoint& pt) {
  double s = 0;
  for (const auto& [key, c] : e.terms()) {
    double t = c.to_double();
    for (int i = 0; i < kDim; ++i)
      if (key.mono.powers[i]) t *= std::pow(pt[i], key.mono.powers[i]);
    if (!key.exp.is_zero()) t *= std::exp(key.exp.eval(pt));
    s += t;
  }
  return s;
}

Point origin() { return Point{}; }

// -- ExprFraction ----------------------------------------------------------

ExprFraction::ExprFraction(Expr num, Expr den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  reduce();
}

void ExprFraction::reduce() {
  if (num_.is_zero()) {
    den_ = Expr(1);
    return;
  }
  if (den_.is_unit()) {
    num_ = divide_unit(num_, den_);
    den_ = Expr(1);
  }
}

Expr ExprFraction::to_expr() const {
  if (!is_polynomial_exp()) throw NonUnitDivisor();
  return num_;
}

ExprFraction operator+(const ExprFraction& a, const ExprFraction& b) {
  if (a.den_ == b.den_) return ExprFraction(a.num_ + b.num_, a.den_);
  return ExprFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ExprFraction operator-(const ExprFraction& a, const ExprFraction& b) {
  if (a.den_ == b.den_) return ExprFraction(a.num_ - b.num_, a.den_);
  return ExprFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

ExprFraction operator*(const ExprFraction& a, const ExprFraction& b) {
  return ExprFraction(a.num_ * b.num_, a.den_ * b.den_);
}

ExprFraction operator/(const ExprFraction& a, const ExprFraction& b) {
  if (b.is_zero()) throw DivisionByZero();
  return ExprFraction(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace g2hol
