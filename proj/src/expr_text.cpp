#include "g2hol/expr.hpp"

#include <cctype>
#include <sstream>

namespace g2hol {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr parse_all() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
    pos_ = end;
    return true;
  }

  bool peek_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    return std::string(s_.substr(start, pos_ - start));
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      if (accept('+'))
        e += term();
      else if (accept('-'))
        e -= term();
      else
        return e;
    }
  }

  Expr term() {
    Expr e = factor();
    while (accept('*')) e *= factor();
    return e;
  }

  Expr factor() {
    if (accept('-')) return -factor();
    Expr e = base();
    if (accept('^')) {
      std::string d = digits();
      if (d.size() > 4) fail("exponent too large");
      e = pow_nat(e, static_cast<unsigned>(std::stoul(d)));
    }
    while (accept('/')) {
      if (accept_word("sqrt2")) {
        e *= QSqrt2(Rational(0), Rational(1, 2));
      } else if (peek_digit()) {
        std::size_t at = pos_;
        Rational d = Rational::parse(digits());
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        e *= QSqrt2(Rational(1) / d);
      } else {
        fail("divisor must be a natural number or sqrt2");
      }
    }
    return e;
  }

  Expr base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (peek_digit()) return Expr(QSqrt2(Rational::parse(digits())));
    if (accept_word("sqrt2")) return Expr(QSqrt2::sqrt2());
    if (accept_word("exp")) {
      if (!accept('(')) fail("expected '(' after exp");
      std::size_t at = pos_;
      Expr arg = expr();
      if (!accept(')')) fail("expected ')'");
      LinForm l;
      for (const auto& [key, c] : arg.terms()) {
        if (!key.exp.is_zero() || key.mono.degree() != 1 || !c.is_rational()) {
          pos_ = at;
          fail("exp argument must be a rational linear form");
        }
        for (int i = 0; i < kDim; ++i)
          if (key.mono.powers[i]) l.coeffs[i] = SmallRational::from_rational(c.a());
      }
      return Expr::exp(l);
    }
    if (s_[pos_] == 'x' && pos_ + 1 < s_.size() && s_[pos_ + 1] >= '1' && s_[pos_ + 1] <= '7' &&
        (pos_ + 2 >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 2])))) {
      int k = s_[pos_ + 1] - '0';
      pos_ += 2;
      return Expr::var(k);
    }
    if (accept('(')) {
      Expr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string render_linform(const LinForm& l) {
  Expr e;
  for (int i = 0; i < kDim; ++i)
    if (!l.coeffs[i].is_zero()) e += Expr(QSqrt2(l.coeffs[i].to_rational())) * Expr::var(i + 1);
  return render(e);
}

// Body of one term with a nonnegative-leading coefficient; `neg` reports the sign pulled out.
std::string render_term(const TermKey& key, const QSqrt2& c0, bool& neg) {
  QSqrt2 c = c0;
  neg = false;
  const bool bare = key.mono.is_one() && key.exp.is_zero();
  if (bare && !c.is_rational() && !c.a().is_zero()) return c.to_string();
  if (c.is_rational() ? c.a().sign() < 0 : (c.a().is_zero() ? c.b().sign() < 0 : c.a().sign() < 0)) {
    neg = true;
    c = -c;
  }
  std::vector<std::string> parts;
  if (c.is_rational() || c.a().is_zero()) {
    if (!(c == QSqrt2(1)) || bare) parts.push_back(c.to_string());
  } else {
    parts.push_back(bare ? c.to_string() : "(" + c.to_string() + ")");
  }
  for (int i = 0; i < kDim; ++i) {
    unsigned p = key.mono.powers[i];
    if (!p) continue;
    std::string v = "x" + std::to_string(i + 1);
    if (p > 1) v += "^" + std::to_string(p);
    parts.push_back(v);
  }
  if (!key.exp.is_zero()) parts.push_back("exp(" + render_linform(key.exp) + ")");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out;
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Expr& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : e.terms()) {
    bool neg = false;
    std::string body = render_term(key, c, neg);
    const bool mixed_const = key.mono.is_one() && key.exp.is_zero() && !c.is_rational() && !c.a().is_zero();
    if (mixed_const && (!first || e.size() > 1)) body = "(" + body + ")";
    if (first)
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

QSqrt2 QSqrt2::parse(std::string_view text) {
  Expr e = g2hol::parse(text);
  if (!e.is_constant()) throw ParseError("expected a constant", 0);
  return e.constant_value();
}

}  // namespace g2hol
