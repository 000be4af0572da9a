#include "g2hol/geometry.hpp"

#include <cmath>
#include <sstream>

namespace g2hol {

namespace {

// Nonzero entries of the Gram matrix.
struct GramEntry {
  int a, b, s;
};
constexpr std::array<GramEntry, 7> kGram = {{{0, 4, 1}, {4, 0, 1}, {1, 5, 1}, {5, 1, 1}, {2, 6, 1}, {6, 2, 1}, {3, 3, -1}}};

int pair_index(int k, int l) { return TwoForm::index(k, l); }

std::string pos(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

}  // namespace

ExprMatrix ExprMatrix::identity() {
  ExprMatrix m;
  for (int i = 0; i < 7; ++i) m(i, i) = 1;
  return m;
}

ExprMatrix ExprMatrix::constant(const ExactMatrix& c) {
  if (c.rows() != 7 || c.cols() != 7) throw DimensionMismatch("ExprMatrix::constant: expected 7x7");
  ExprMatrix m;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m(i, j) = Expr(c(i, j));
  return m;
}

bool ExprMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

ExprMatrix ExprMatrix::transpose() const {
  ExprMatrix t;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExprMatrix ExprMatrix::ddx(int k) const {
  ExprMatrix d;
  for (int i = 0; i < 49; ++i)
    if (!e_[i].is_zero()) d.e_[i] = g2hol::ddx(e_[i], k);
  return d;
}

ExactMatrix ExprMatrix::eval_exact(const Point& pt) const {
  ExactMatrix m(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (!(*this)(i, j).is_zero()) m(i, j) = g2hol::eval_exact((*this)(i, j), pt);
  return m;
}

std::array<double, 49> ExprMatrix::eval_float(const FloatPoint& pt) const {
  std::array<double, 49> out{};
  for (int i = 0; i < 49; ++i)
    if (!e_[i].is_zero()) out[i] = g2hol::eval_float(e_[i], pt);
  return out;
}

ExprMatrix& ExprMatrix::operator+=(const ExprMatrix& o) {
  for (int i = 0; i < 49; ++i)
    if (!o.e_[i].is_zero()) e_[i] += o.e_[i];
  return *this;
}

ExprMatrix& ExprMatrix::operator-=(const ExprMatrix& o) {
  for (int i = 0; i < 49; ++i)
    if (!o.e_[i].is_zero()) e_[i] -= o.e_[i];
  return *this;
}

ExprMatrix& ExprMatrix::operator*=(const Expr& s) {
  for (auto& x : e_)
    if (!x.is_zero()) x *= s;
  return *this;
}

ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b) {
  ExprMatrix c;
  for (int i = 0; i < 7; ++i)
    for (int k = 0; k < 7; ++k) {
      const Expr& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < 7; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

ExprMatrix expr_commutator(const ExprMatrix& a, const ExprMatrix& b) { return a * b - b * a; }

int TwoForm::index(int i, int j) {
  int idx = 0;
  for (int a = 0; a < i; ++a) idx += 6 - a;
  return idx + (j - i - 1);
}

Expr TwoForm::at(int i, int j) const {
  if (i == j) return Expr();
  if (i < j) return c[index(i, j)];
  return -c[index(j, i)];
}

bool TwoForm::is_zero() const {
  for (const auto& x : c)
    if (!x.is_zero()) return false;
  return true;
}

TwoForm& TwoForm::operator+=(const TwoForm& o) {
  for (int i = 0; i < 21; ++i) c[i] += o.c[i];
  return *this;
}

TwoForm exterior_derivative(const OneForm& w) {
  TwoForm out;
  for (int j = 0; j < 7; ++j) {
    if (w.c[j].is_zero()) continue;
    for (int i = 0; i < 7; ++i) {
      if (i == j) continue;
      Expr d = ddx(w.c[j], i + 1);
      if (d.is_zero()) continue;
      // d(w_j) ^ dx_j = (w_j)_i dx_i ^ dx_j
      if (i < j)
        out.c[TwoForm::index(i, j)] += d;
      else
        out.c[TwoForm::index(j, i)] -= d;
    }
  }
  return out;
}

TwoForm wedge(const OneForm& a, const OneForm& b) {
  TwoForm out;
  for (int i = 0; i < 7; ++i) {
    if (a.c[i].is_zero()) continue;
    for (int j = 0; j < 7; ++j) {
      if (i == j || b.c[j].is_zero()) continue;
      Expr p = a.c[i] * b.c[j];
      if (i < j)
        out.c[TwoForm::index(i, j)] += p;
      else
        out.c[TwoForm::index(j, i)] -= p;
    }
  }
  return out;
}

OneForm Coframe::form(int i) const {
  OneForm f;
  for (int j = 0; j < 7; ++j) f.c[j] = B(i, j);
  return f;
}

ExprMatrix metric_components(const Coframe& c) {
  ExprMatrix g;
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      Expr v;
      for (const auto& ge : kGram) {
        const Expr& x = c.B(ge.a, i);
        const Expr& y = c.B(ge.b, j);
        if (x.is_zero() || y.is_zero()) continue;
        if (ge.s > 0)
          v += x * y;
        else
          v -= x * y;
      }
      g(i, j) = v;
      g(j, i) = v;
    }
  return g;
}

ExprMatrix frame_inverse(const Coframe& c) {
  ExprMatrix a = c.B;
  ExprMatrix inv = ExprMatrix::identity();
  std::array<bool, 7> used{};
  std::array<int, 7> pivot_row{};
  for (int col = 0; col < 7; ++col) {
    int pr = -1;
    for (int r = 0; r < 7 && pr < 0; ++r)
      if (!used[r] && a(r, col).is_unit()) pr = r;
    if (pr < 0) {
      for (int r = 0; r < 7; ++r)
        if (!used[r] && !a(r, col).is_zero())
          throw UnsupportedCoframe("coframe outside supported class: non-unit pivot in column " +
                                   std::to_string(col + 1) + " (" + render(a(r, col)) + ")");
      throw UnsupportedCoframe("coframe is singular (column " + std::to_string(col + 1) + ")");
    }
    used[pr] = true;
    pivot_row[col] = pr;
    const Expr p = a(pr, col);
    if (!(p == Expr(1))) {
      for (int j = 0; j < 7; ++j) {
        if (!a(pr, j).is_zero()) a(pr, j) = divide_unit(a(pr, j), p);
        if (!inv(pr, j).is_zero()) inv(pr, j) = divide_unit(inv(pr, j), p);
      }
    }
    for (int r = 0; r < 7; ++r) {
      if (r == pr || a(r, col).is_zero()) continue;
      const Expr f = a(r, col);
      for (int j = 0; j < 7; ++j) {
        if (!a(pr, j).is_zero()) a(r, j) -= f * a(pr, j);
        if (!inv(pr, j).is_zero()) inv(r, j) -= f * inv(pr, j);
      }
    }
  }
  // row pivot_row[col] of inv now holds row col of B^{-1}
  ExprMatrix out;
  for (int col = 0; col < 7; ++col)
    for (int j = 0; j < 7; ++j) out(col, j) = inv(pivot_row[col], j);
  return out;
}

Christoffel christoffel(const Coframe& c, const ExprMatrix& E) {
  const ExprMatrix g = metric_components(c);
  // g^{-1} = E G E^T
  ExprMatrix gi;
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      Expr v;
      for (const auto& ge : kGram) {
        const Expr& x = E(i, ge.a);
        const Expr& y = E(j, ge.b);
        if (x.is_zero() || y.is_zero()) continue;
        if (ge.s > 0)
          v += x * y;
        else
          v -= x * y;
      }
      gi(i, j) = v;
      gi(j, i) = v;
    }
  // dg[(i*7+j)*7+l] = d_l g_ij
  std::vector<Expr> dg(343);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (!g(i, j).is_zero())
        for (int l = 0; l < 7; ++l) dg[(i * 7 + j) * 7 + l] = ddx(g(i, j), l + 1);
  auto D = [&](int i, int j, int l) -> const Expr& { return dg[(i * 7 + j) * 7 + l]; };
  Christoffel gam(343);
  const QSqrt2 half(Rational(1, 2));
  for (int k = 0; k < 7; ++k)
    for (int i = 0; i < 7; ++i)
      for (int j = i; j < 7; ++j) {
        Expr v;
        for (int l = 0; l < 7; ++l) {
          if (gi(k, l).is_zero()) continue;
          Expr s = D(j, l, i) + D(i, l, j) - D(i, j, l);
          if (!s.is_zero()) v += gi(k, l) * s;
        }
        v *= half;
        gam[(k * 7 + i) * 7 + j] = v;
        gam[(k * 7 + j) * 7 + i] = v;
      }
  return gam;
}

OneForm ConnectionForm::entry(int i, int j) const {
  OneForm f;
  for (int k = 0; k < 7; ++k) f.c[k] = coord[k](i, j);
  return f;
}

ConnectionForm levi_civita(const Coframe& c) {
  ConnectionForm th;
  th.E = frame_inverse(c);
  const Christoffel gam = christoffel(c, th.E);
  for (int k = 0; k < 7; ++k) {
    ExprMatrix gk;
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b) gk(a, b) = gam[(a * 7 + k) * 7 + b];
    th.coord[k] = c.B * (th.E.ddx(k + 1) + gk * th.E);
  }
  for (int z = 0; z < 7; ++z) {
    ExprMatrix m;
    for (int a = 0; a < 7; ++a)
      if (!th.E(a, z).is_zero()) m += th.coord[a] * th.E(a, z);
    th.frame[z] = m;
  }
  return th;
}

ExprMatrix CurvatureField::at(int k, int l) const {
  if (k == l) return ExprMatrix();
  if (k < l) return frame[pair_index(k, l)];
  ExprMatrix m = frame[pair_index(l, k)];
  m *= Expr(-1);
  return m;
}

CurvatureField curvature(const Coframe& c, const ConnectionForm& theta) {
  (void)c;
  CurvatureField rf;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) {
      ExprMatrix r = theta.coord[b].ddx(a + 1) - theta.coord[a].ddx(b + 1) +
                     expr_commutator(theta.coord[a], theta.coord[b]);
      rf.coord[pair_index(a, b)] = std::move(r);
    }
  const ExprMatrix& E = theta.E;
  for (int k = 0; k < 7; ++k)
    for (int l = k + 1; l < 7; ++l) {
      ExprMatrix m;
      for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b) {
          const ExprMatrix& rab = rf.coord[pair_index(a, b)];
          if (rab.is_zero()) continue;
          Expr coef = E(a, k) * E(b, l) - E(b, k) * E(a, l);
          if (coef.is_zero()) continue;
          m += rab * coef;
        }
      rf.frame[pair_index(k, l)] = std::move(m);
    }
  return rf;
}

AlgebraElement curvature_operator(const CurvatureField& rf, int k, int l, const Point& pt) {
  return rf.at(k - 1, l - 1).eval_exact(pt);
}

AlgebraElement nabla_R(const CurvatureField& rf, const ConnectionForm& theta, int z, int k, int l,
                       const Point& pt) {
  --z, --k, --l;
  const ExprMatrix om = rf.at(k, l);
  ExactMatrix d(7, 7);
  for (int a = 0; a < 7; ++a) {
    if (theta.E(a, z).is_zero()) continue;
    QSqrt2 ea = eval_exact(theta.E(a, z), pt);
    if (ea.is_zero()) continue;
    d += om.ddx(a + 1).eval_exact(pt) * ea;
  }
  const ExactMatrix thz = theta.frame[z].eval_exact(pt);
  const ExactMatrix omv = om.eval_exact(pt);
  d += commutator(thz, omv);
  for (int m = 0; m < 7; ++m) {
    if (!thz(m, k).is_zero()) d -= rf.at(m, l).eval_exact(pt) * thz(m, k);
    if (!thz(m, l).is_zero()) d -= rf.at(k, m).eval_exact(pt) * thz(m, l);
  }
  return d;
}

ExprMatrix NablaRField::at(int z, int k, int l) const {
  if (k == l) return ExprMatrix();
  if (k < l) return m[z * 21 + pair_index(k, l)];
  ExprMatrix r = m[z * 21 + pair_index(l, k)];
  r *= Expr(-1);
  return r;
}

NablaRField nabla_R_field(const CurvatureField& rf, const ConnectionForm& theta) {
  NablaRField nf;
  // d_a Omega_kl, shared across z
  std::vector<std::array<ExprMatrix, 7>> dom(21);
  for (int p = 0; p < 21; ++p)
    for (int a = 0; a < 7; ++a) dom[p][a] = rf.frame[p].ddx(a + 1);
  for (int z = 0; z < 7; ++z) {
    const ExprMatrix& thz = theta.frame[z];
    for (int k = 0; k < 7; ++k)
      for (int l = k + 1; l < 7; ++l) {
        const int p = pair_index(k, l);
        ExprMatrix d;
        for (int a = 0; a < 7; ++a)
          if (!theta.E(a, z).is_zero() && !dom[p][a].is_zero()) d += dom[p][a] * theta.E(a, z);
        d += expr_commutator(thz, rf.frame[p]);
        for (int m = 0; m < 7; ++m) {
          if (!thz(m, k).is_zero()) d -= rf.at(m, l) * thz(m, k);
          if (!thz(m, l).is_zero()) d -= rf.at(k, m) * thz(m, l);
        }
        nf.m[z * 21 + p] = std::move(d);
      }
  }
  return nf;
}

AlgebraElement nabla2_R(const NablaRField& nf, const ConnectionForm& theta, int w, int z, int k, int l,
                        const Point& pt) {
  --w, --z, --k, --l;
  const ExprMatrix f = nf.at(z, k, l);
  ExactMatrix d(7, 7);
  for (int a = 0; a < 7; ++a) {
    if (theta.E(a, w).is_zero()) continue;
    QSqrt2 ea = eval_exact(theta.E(a, w), pt);
    if (!ea.is_zero()) d += f.ddx(a + 1).eval_exact(pt) * ea;
  }
  const ExactMatrix thw = theta.frame[w].eval_exact(pt);
  d += commutator(thw, f.eval_exact(pt));
  for (int m = 0; m < 7; ++m) {
    if (!thw(m, z).is_zero()) d -= nf.at(m, k, l).eval_exact(pt) * thw(m, z);
    if (!thw(m, k).is_zero()) d -= nf.at(z, m, l).eval_exact(pt) * thw(m, k);
    if (!thw(m, l).is_zero()) d -= nf.at(z, k, m).eval_exact(pt) * thw(m, l);
  }
  return d;
}

std::vector<std::string> structure_equation_residuals(const Coframe& c, const ConnectionForm& theta) {
  std::vector<std::string> out;
  for (int i = 0; i < 7; ++i) {
    TwoForm r = exterior_derivative(c.form(i));
    for (int j = 0; j < 7; ++j) {
      OneForm t = theta.entry(i, j);
      bool any = false;
      for (const auto& x : t.c) any = any || !x.is_zero();
      if (any) r += wedge(t, c.form(j));
    }
    for (int a = 0; a < 7; ++a)
      for (int b = a + 1; b < 7; ++b)
        if (!r.c[TwoForm::index(a, b)].is_zero())
          out.push_back("db^" + std::to_string(i + 1) + " + theta^" + std::to_string(i + 1) + "_j ^ b^j at dx" +
                        pos(a, b) + ": " + render(r.c[TwoForm::index(a, b)]));
  }
  return out;
}

std::vector<std::string> metric_compatibility_residuals(const ConnectionForm& theta) {
  std::vector<std::string> out;
  const ExprMatrix G = ExprMatrix::constant(gram());
  for (int k = 0; k < 7; ++k) {
    ExprMatrix r = theta.coord[k].transpose() * G + G * theta.coord[k];
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        if (!r(i, j).is_zero())
          out.push_back("theta(d" + std::to_string(k + 1) + ")^T G + G theta at " + pos(i, j) + ": " +
                        render(r(i, j)));
  }
  return out;
}

std::vector<std::string> first_bianchi_residuals(const CurvatureField& rf) {
  std::vector<std::string> out;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      for (int k = j + 1; k < 7; ++k) {
        const ExprMatrix a = rf.at(i, j), b = rf.at(j, k), c = rf.at(k, i);
        for (int m = 0; m < 7; ++m) {
          Expr s = a(m, k) + b(m, i) + c(m, j);
          if (!s.is_zero())
            out.push_back("first Bianchi (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                          std::to_string(k + 1) + ") row " + std::to_string(m + 1) + ": " + render(s));
        }
      }
  return out;
}

double first_bianchi_float(const CurvatureField& rf, const FloatPoint& pt) {
  std::array<std::array<double, 49>, 21> v;
  double scale = 1.0;
  for (int p = 0; p < 21; ++p) {
    v[p] = rf.frame[p].eval_float(pt);
    for (double x : v[p]) scale = std::max(scale, std::abs(x));
  }
  auto at = [&](int k, int l, int r, int c) {
    if (k < l) return v[pair_index(k, l)][r * 7 + c];
    return -v[pair_index(l, k)][r * 7 + c];
  };
  double worst = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      for (int k = j + 1; k < 7; ++k)
        for (int m = 0; m < 7; ++m) {
          double s = at(i, j, m, k) + at(j, k, m, i) + at(k, i, m, j);
          worst = std::max(worst, std::abs(s) / scale);
        }
  return worst;
}

std::vector<std::string> second_bianchi_residuals(const CurvatureField& rf, const ConnectionForm& theta,
                                                  const Point& pt) {
  std::vector<std::string> out;
  std::array<std::array<ExactMatrix, 21>, 7> n;
  for (int z = 0; z < 7; ++z)
    for (int k = 0; k < 7; ++k)
      for (int l = k + 1; l < 7; ++l) n[z][pair_index(k, l)] = nabla_R(rf, theta, z + 1, k + 1, l + 1, pt);
  auto at = [&](int z, int k, int l) -> ExactMatrix {
    if (k < l) return n[z][pair_index(k, l)];
    return -n[z][pair_index(l, k)];
  };
  for (int z = 0; z < 7; ++z)
    for (int k = z + 1; k < 7; ++k)
      for (int l = k + 1; l < 7; ++l) {
        ExactMatrix s = at(z, k, l) + at(k, l, z) + at(l, z, k);
        if (!s.is_zero())
          out.push_back("second Bianchi (" + std::to_string(z + 1) + "," + std::to_string(k + 1) + "," +
                        std::to_string(l + 1) + "): " + s.to_string());
      }
  return out;
}

}  // namespace g2hol
