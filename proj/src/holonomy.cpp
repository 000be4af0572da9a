#include "g2hol/holonomy.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace g2hol {

namespace {

int digit(char c, const std::string& text) {
  if (c < '1' || c > '7') throw std::invalid_argument("bad operator id '" + text + "'");
  return c - '0';
}

}  // namespace

OperatorId OperatorId::parse(const std::string& text) {
  OperatorId op;
  std::string s = text;
  while (!s.empty() && s[0] == 'n') {
    ++op.order;
    s.erase(0, 1);
  }
  if (op.order > 2 || s.empty() || s[0] != 'R') throw std::invalid_argument("bad operator id '" + text + "'");
  s.erase(0, 1);
  auto pair = [&](const std::string& t) {
    if (t.size() != 2) throw std::invalid_argument("bad operator id '" + text + "'");
    op.k = digit(t[0], text);
    op.l = digit(t[1], text);
    if (op.k == op.l) throw std::invalid_argument("bad operator id '" + text + "': repeated index");
  };
  if (op.order == 0) {
    pair(s);
  } else if (op.order == 1) {
    if (s.size() != 4 || s[1] != '_') throw std::invalid_argument("bad operator id '" + text + "'");
    op.z = digit(s[0], text);
    pair(s.substr(2));
  } else {
    if (s.size() != 6 || s[1] != '_' || s[3] != '_') throw std::invalid_argument("bad operator id '" + text + "'");
    op.w = digit(s[0], text);
    op.z = digit(s[2], text);
    pair(s.substr(4));
  }
  return op;
}

std::string OperatorId::to_string() const {
  std::string kl = std::to_string(k) + std::to_string(l);
  if (order == 0) return "R" + kl;
  if (order == 1) return "nR" + std::to_string(z) + "_" + kl;
  return "nnR" + std::to_string(w) + "_" + std::to_string(z) + "_" + kl;
}

Pipeline::Pipeline(const Coframe& c) : coframe_(c), theta_(levi_civita(c)), curvature_(g2hol::curvature(c, theta_)) {}

const NablaRField& Pipeline::nabla_field() {
  if (!nabla_) nabla_ = std::make_unique<NablaRField>(nabla_R_field(curvature_, theta_));
  return *nabla_;
}

AlgebraElement evaluate_operator(Pipeline& p, const OperatorId& op, const Point& pt) {
  switch (op.order) {
    case 0: return curvature_operator(p.curvature(), op.k, op.l, pt);
    case 1: return nabla_R(p.curvature(), p.theta(), op.z, op.k, op.l, pt);
    default: return nabla2_R(p.nabla_field(), p.theta(), op.w, op.z, op.k, op.l, pt);
  }
}

namespace {

// Reduced row echelon form of the flattened basis: rows and pivot columns.
struct Echelon {
  std::vector<std::vector<QSqrt2>> rows;
  std::vector<int> pivots;
};

Echelon echelon(const std::vector<AlgebraElement>& basis) {
  Echelon e;
  for (const auto& b : basis) e.rows.push_back(flatten(b));
  const int n = 49;
  std::size_t r = 0;
  for (int col = 0; col < n && r < e.rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < e.rows.size() && e.rows[piv][col].is_zero()) ++piv;
    if (piv == e.rows.size()) continue;
    std::swap(e.rows[r], e.rows[piv]);
    const QSqrt2 inv = *e.rows[r][col].inverse();
    for (auto& x : e.rows[r]) x *= inv;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      if (i == r || e.rows[i][col].is_zero()) continue;
      const QSqrt2 f = e.rows[i][col];
      for (int j = 0; j < n; ++j) e.rows[i][j] -= f * e.rows[r][j];
    }
    e.pivots.push_back(col);
    ++r;
  }
  e.rows.resize(r);
  return e;
}

std::string short_render(const Expr& e) {
  std::string s = render(e);
  if (s.size() > 200) s = s.substr(0, 200) + " ...";
  return s;
}

}  // namespace

ContainmentResult containment(const ConnectionForm& theta, const SubalgebraSpec& spec) {
  const Echelon ech = echelon(spec.basis);
  for (int k = 0; k < 7; ++k) {
    const ExprMatrix& m = theta.coord[k];
    std::array<Expr, 49> res;
    for (int j = 0; j < 49; ++j) res[j] = m(j / 7, j % 7);
    for (std::size_t a = 0; a < ech.rows.size(); ++a) {
      const Expr c = m(ech.pivots[a] / 7, ech.pivots[a] % 7);
      if (c.is_zero()) continue;
      for (int j = 0; j < 49; ++j)
        if (!ech.rows[a][j].is_zero()) res[j] -= c * Expr(ech.rows[a][j]);
    }
    for (int j = 0; j < 49; ++j)
      if (!res[j].is_zero()) {
        std::ostringstream w;
        w << "theta(d/dx" << (k + 1) << ") entry (" << (j / 7 + 1) << "," << (j % 7 + 1)
          << ") leaves " << spec.label() << ": residual " << short_render(res[j]);
        return {false, w.str()};
      }
  }
  return {true, ""};
}

namespace {

// Exact point values needed for operators of order <= 2.
class PointValues {
 public:
  PointValues(Pipeline& p, const Point& pt) : p_(p), pt_(pt) {
    for (int a = 0; a < 7; ++a)
      for (int z = 0; z < 7; ++z) E_[a][z] = eval_exact(p.theta().E(a, z), pt);
    for (int z = 0; z < 7; ++z) th_[z] = p.theta().frame[z].eval_exact(pt);
    for (int q = 0; q < 21; ++q) om_[q] = p.curvature().frame[q].eval_exact(pt);
  }

  AlgebraElement R(int k, int l) const {  // 0-based
    if (k == l) return ExactMatrix(7, 7);
    if (k < l) return om_[TwoForm::index(k, l)];
    return om_[TwoForm::index(l, k)] * QSqrt2(-1);
  }

  AlgebraElement nR(int z, int k, int l) {
    if (k == l) return ExactMatrix(7, 7);
    if (k > l) return nR(z, l, k) * QSqrt2(-1);
    ensure_order1();
    return n1_[z * 21 + TwoForm::index(k, l)];
  }

  AlgebraElement nnR(int w, int z, int k, int l) {
    if (k == l) return ExactMatrix(7, 7);
    if (k > l) return nnR(w, z, l, k) * QSqrt2(-1);
    ensure_order1();
    const NablaRField& nf = p_.nabla_field();
    const int q = TwoForm::index(k, l);
    ExactMatrix d(7, 7);
    const ExprMatrix& f = nf.m[z * 21 + q];
    for (int a = 0; a < 7; ++a)
      if (!E_[a][w].is_zero()) d += f.ddx(a + 1).eval_exact(pt_) * E_[a][w];
    const ExactMatrix& thw = th_[w];
    d += commutator(thw, n1_[z * 21 + q]);
    for (int m = 0; m < 7; ++m) {
      if (!thw(m, z).is_zero()) d -= nR(m, k, l) * thw(m, z);
      if (!thw(m, k).is_zero()) d -= nR(z, m, l) * thw(m, k);
      if (!thw(m, l).is_zero()) d -= nR(z, k, m) * thw(m, l);
    }
    return d;
  }

 private:
  void ensure_order1() {
    if (!n1_.empty()) return;
    std::vector<std::array<ExactMatrix, 7>> dom(21);
    for (int q = 0; q < 21; ++q)
      for (int a = 0; a < 7; ++a) {
        bool needed = false;
        for (int z = 0; z < 7; ++z) needed = needed || !E_[a][z].is_zero();
        dom[q][a] = needed ? p_.curvature().frame[q].ddx(a + 1).eval_exact(pt_) : ExactMatrix(7, 7);
      }
    n1_.assign(7 * 21, ExactMatrix(7, 7));
    for (int z = 0; z < 7; ++z)
      for (int k = 0; k < 7; ++k)
        for (int l = k + 1; l < 7; ++l) {
          const int q = TwoForm::index(k, l);
          ExactMatrix d(7, 7);
          for (int a = 0; a < 7; ++a)
            if (!E_[a][z].is_zero()) d += dom[q][a] * E_[a][z];
          const ExactMatrix& thz = th_[z];
          d += commutator(thz, om_[q]);
          for (int m = 0; m < 7; ++m) {
            if (!thz(m, k).is_zero()) d -= R(m, l) * thz(m, k);
            if (!thz(m, l).is_zero()) d -= R(k, m) * thz(m, l);
          }
          n1_[z * 21 + q] = std::move(d);
        }
  }

  Pipeline& p_;
  Point pt_;
  std::array<std::array<QSqrt2, 7>, 7> E_;
  std::array<ExactMatrix, 7> th_;
  std::array<ExactMatrix, 21> om_;
  std::vector<ExactMatrix> n1_;
};

// Adds generators order by order and tracks the bracket closure.
class Generation {
 public:
  Generation(Pipeline& p, const Point& pt) : vals_(p, pt), span_(49) {}

  void add_order(int order) {
    auto offer = [&](const OperatorId& op, const AlgebraElement& v) {
      if (v.is_zero()) return;
      if (span_.insert(flatten(v))) gens_.push_back({op.to_string(), order, v});
    };
    for (int k = 1; k <= 7; ++k)
      for (int l = k + 1; l <= 7; ++l) {
        if (order == 0) {
          offer({0, 0, 0, k, l}, vals_.R(k - 1, l - 1));
          continue;
        }
        for (int z = 1; z <= 7; ++z) {
          if (order == 1) {
            offer({1, 0, z, k, l}, vals_.nR(z - 1, k - 1, l - 1));
            continue;
          }
          for (int w = 1; w <= 7; ++w) offer({2, w, z, k, l}, vals_.nnR(w - 1, z - 1, k - 1, l - 1));
        }
      }
    std::vector<AlgebraElement> g;
    for (const auto& x : gens_) g.push_back(x.value);
    closure_ = bracket_closure(g, "lower_bound");
    dims_.push_back(closure_.dim());
  }

  const SubalgebraSpec& closure() const { return closure_; }
  const std::vector<Generator>& generators() const { return gens_; }
  const std::vector<std::size_t>& dims() const { return dims_; }

 private:
  PointValues vals_;
  LinearSpan span_;
  std::vector<Generator> gens_;
  SubalgebraSpec closure_{"lower_bound", {}, {}};
  std::vector<std::size_t> dims_;
};

void check_order(int max_order) {
  if (max_order < 0 || max_order > 2) throw std::invalid_argument("max order must be 0, 1 or 2");
}

}  // namespace

LowerBound lower_bound(Pipeline& p, const Point& pt, int max_order) {
  check_order(max_order);
  Generation g(p, pt);
  for (int o = 0; o <= max_order; ++o) g.add_order(o);
  return {g.closure(), g.generators(), g.dims()};
}

std::string HolonomyVerdict::summary() const {
  std::ostringstream s;
  if (equal) {
    s << "holonomy algebra equals " << claimed.label() << " (dim " << claimed.dim() << "), generated at order "
      << order_used;
  } else if (!containment_ok && generation_ok) {
    s << "holonomy strictly larger than claimed " << claimed.label() << ": " << containment_witness;
  } else if (!containment_ok) {
    s << "connection form not in " << claimed.label() << ": " << containment_witness;
  } else {
    s << "generation failed: closure dim " << lower_bound_dim << " < " << claimed.dim() << " up to order "
      << (closure_dim.empty() ? 0 : closure_dim.size() - 1);
  }
  return s.str();
}

HolonomyVerdict verify(Pipeline& p, const SubalgebraSpec& claimed, const Point& pt, int max_order) {
  check_order(max_order);
  HolonomyVerdict v;
  v.claimed = claimed;
  const ContainmentResult c = containment(p.theta(), claimed);
  v.containment_ok = c.ok;
  v.containment_witness = c.witness;
  Generation g(p, pt);
  for (int o = 0; o <= max_order; ++o) {
    g.add_order(o);
    const SubalgebraSpec& cl = g.closure();
    const bool covers = std::all_of(claimed.basis.begin(), claimed.basis.end(),
                                    [&](const AlgebraElement& x) { return subspace_contains(cl, x); });
    if (covers) {
      v.generation_ok = true;
      v.order_used = o;
      break;
    }
  }
  v.generators = g.generators();
  v.closure_dim = g.dims();
  v.lower_bound_dim = g.closure().dim();
  v.equal = v.containment_ok && v.generation_ok && v.lower_bound_dim == claimed.dim();
  return v;
}

HolonomyVerdict verify(const Coframe& c, const SubalgebraSpec& claimed, int max_order) {
  Pipeline p(c);
  return verify(p, claimed, origin(), max_order);
}

std::vector<LoopSpec> default_loops(double side, const FloatPoint& center) {
  std::vector<LoopSpec> out;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) out.push_back({{i, j}, center, side});
  return out;
}

namespace {

using Mat = Eigen::Matrix<double, 7, 7>;

Mat to_mat(const FloatMatrix& a) {
  Mat m;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m(i, j) = a[i * 7 + j];
  return m;
}

FloatMatrix from_mat(const Mat& m) {
  FloatMatrix a;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) a[i * 7 + j] = m(i, j);
  return a;
}

Mat theta_along(const ConnectionForm& theta, int dir, const FloatPoint& x) {
  return to_mat(theta.coord[dir].eval_float(x));
}

// Transport along x(s) = x0 + s*sign*e_dir, s in [0, len].
Mat transport_edge(const ConnectionForm& theta, const Mat& V0, FloatPoint x0, int dir, double sign, double len,
                   double step) {
  const int n = std::max(1, static_cast<int>(std::ceil(len / step - 1e-9)));
  const double h = len / n;
  Mat V = V0;
  auto at = [&](double s) {
    FloatPoint x = x0;
    x[dir] += sign * s;
    return x;
  };
  auto f = [&](double s, const Mat& W) -> Mat { return -sign * theta_along(theta, dir, at(s)) * W; };
  for (int i = 0; i < n; ++i) {
    const double s = i * h;
    const Mat k1 = f(s, V);
    const Mat k2 = f(s + h / 2, V + h / 2 * k1);
    const Mat k3 = f(s + h / 2, V + h / 2 * k2);
    const Mat k4 = f(s + h, V + h * k3);
    V += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    if (!V.allFinite()) throw NumericError("parallel transport diverged");
  }
  return V;
}

// Rows: max-normalized flattened matrices.
Eigen::MatrixXd normalized_rows(const std::vector<FloatMatrix>& ms, std::vector<bool>* nonzero = nullptr) {
  Eigen::MatrixXd A(ms.size(), 49);
  for (std::size_t r = 0; r < ms.size(); ++r) {
    double mx = 0;
    for (double x : ms[r]) mx = std::max(mx, std::abs(x));
    for (int j = 0; j < 49; ++j) A(r, j) = mx > 0 ? ms[r][j] / mx : 0.0;
    if (nonzero) nonzero->push_back(mx > 0);
  }
  return A;
}

}  // namespace

NumericHolonomy numeric_holonomy(const ConnectionForm& theta, const std::vector<LoopSpec>& loops, double step) {
  NumericHolonomy out;
  for (const auto& lp : loops) {
    if (!(lp.side > 0)) throw std::invalid_argument("loop side must be positive");
    const int i = lp.plane[0] - 1, j = lp.plane[1] - 1;
    if (i < 0 || i > 6 || j < 0 || j > 6 || i == j) throw std::invalid_argument("bad loop plane");
    const double h = step > 0 ? step : lp.side / 20;
    const double s = lp.side;
    FloatPoint c = lp.center;
    Mat V = Mat::Identity();
    V = transport_edge(theta, V, c, i, 1, s, h);
    c[i] += s;
    V = transport_edge(theta, V, c, j, 1, s, h);
    c[j] += s;
    V = transport_edge(theta, V, c, i, -1, s, h);
    c[i] -= s;
    V = transport_edge(theta, V, c, j, -1, s, h);
    const double dev = (V - Mat::Identity()).norm();
    if (dev >= 0.5) throw NumericError("transport not near identity (|T - I| = " + std::to_string(dev) + ")");
    Mat L = dev == 0 ? Mat::Zero().eval() : Mat(V.log());
    // roundoff floor: genuine logs are O(side^2)
    if (L.cwiseAbs().maxCoeff() < 1e-9 * s * s) L.setZero();
    out.logs.push_back(from_mat(L));
  }
  if (out.logs.empty()) return out;
  const Eigen::MatrixXd A = normalized_rows(out.logs);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  for (int r = 0; r < sv.size(); ++r)
    if (smax > 0 && sv(r) > 1e-7 * smax) {
      ++out.dimension;
      FloatMatrix b;
      for (int k = 0; k < 49; ++k) b[k] = svd.matrixV()(k, r);
      out.basis.push_back(b);
    }
  return out;
}

double span_deviation(const std::vector<FloatMatrix>& logs, const std::vector<AlgebraElement>& span) {
  std::vector<FloatMatrix> sp;
  for (const auto& e : span) {
    FloatMatrix f;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) f[i * 7 + j] = e(i, j).to_double();
    sp.push_back(f);
  }
  Eigen::MatrixXd Q(49, 0);
  if (!sp.empty()) {
    const Eigen::MatrixXd S = normalized_rows(sp).transpose();  // 49 x d
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(S, Eigen::ComputeThinU);
    int r = 0;
    const auto& sv = svd.singularValues();
    while (r < sv.size() && sv(r) > 1e-12 * sv(0)) ++r;
    Q = svd.matrixU().leftCols(r);
  }
  std::vector<bool> nz;
  const Eigen::MatrixXd A = normalized_rows(logs, &nz);
  double worst = 0;
  for (int r = 0; r < A.rows(); ++r) {
    if (!nz[r]) continue;
    const Eigen::VectorXd v = A.row(r).transpose();
    const Eigen::VectorXd res = v - Q * (Q.transpose() * v);
    worst = std::max(worst, res.cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace g2hol
