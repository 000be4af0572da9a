#include "g2hol/lie.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace g2hol {

namespace {

QSqrt2 s2() { return QSqrt2::sqrt2(); }

// Sorts (i,j,k) and returns the permutation sign; 0 if an index repeats.
int sort3(int& i, int& j, int& k) {
  int sign = 1;
  if (i > j) std::swap(i, j), sign = -sign;
  if (j > k) std::swap(j, k), sign = -sign;
  if (i > j) std::swap(i, j), sign = -sign;
  if (i == j || j == k) return 0;
  return sign;
}

std::array<QSqrt2, 4> mat2(long a1, long a2, long a3, long a4) {
  return {QSqrt2(a1), QSqrt2(a2), QSqrt2(a3), QSqrt2(a4)};
}

AlgebraElement hA(const std::array<QSqrt2, 4>& a) { return h_matrix(a, 0, {0, 0}, {0, 0}); }
AlgebraElement hv() { return h_matrix(mat2(0, 0, 0, 0), 1, {0, 0}, {0, 0}); }
AlgebraElement hu(int k) {
  std::array<QSqrt2, 2> u{0, 0};
  u[k] = 1;
  return h_matrix(mat2(0, 0, 0, 0), 0, u, {0, 0});
}
AlgebraElement hy(int k) {
  std::array<QSqrt2, 2> y{0, 0};
  y[k] = 1;
  return h_matrix(mat2(0, 0, 0, 0), 0, {0, 0}, y);
}

std::vector<AlgebraElement> m_full() { return {hv(), hu(0), hu(1), hy(0), hy(1)}; }

std::vector<AlgebraElement> semidirect(std::vector<std::array<QSqrt2, 4>> a) {
  std::vector<AlgebraElement> out;
  for (const auto& x : a) out.push_back(hA(x));
  for (auto& x : m_full()) out.push_back(std::move(x));
  return out;
}

bool is_int(const QSqrt2& q, long v) { return q == QSqrt2(v); }

void expect_params(const std::string& name, const std::vector<QSqrt2>& params, std::size_t n) {
  if (params.size() != n)
    throw CatalogueError("catalogue entry '" + name + "' expects " + std::to_string(n) + " parameter(s), got " +
                         std::to_string(params.size()));
}

void validate(const SubalgebraSpec& s) {
  LinearSpan span = span_of(s.basis);
  if (span.dim() != s.basis.size()) throw CatalogueError("catalogue entry '" + s.label() + "': basis is dependent");
  for (std::size_t i = 0; i < s.basis.size(); ++i)
    for (std::size_t j = i + 1; j < s.basis.size(); ++j)
      if (!span.contains(flatten(bracket(s.basis[i], s.basis[j]))))
        throw CatalogueError("catalogue entry '" + s.label() + "': not closed under the bracket");
}

}  // namespace

const ExactMatrix& gram() {
  static const ExactMatrix g = [] {
    ExactMatrix m(7, 7);
    m(0, 4) = m(4, 0) = 1;
    m(1, 5) = m(5, 1) = 1;
    m(2, 6) = m(6, 2) = 1;
    m(3, 3) = -1;
    return m;
  }();
  return g;
}

int ThreeForm::index(int i, int j, int k) {
  // position of (i,j,k) in lexicographic order of 3-subsets of {0..6}
  int idx = 0;
  for (int a = 0; a < i; ++a) idx += (6 - a) * (5 - a) / 2;
  for (int b = i + 1; b < j; ++b) idx += 6 - b;
  return idx + (k - j - 1);
}

QSqrt2 ThreeForm::at(int i, int j, int k) const {
  int s = sort3(i, j, k);
  if (s == 0) return QSqrt2();
  return s > 0 ? c_[index(i, j, k)] : -c_[index(i, j, k)];
}

void ThreeForm::add(int i, int j, int k, const QSqrt2& c) {
  int s = sort3(i, j, k);
  if (s == 0) return;
  c_[index(i, j, k)] += s > 0 ? c : -c;
}

bool ThreeForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const QSqrt2& x) { return x.is_zero(); });
}

ThreeForm& ThreeForm::operator*=(const QSqrt2& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

const ThreeForm& omega() {
  static const ThreeForm w = [] {
    ThreeForm f;
    f.add(0, 5, 6, s2());
    f.add(1, 2, 4, s2());
    // -e4 ^ (e15 - e26 - e37)
    f.add(3, 0, 4, -1);
    f.add(3, 1, 5, 1);
    f.add(3, 2, 6, 1);
    return f;
  }();
  return w;
}

ThreeForm act_on_threeform(const AlgebraElement& x, const ThreeForm& phi) {
  ThreeForm out;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c) {
        QSqrt2 v;
        for (int m = 0; m < 7; ++m) {
          if (!x(m, a).is_zero()) v -= x(m, a) * phi.at(m, b, c);
          if (!x(m, b).is_zero()) v -= x(m, b) * phi.at(a, m, c);
          if (!x(m, c).is_zero()) v -= x(m, c) * phi.at(a, b, m);
        }
        out.add(a, b, c, v);
      }
  return out;
}

bool is_in_g2star(const AlgebraElement& x) { return act_on_threeform(x, omega()).is_zero(); }

bool is_in_so43(const AlgebraElement& x) {
  const ExactMatrix& g = gram();
  return (x.transpose() * g + g * x).is_zero();
}

ExactMatrix g2star_system() {
  ExactMatrix sys(ThreeForm::kSize, 49);
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) {
      ExactMatrix e(7, 7);
      e(r, c) = 1;
      ThreeForm img = act_on_threeform(e, omega());
      for (int t = 0; t < ThreeForm::kSize; ++t) sys(t, r * 7 + c) = img.coeffs()[t];
    }
  return sys;
}

QSqrt2 hparam_slot(const HParams& p, int slot) {
  if (slot < 4) return p.A[slot];
  if (slot == 4) return p.v;
  if (slot < 7) return p.u[slot - 5];
  return p.y[slot - 7];
}

void set_hparam_slot(HParams& p, int slot, const QSqrt2& value) {
  if (slot < 4)
    p.A[slot] = value;
  else if (slot == 4)
    p.v = value;
  else if (slot < 7)
    p.u[slot - 5] = value;
  else
    p.y[slot - 7] = value;
}

int hparam_slot_index(const std::string& name) {
  for (int i = 0; i < 9; ++i)
    if (name == kHSlots[i]) return i;
  return -1;
}

AlgebraElement h_matrix(const std::array<QSqrt2, 4>& a, const QSqrt2& v, const std::array<QSqrt2, 2>& u,
                        const std::array<QSqrt2, 2>& y) {
  const QSqrt2 r = s2();
  const QSqrt2 t = a[0] + a[3];
  ExactMatrix m(7, 7);
  m(0, 0) = t;
  m(0, 1) = -u[1];
  m(0, 2) = u[0];
  m(0, 3) = r * v;
  m(0, 5) = -y[0];
  m(0, 6) = -y[1];
  m(1, 1) = a[0];
  m(1, 2) = a[1];
  m(1, 3) = r * u[0];
  m(1, 4) = y[0];
  m(1, 6) = v;
  m(2, 1) = a[2];
  m(2, 2) = a[3];
  m(2, 3) = r * u[1];
  m(2, 4) = y[1];
  m(2, 5) = -v;
  m(3, 4) = r * v;
  m(3, 5) = r * u[0];
  m(3, 6) = r * u[1];
  m(4, 4) = -t;
  m(5, 4) = u[1];
  m(5, 5) = -a[0];
  m(5, 6) = -a[2];
  m(6, 4) = -u[0];
  m(6, 5) = -a[1];
  m(6, 6) = -a[3];
  return m;
}

AlgebraElement h_matrix(const HParams& p) { return h_matrix(p.A, p.v, p.u, p.y); }

HDecomposition decompose_h(const AlgebraElement& m) {
  if (m.rows() != 7 || m.cols() != 7) throw DimensionMismatch("decompose_h: expected a 7x7 matrix");
  const QSqrt2 half_r = QSqrt2(Rational(0), Rational(1, 2));  // 1/sqrt2
  HParams p;
  p.A = {m(1, 1), m(1, 2), m(2, 1), m(2, 2)};
  p.v = m(0, 3) * half_r;
  p.u = {m(3, 5) * half_r, m(3, 6) * half_r};
  p.y = {-m(0, 5), -m(0, 6)};
  return {p, m - h_matrix(p)};
}

std::string render_hparams(const HParams& p) {
  std::ostringstream os;
  os << "h([[" << p.A[0].to_string() << ", " << p.A[1].to_string() << "], [" << p.A[2].to_string() << ", "
     << p.A[3].to_string() << "]], " << p.v.to_string() << ", (" << p.u[0].to_string() << ", "
     << p.u[1].to_string() << "), (" << p.y[0].to_string() << ", " << p.y[1].to_string() << "))";
  return os.str();
}

std::string render_hparams_compact(const HParams& p) {
  auto vec = [](const std::array<QSqrt2, 2>& w) {
    if (w[0].is_zero() && w[1].is_zero()) return std::string("0");
    return "(" + w[0].to_string() + ", " + w[1].to_string() + ")";
  };
  std::string a;
  if (p.A[1].is_zero() && p.A[2].is_zero()) {
    a = p.A[0].is_zero() && p.A[3].is_zero() ? "0" : "diag(" + p.A[0].to_string() + ", " + p.A[3].to_string() + ")";
  } else {
    a = "[[" + p.A[0].to_string() + ", " + p.A[1].to_string() + "], [" + p.A[2].to_string() + ", " + p.A[3].to_string() + "]]";
  }
  return "h(" + a + ", " + p.v.to_string() + ", " + vec(p.u) + ", " + vec(p.y) + ")";
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) { return commutator(x, y); }

std::vector<QSqrt2> flatten(const AlgebraElement& x) { return x.entries(); }

AlgebraElement unflatten(const std::vector<QSqrt2>& v) { return ExactMatrix(7, 7, v); }

LinearSpan span_of(const std::vector<AlgebraElement>& elems) {
  LinearSpan s(49);
  for (const auto& e : elems) s.insert(flatten(e));
  return s;
}

std::string SubalgebraSpec::label() const {
  if (params.empty()) return name;
  std::string out = name + "(";
  for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + params[i].to_string();
  return out + ")";
}

std::vector<AlgebraElement> m_subspace(int i, int j) {
  std::vector<AlgebraElement> out;
  if (i) out.push_back(hv());
  if (j) out.push_back(hu(0));
  out.push_back(hy(0));
  out.push_back(hy(1));
  return out;
}

SubalgebraSpec catalogue(const std::string& name, const std::vector<QSqrt2>& params) {
  SubalgebraSpec s{name, params, {}};
  const auto X_N_pattern = h_matrix(mat2(0, 1, 0, 0), 0, {0, 1}, {0, 0});
  auto no_params = [&] { expect_params(name, params, 0); };
  if (name == "p1" || name == "gl2_m") {
    no_params();
    s.basis = semidirect({mat2(1, 0, 0, 0), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0), mat2(0, 0, 0, 1)});
  } else if (name == "m" || name == "0_m") {
    no_params();
    s.basis = m_full();
  } else if (name == "sl2_m") {
    no_params();
    s.basis = semidirect({mat2(1, 0, 0, -1), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0)});
  } else if (name == "co2_m") {
    no_params();
    s.basis = semidirect({mat2(1, 0, 0, 1), mat2(0, -1, 1, 0)});
  } else if (name == "b2_m") {
    no_params();
    s.basis = semidirect({mat2(1, 0, 0, 0), mat2(0, 0, 0, 1), mat2(0, 1, 0, 0)});
  } else if (name == "b2hat_m") {
    no_params();
    s.basis = semidirect({mat2(1, 0, 0, 1), mat2(0, 1, 0, 0)});
  } else if (name == "d_m") {
    no_params();
    s.basis = semidirect({mat2(1, 0, 0, 0), mat2(0, 0, 0, 1)});
  } else if (name == "S_m") {
    no_params();
    s.basis = semidirect({mat2(1, 1, 0, 1)});
  } else if (name == "N_m") {
    no_params();
    s.basis = semidirect({mat2(0, 1, 0, 0)});
  } else if (name == "Ca_m") {
    expect_params(name, params, 1);
    const QSqrt2& a = params[0];
    s.basis = semidirect({{a, QSqrt2(-1), QSqrt2(1), a}});
  } else if (name == "s_lambda_m") {
    expect_params(name, params, 1);
    const QSqrt2& l = params[0];
    s.basis = semidirect({{l, QSqrt2(0), QSqrt2(0), l - QSqrt2(1)}, mat2(0, 1, 0, 0)});
  } else if (name == "diag1mu_m") {
    expect_params(name, params, 1);
    const QSqrt2& mu = params[0];
    if (mu.sign() != 0 && ((mu - QSqrt2(1)).sign() > 0 || (mu + QSqrt2(1)).sign() < 0))
      throw CatalogueError("diag1mu_m: mu must lie in [-1, 1]");
    s.basis = semidirect({{QSqrt2(1), QSqrt2(0), QSqrt2(0), mu}});
  } else if (name == "2b") {
    no_params();
    s.basis = {h_matrix(mat2(1, 0, 0, 0), 0, {0, 1}, {0, 0}), hA(mat2(0, 1, 0, 0))};
    for (auto& e : m_subspace(1, 1)) s.basis.push_back(e);
  } else if (name == "2c") {
    expect_params(name, params, 2);
    const bool ok = (is_int(params[0], 0) && is_int(params[1], 0)) || (is_int(params[0], 1) && is_int(params[1], 0)) ||
                    (is_int(params[0], 1) && is_int(params[1], 1));
    if (!ok) throw CatalogueError("2c: (i,j) must be one of (0,0), (1,0), (1,1)");
    s.basis = {hA(mat2(2, 0, 0, 1)), X_N_pattern};
    for (auto& e : m_subspace(is_int(params[0], 1), is_int(params[1], 1))) s.basis.push_back(e);
  } else if (name == "3b") {
    no_params();
    s.basis = {h_matrix(mat2(1, 0, 0, 0), 0, {0, 1}, {0, 0})};
    for (auto& e : m_subspace(1, 1)) s.basis.push_back(e);
  } else if (name == "4b") {
    expect_params(name, params, 1);
    if (!is_int(params[0], 0) && !is_int(params[0], 1)) throw CatalogueError("4b: j must be 0 or 1");
    s.basis = {X_N_pattern};
    for (auto& e : m_subspace(1, is_int(params[0], 1))) s.basis.push_back(e);
  } else {
    throw CatalogueError("unknown catalogue entry '" + name + "'");
  }
  validate(s);
  return s;
}

SubalgebraSpec catalogue_from_label(const std::string& label) {
  auto open = label.find('(');
  if (open == std::string::npos) return catalogue(label);
  if (label.back() != ')') throw CatalogueError("malformed algebra label '" + label + "'");
  std::string name = label.substr(0, open);
  std::string inner = label.substr(open + 1, label.size() - open - 2);
  std::vector<QSqrt2> params;
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      params.push_back(QSqrt2::parse(item));
    } catch (const std::exception& e) {
      throw CatalogueError("bad parameter '" + item + "' in '" + label + "': " + e.what());
    }
  }
  return catalogue(name, params);
}

std::vector<CatalogueListing> catalogue_listing() {
  return {
      {"p1", "", {}},
      {"m", "", {}},
      {"sl2_m", "", {}},
      {"gl2_m", "", {}},
      {"co2_m", "", {}},
      {"b2_m", "", {}},
      {"b2hat_m", "", {}},
      {"d_m", "", {}},
      {"Ca_m", "a (sample a=1)", {QSqrt2(1)}},
      {"S_m", "", {}},
      {"s_lambda_m", "lambda (sample lambda=2)", {QSqrt2(2)}},
      {"diag1mu_m", "mu in [-1,1] (sample mu=1/2)", {QSqrt2(Rational(1, 2))}},
      {"N_m", "", {}},
      {"2b", "", {}},
      {"2c", "(i,j)=(0,0)", {QSqrt2(0), QSqrt2(0)}},
      {"2c", "(i,j)=(1,0)", {QSqrt2(1), QSqrt2(0)}},
      {"2c", "(i,j)=(1,1)", {QSqrt2(1), QSqrt2(1)}},
      {"3b", "", {}},
      {"4b", "j=0", {QSqrt2(0)}},
      {"4b", "j=1", {QSqrt2(1)}},
  };
}

SubalgebraSpec bracket_closure(const std::vector<AlgebraElement>& gens, std::string name) {
  SubalgebraSpec s{std::move(name), {}, {}};
  LinearSpan span(49);
  std::deque<std::size_t> pending;
  auto add = [&](const AlgebraElement& x) {
    if (span.insert(flatten(x))) {
      s.basis.push_back(x);
      pending.push_back(s.basis.size() - 1);
    }
  };
  for (const auto& g : gens) add(g);
  while (!pending.empty()) {
    std::size_t i = pending.front();
    pending.pop_front();
    for (std::size_t j = 0; j < s.basis.size(); ++j)
      if (j != i) add(bracket(s.basis[i], s.basis[j]));
  }
  return s;
}

bool subspace_contains(const SubalgebraSpec& s, const AlgebraElement& x) {
  return span_of(s.basis).contains(flatten(x));
}

bool subspace_equal(const SubalgebraSpec& s1, const SubalgebraSpec& s2) {
  LinearSpan a = span_of(s1.basis), b = span_of(s2.basis);
  if (a.dim() != b.dim()) return false;
  for (const auto& x : s1.basis)
    if (!b.contains(flatten(x))) return false;
  return true;
}

}  // namespace g2hol
