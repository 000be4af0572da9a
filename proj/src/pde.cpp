#include "g2hol/pde.hpp"

#include <algorithm>
#include <functional>

namespace g2hol {

namespace {

using Ctx = FunctionBundle;

Expr V(int k) { return Expr::var(k); }
Expr C(long n, long d = 1) { return Expr(QSqrt2(Rational(n, d))); }
Expr C2(long n, long d = 1) { return Expr(QSqrt2(Rational(0), Rational(n, d))); }  // (n/d) sqrt2
const Expr kR2 = C2(1);                                                            // sqrt2
const Expr kIR2 = C2(1, 2);                                                        // 1/sqrt2

Expr get(const Ctx& c, const std::string& k) {
  auto it = c.find(k);
  return it == c.end() ? Expr() : it->second;
}

Expr d(const Expr& e, int i) { return ddx(e, i); }
Expr d(const Expr& e, int i, int j) { return ddx(ddx(e, i), j); }
Expr d(const Expr& e, int i, int j, int k) { return ddx(ddx(ddx(e, i), j), k); }

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

// slot -> bar, with the explicit part: slot = bar + explicit(ctx)
struct FormEntry {
  std::string slot;
  std::string bar;
  std::vector<int> bar_vars;
  std::function<Expr(const Ctx&)> explicit_part;
};

struct Constraint {
  std::string tag;
  std::function<Expr(const Ctx&)> lhs_minus_rhs;
};

struct FreeConst {
  std::string name;  // free-schema name of the constant
  std::string bar;   // bar it is added to
};

struct SystemDef {
  std::vector<SlotSchema> slots;
  std::vector<SlotSchema> free;
  // full slots that are free as-is (copied between modes)
  std::vector<std::string> free_full;
  // derived quantities computed from the full bundle before the forms (name, vars, fn)
  std::vector<FormEntry> derived;
  std::vector<FormEntry> forms;
  std::vector<Constraint> constraints;
  // computes bars determined by integration from the free inputs (ctx holds free inputs)
  std::function<void(Ctx&)> determine;
  std::vector<FreeConst> consts;
};

Expr integrate_pair(const Expr& g3, const Expr& g4, int i, int j, const std::string& what) {
  Expr f = antiderivative(g3, i);
  Expr rest = g4 - d(f, j);
  if (!d(rest, i).is_zero())
    throw SynthesisError("unsatisfied precondition: " + what + " is not integrable (cross-derivatives differ)");
  return f + antiderivative(rest, j);
}

void require_vars(const std::string& name, const Expr& e, const std::vector<int>& vars) {
  for (int k = 1; k <= kDim; ++k)
    if (std::find(vars.begin(), vars.end(), k) == vars.end() && e.depends_on(k))
      throw SynthesisError("unsatisfied precondition: input '" + name + "' depends on x" + std::to_string(k));
}

SystemDef make_p1() {
  SystemDef s;
  s.slots = {{"f", {5, 6, 7}, 4, 4},    {"q2", range(2, 7), 1, 5}, {"s2", range(2, 7), 1, 6},
             {"q3", range(2, 7), 2, 5}, {"s3", range(2, 7), 2, 6}, {"q4", {5, 6, 7}, 3, 5},
             {"r5", range(1, 7), 0, 4}, {"r6", range(1, 7), 0, 5}, {"r7", range(1, 7), 0, 6}};
  auto q = [](const Ctx& c, int j) { return get(c, "q" + std::to_string(j)); };
  auto sj = [](const Ctx& c, int j) { return get(c, "s" + std::to_string(j)); };
  // (s)_x6 - (q)_x7 - sum_{j=2..4} (s)_xj q_j + sum_{j=2..3} (q)_xj s_j
  auto bracket_term = [=](const Ctx& c, const Expr& sv, const Expr& qv) {
    Expr t = d(sv, 6) - d(qv, 7);
    for (int j = 2; j <= 4; ++j) t -= d(sv, j) * q(c, j);
    for (int j = 2; j <= 3; ++j) t += d(qv, j) * sj(c, j);
    return t;
  };
  auto G = [](const Ctx& c, const char* n) { return get(c, n); };
  s.constraints = {
      {"(s2 - q3)_x2 = 0", [=](const Ctx& c) { return d(G(c, "s2") - G(c, "q3"), 2); }},
      {"(s2 - q3)_x3 = 0", [=](const Ctx& c) { return d(G(c, "s2") - G(c, "q3"), 3); }},
      {"(s2 - q3)_x4 = -(q4)_x7", [=](const Ctx& c) { return d(G(c, "s2") - G(c, "q3"), 4) + d(G(c, "q4"), 7); }},
      {"f*(r6)_x1 = f_x6", [=](const Ctx& c) { return G(c, "f") * d(G(c, "r6"), 1) - d(G(c, "f"), 6); }},
      {"f_x6 = f*((q2)_x2 + (q3)_x3)",
       [=](const Ctx& c) { return d(G(c, "f"), 6) - G(c, "f") * (d(G(c, "q2"), 2) + d(G(c, "q3"), 3)); }},
      {"f*(r7)_x1 = f_x7", [=](const Ctx& c) { return G(c, "f") * d(G(c, "r7"), 1) - d(G(c, "f"), 7); }},
      {"f_x7 = f*((q3)_x2 + (s3)_x3)",
       [=](const Ctx& c) { return d(G(c, "f"), 7) - G(c, "f") * (d(G(c, "q3"), 2) + d(G(c, "s3"), 3)); }},
      {"(r6)_x2 = -sqrt2*(q3)_x4", [=](const Ctx& c) { return d(G(c, "r6"), 2) + kR2 * d(G(c, "q3"), 4); }},
      {"(r7)_x2 = -sqrt2*(s3)_x4", [=](const Ctx& c) { return d(G(c, "r7"), 2) + kR2 * d(G(c, "s3"), 4); }},
      {"(r6)_x3 = sqrt2*(q2)_x4", [=](const Ctx& c) { return d(G(c, "r6"), 3) - kR2 * d(G(c, "q2"), 4); }},
      {"(r7)_x3 = sqrt2*((q3)_x4 - (q4)_x7)",
       [=](const Ctx& c) { return d(G(c, "r7"), 3) - kR2 * (d(G(c, "q3"), 4) - d(G(c, "q4"), 7)); }},
      {"f*(r6)_x4 = -2*sqrt2*f*((s2)_x6 - (q2)_x7 - sum_j (s2)_xj*q_j + sum_j (q2)_xj*s_j) - (q4)_x5",
       [=](const Ctx& c) {
         return G(c, "f") * d(G(c, "r6"), 4) + C2(2) * G(c, "f") * bracket_term(c, G(c, "s2"), G(c, "q2")) +
                d(G(c, "q4"), 5);
       }},
      {"(r7)_x4 = -2*sqrt2*((s3)_x6 - (q3)_x7 - sum_j (s3)_xj*q_j + sum_j (q3)_xj*s_j)",
       [=](const Ctx& c) { return d(G(c, "r7"), 4) + C2(2) * bracket_term(c, G(c, "s3"), G(c, "q3")); }},
      {"(r5)_x1 = -f/sqrt2*(q4)_x7",
       [=](const Ctx& c) { return d(G(c, "r5"), 1) + kIR2 * G(c, "f") * d(G(c, "q4"), 7); }},
      {"(r5)_x2 = -f/(2*sqrt2)*(r7)_x4",
       [=](const Ctx& c) { return d(G(c, "r5"), 2) + C2(1, 4) * G(c, "f") * d(G(c, "r7"), 4); }},
      {"(r5)_x3 = -1/(2*sqrt2)*(q4)_x5 + f/(2*sqrt2)*(r6)_x4",
       [=](const Ctx& c) {
         return d(G(c, "r5"), 3) + C2(1, 4) * d(G(c, "q4"), 5) - C2(1, 4) * G(c, "f") * d(G(c, "r6"), 4);
       }},
      {"(r5)_x4 = f/sqrt2*((r6)_x7 - (r7)_x6 + (r7)_x1*r6 - (r6)_x1*r7 + sum_j (r7)_xj*q_j - sum_j (r6)_xj*s_j) + "
       "1/sqrt2*((q3)_x5 - (s2)_x5)",
       [=](const Ctx& c) {
         const Expr r6 = G(c, "r6"), r7 = G(c, "r7");
         Expr inner = d(r6, 7) - d(r7, 6) + d(r7, 1) * r6 - d(r6, 1) * r7;
         for (int j = 2; j <= 4; ++j) inner += d(r7, j) * q(c, j);
         for (int j = 2; j <= 3; ++j) inner -= d(r6, j) * sj(c, j);
         return d(G(c, "r5"), 4) - kIR2 * G(c, "f") * inner - kIR2 * (d(G(c, "q3"), 5) - d(G(c, "s2"), 5));
       }},
  };
  return s;
}

SystemDef make_t2b() {
  SystemDef s;
  s.slots = {{"p", {5, 6}, 5, 4},        {"q2", range(3, 7), 1, 5}, {"q3", {5, 6, 7}, 2, 5},
             {"r5", range(1, 7), 0, 4}, {"r6", range(2, 7), 0, 5}, {"r7", range(4, 7), 0, 6}};
  s.free = {{"p", {5, 6}, 0, 0},         {"q2", range(3, 7), 0, 0},        {"q3bar", {5, 6}, 0, 0},
            {"r7bar", {5, 6, 7}, 0, 0},  {"r6bar_const", {5, 6, 7}, 0, 0}, {"r5bar_const", {5, 6, 7}, 0, 0}};
  s.free_full = {"p", "q2"};
  auto p6 = [](const Ctx& c) { return d(get(c, "p"), 6); };
  s.forms = {
      {"q3", "q3bar", {5, 6}, [=](const Ctx& c) { return -p6(c) * V(7); }},
      {"r5", "r5bar", range(3, 7),
       [=](const Ctx& c) { return -p6(c) * V(1) + p6(c) * (C(1) - get(c, "p")) * V(2); }},
      {"r6", "r6bar", range(3, 7), [=](const Ctx& c) { return -p6(c) * V(2); }},
      {"r7", "r7bar", {5, 6, 7}, [=](const Ctx& c) { return -C2(2) * p6(c) * V(4); }},
  };
  auto rhs63 = [](const Ctx& c) {
    const Expr q2 = get(c, "q2"), p = get(c, "p");
    return d(q2, 3) * p + kR2 * d(q2, 4);
  };
  auto rhs64 = [](const Ctx& c) {
    const Expr q2 = get(c, "q2"), p = get(c, "p");
    return d(q2, 4) * p + C2(2) * d(q2, 7);
  };
  auto rhs53 = [=](const Ctx& c) { return rhs63(c) * get(c, "p") + d(get(c, "q2"), 7); };
  auto rhs54 = [](const Ctx& c) {
    const Expr q2 = get(c, "q2"), p = get(c, "p");
    return kIR2 * (d(get(c, "r6bar"), 7) - d(get(c, "r7bar"), 6) + C(3) * d(q2, 7) * p + d(get(c, "q3"), 5)) +
           C(2) * d(p, 6, 6) * V(4) + d(q2, 4) * p * p;
  };
  s.constraints = {
      {"(r6bar)_x3 = (q2)_x3*p + sqrt2*(q2)_x4", [=](const Ctx& c) { return d(get(c, "r6bar"), 3) - rhs63(c); }},
      {"(r6bar)_x4 = (q2)_x4*p + 2*sqrt2*(q2)_x7", [=](const Ctx& c) { return d(get(c, "r6bar"), 4) - rhs64(c); }},
      {"(r5bar)_x3 = ((q2)_x3*p + sqrt2*(q2)_x4)*p + (q2)_x7",
       [=](const Ctx& c) { return d(get(c, "r5bar"), 3) - rhs53(c); }},
      {"(r5bar)_x4 = 1/sqrt2*((r6bar)_x7 - (r7bar)_x6 + 3*(q2)_x7*p + (q3)_x5) + 2*p_x6x6*x4 + (q2)_x4*p^2",
       [=](const Ctx& c) { return d(get(c, "r5bar"), 4) - rhs54(c); }},
  };
  s.consts = {{"r6bar_const", "r6bar"}, {"r5bar_const", "r5bar"}};
  s.determine = [=](Ctx& c) {
    Expr res = check_integrability_2b(get(c, "q2"));
    if (!res.is_zero())
      throw SynthesisError("unsatisfied precondition: (q2)_x4x4 = 2*(q2)_x3x7; residual " + render(res));
    c["q3"] = get(c, "q3bar") - d(get(c, "p"), 6) * V(7);
    c["r6bar"] = integrate_pair(rhs63(c), rhs64(c), 3, 4, "the r6bar system") + get(c, "r6bar_const");
    c["r5bar"] = integrate_pair(rhs53(c), rhs54(c), 3, 4, "the r5bar system") + get(c, "r5bar_const");
  };
  return s;
}

SystemDef make_t2c00() {
  SystemDef s;
  s.slots = {{"p", {5, 6, 7}, 6, 4},        {"q", {5, 6, 7}, 3, 4},   {"q2", {3, 5, 6}, 1, 5},
             {"q3", {4, 5, 6}, 2, 5},       {"q4", {5, 6, 7}, 3, 5},  {"r5", range(1, 7), 0, 4},
             {"r6", {2, 3, 5, 6, 7}, 0, 5}, {"r7", range(3, 7), 0, 6}};
  s.free = {{"a", {5}, 0, 0},           {"b", {5}, 0, 0},           {"qbar", {5, 6}, 0, 0},
            {"q2bar", {5, 6}, 0, 0},    {"q3bar", {5, 6}, 0, 0},    {"r5bar", {5, 6, 7}, 0, 0},
            {"r6bar", {5, 6, 7}, 0, 0}, {"pbar_const0", {5}, 0, 0}, {"pbar_const1", {5}, 0, 0},
            {"q4bar_const", {6}, 0, 0}, {"r7bar_const", {5, 7}, 0, 0}};
  s.derived = {
      {"", "a", {5}, [](const Ctx& c) { return d(get(c, "p"), 6, 7); }},
      {"", "b", {5}, [](const Ctx& c) { return d(get(c, "p"), 7) - d(get(c, "p"), 6, 7) * V(6); }},
  };
  auto lin = [](const Ctx& c) { return get(c, "a") * V(6) + get(c, "b"); };  // a x6 + b
  auto pb6 = [](const Ctx& c) { return d(get(c, "pbar"), 6); };
  s.forms = {
      {"p", "pbar", {5, 6}, [](const Ctx& c) { return get(c, "a") * V(6) * V(7) + get(c, "b") * V(7); }},
      {"q", "qbar", {5, 6},
       [=](const Ctx& c) { return -kIR2 * get(c, "a") * V(7) * V(7) - kR2 * pb6(c) * V(7); }},
      {"q2", "q2bar", {5, 6}, [=](const Ctx& c) { return C(2) * lin(c) * V(3); }},
      {"q3", "q3bar", {5, 6}, [=](const Ctx& c) { return C2(2) * lin(c) * V(4); }},
      {"q4", "q4bar", {5, 6}, [=](const Ctx& c) { return C2(2) * lin(c) * V(7); }},
      {"r5", "r5bar", {5, 6, 7},
       [=](const Ctx& c) {
         const Expr p = get(c, "p");
         return -lin(c) * (C(3) * V(1) + p * V(3)) + (get(c, "a") * V(7) + pb6(c)) * (V(2) - kR2 * p * V(4));
       }},
      {"r6", "r6bar", {5, 6, 7},
       [=](const Ctx& c) { return -C(4) * lin(c) * V(2) - pb6(c) * V(3) - get(c, "a") * V(3) * V(7); }},
      {"r7", "r7bar", {5, 6, 7},
       [=](const Ctx& c) { return -lin(c) * V(3) - kR2 * pb6(c) * V(4) - kR2 * get(c, "a") * V(4) * V(7); }},
  };
  auto rhs_p = [](const Ctx& c) {
    const Expr a = get(c, "a"), b = get(c, "b");
    return C(2) * (a * a * V(6) * V(6) + (C(2) * a * b - d(a, 5)) * V(6) + b * b - d(b, 5));
  };
  auto rhs_q4 = [=](const Ctx& c) { return d(get(c, "qbar"), 6) + C2(2) * lin(c) * get(c, "pbar"); };
  auto rhs_r = [=](const Ctx& c) {
    return lin(c) * (C(2) * get(c, "a") * V(7) * V(7) + get(c, "q3bar") + C2(2) * get(c, "qbar")) +
           kR2 * get(c, "q4bar") * (get(c, "a") * V(7) + pb6(c)) - d(get(c, "q3bar"), 5);
  };
  s.constraints = {
      {"p_x7x7 = 0", [](const Ctx& c) { return d(get(c, "p"), 7, 7); }},
      {"pbar_x6x6 = 2*(a^2*x6^2 + (2*a*b - a')*x6 + b^2 - b')",
       [=](const Ctx& c) { return d(get(c, "pbar"), 6, 6) - rhs_p(c); }},
      {"(q4bar)_x5 - (qbar)_x6 = 2*sqrt2*(a*x6 + b)*pbar",
       [=](const Ctx& c) { return d(get(c, "q4bar"), 5) - rhs_q4(c); }},
      {"(r6bar)_x7 - (r7bar)_x6 = (a*x6 + b)*(2*a*x7^2 + q3bar + 2*sqrt2*qbar) + sqrt2*q4bar*(a*x7 + pbar_x6) - "
       "(q3bar)_x5",
       [=](const Ctx& c) { return d(get(c, "r6bar"), 7) - d(get(c, "r7bar"), 6) - rhs_r(c); }},
  };
  s.consts = {{"pbar_const0", "pbar"}, {"pbar_const1", "pbar"}, {"q4bar_const", "q4bar"}, {"r7bar_const", "r7bar"}};
  s.determine = [=](Ctx& c) {
    c["pbar"] = antiderivative(antiderivative(rhs_p(c), 6), 6) + get(c, "pbar_const0") +
                get(c, "pbar_const1") * V(6);
    c["q4bar"] = antiderivative(rhs_q4(c), 5) + get(c, "q4bar_const");
    c["r7bar"] = antiderivative(d(get(c, "r6bar"), 7) - rhs_r(c), 6) + get(c, "r7bar_const");
  };
  return s;
}

SystemDef make_t2c10() {
  SystemDef s;
  s.slots = {{"p", {5, 6, 7}, 6, 4},     {"q2", {3, 5, 6, 7}, 1, 5}, {"q3", range(4, 7), 2, 5},
             {"q4", {5, 6, 7}, 3, 5},    {"r5", range(1, 7), 0, 4},  {"r6", range(2, 7), 0, 5},
             {"r7", range(3, 7), 0, 6}};
  s.free = {{"p", {5, 6, 7}, 0, 0},      {"r5bar", {5, 6, 7}, 0, 0},     {"r6bar", {5, 6, 7}, 0, 0},
            {"r7bar", {5, 6, 7}, 0, 0},  {"q4_const", {5, 6}, 0, 0},     {"q3bar_const", {5, 6}, 0, 0},
            {"q2bar_const", {5, 6}, 0, 0}};
  s.free_full = {"p"};
  auto p6 = [](const Ctx& c) { return d(get(c, "p"), 6); };
  auto p7 = [](const Ctx& c) { return d(get(c, "p"), 7); };
  s.forms = {
      {"q2", "q2bar", {5, 6, 7}, [=](const Ctx& c) { return C(2) * p7(c) * V(3); }},
      {"q3", "q3bar", {5, 6, 7}, [=](const Ctx& c) { return C2(2) * p7(c) * V(4); }},
      {"r6", "r6bar", {5, 6, 7},
       [=](const Ctx& c) {
         return -C(4) * p7(c) * V(2) - p6(c) * V(3) + kR2 * d(get(c, "q2bar"), 7) * V(4);
       }},
      {"r7", "r7bar", {5, 6, 7}, [=](const Ctx& c) { return -p7(c) * V(3) - C2(2) * p6(c) * V(4); }},
      {"r5", "r5bar", {5, 6, 7},
       [=](const Ctx& c) {
         const Expr p = get(c, "p");
         const Expr lin = d(get(c, "r6bar"), 7) - d(get(c, "r7bar"), 6) - C2(2) * p6(c) * get(c, "q4") -
                          p7(c) * get(c, "q3bar") - C(3) * p6(c) * p + d(get(c, "q3bar"), 5);
         return -C(3) * p7(c) * V(1) + p6(c) * V(2) - p7(c) * p * V(3) +
                (C(2) * d(p, 5, 7) + d(p, 6, 6) - C(2) * p7(c) * p7(c)) * V(4) * V(4) + kIR2 * lin * V(4);
       }},
  };
  s.constraints = {
      {"p_x7x7 = 0", [](const Ctx& c) { return d(get(c, "p"), 7, 7); }},
      {"(q3bar)_x7 = -p_x6", [=](const Ctx& c) { return d(get(c, "q3bar"), 7) + p6(c); }},
      {"(q4)_x7 = 2*sqrt2*p_x7", [=](const Ctx& c) { return d(get(c, "q4"), 7) - C2(2) * p7(c); }},
      {"sqrt2*(q2bar)_x7 = (q4)_x5 - 2*sqrt2*p_x7*p",
       [=](const Ctx& c) {
         return kR2 * d(get(c, "q2bar"), 7) - d(get(c, "q4"), 5) + C2(2) * p7(c) * get(c, "p");
       }},
  };
  s.consts = {{"q4_const", "q4"}, {"q3bar_const", "q3bar"}, {"q2bar_const", "q2bar"}};
  s.determine = [=](Ctx& c) {
    if (!d(get(c, "p"), 7, 7).is_zero()) throw SynthesisError("unsatisfied precondition: p_x7x7 = 0");
    c["q4"] = antiderivative(C2(2) * p7(c), 7) + get(c, "q4_const");
    c["q3bar"] = antiderivative(-p6(c), 7) + get(c, "q3bar_const");
    c["q2bar"] = antiderivative(kIR2 * (d(get(c, "q4"), 5) - C2(2) * p7(c) * get(c, "p")), 7) +
                 get(c, "q2bar_const");
  };
  return s;
}

SystemDef make_t2c11() {
  SystemDef s;
  s.slots = {{"q2", range(3, 7), 1, 5},  {"s", range(4, 7), 1, 6},   {"q3", range(4, 7), 2, 5},
             {"q4", {5, 6, 7}, 3, 5},    {"r5", range(1, 7), 0, 4},  {"r6", range(2, 7), 0, 5},
             {"r7", range(3, 7), 0, 6}};
  s.free = {{"sbar", {5, 6, 7}, 0, 0},  {"q2bar", {5, 6, 7}, 0, 0}, {"q3bar", {5, 6, 7}, 0, 0},
            {"q4", {5, 6, 7}, 0, 0},    {"r5bar", {5, 6, 7}, 0, 0}, {"r6bar", {5, 6, 7}, 0, 0},
            {"r7bar", {5, 6, 7}, 0, 0}};
  s.free_full = {"q4"};
  auto A = [](const Ctx& c) { return d(get(c, "q4"), 7); };
  auto B = [](const Ctx& c) { return d(get(c, "q3bar"), 7); };
  s.forms = {
      {"q3", "q3bar", {5, 6, 7}, [=](const Ctx& c) { return C(2, 3) * A(c) * V(4); }},
      {"s", "sbar", {5, 6, 7}, [=](const Ctx& c) { return -C(1, 3) * A(c) * V(4); }},
      {"q2", "q2bar", {5, 6, 7},
       [=](const Ctx& c) {
         return C2(1, 3) * A(c) * V(3) + C2(1, 3) * d(A(c), 7) * V(4) * V(4) + kR2 * B(c) * V(4);
       }},
      {"r7", "r7bar", {5, 6, 7},
       [=](const Ctx& c) {
         return -C2(1, 3) * A(c) * V(3) + C2(2, 3) * d(A(c), 7) * V(4) * V(4) + C2(2) * B(c) * V(4);
       }},
      {"r6", "r6bar", {5, 6, 7},
       [=](const Ctx& c) {
         const Expr a = A(c), b = B(c), q4 = get(c, "q4");
         return -C2(2, 3) * a * V(2) + C(4, 3) * d(a, 7) * V(3) * V(4) + C(2) * b * V(3) +
                C(4, 9) * d(a, 7, 7) * pow_nat(V(4), 3) + (C2(1, 3) * d(a, 6) + C(2) * d(b, 7)) * V(4) * V(4) +
                (C2(2) * (-d(get(c, "sbar"), 6) + d(get(c, "q2bar"), 7) - C(1, 3) * a * q4) - d(q4, 5)) * V(4);
       }},
      {"r5", "r5bar", {5, 6, 7},
       [=](const Ctx& c) {
         const Expr a = A(c), b = B(c), q4 = get(c, "q4"), sb = get(c, "sbar"), qb2 = get(c, "q2bar"),
                    qb3 = get(c, "q3bar");
         const Expr x4 = V(4);
         Expr r = -kIR2 * a * V(1) - C(2, 3) * d(a, 7) * V(2) * x4 - b * V(2) + C2(1, 6) * d(a, 7) * V(3) * V(3) +
                  C2(1, 3) * d(a, 7, 7) * V(3) * x4 * x4 + (C(1, 3) * d(a, 6) + kR2 * d(b, 7)) * V(3) * x4 -
                  (kIR2 * d(q4, 5) + d(sb, 6) - d(qb2, 7) + C(1, 3) * a * q4) * V(3) +
                  C2(1, 18) * d(a, 7, 7, 7) * pow_nat(x4, 4) +
                  (C2(1, 3) * d(b, 7, 7) - C(1, 9) * d(a, 6, 7)) * pow_nat(x4, 3) +
                  (-d(sb, 6, 7) + d(qb2, 7, 7) + C(1, 3) * d(a, 7) * q4 - C(5, 9) * a * a - d(b, 6)) * x4 * x4;
         const Expr lin = kIR2 * (d(get(c, "r6bar"), 7) - d(get(c, "r7bar"), 6) - d(sb, 5) + d(qb3, 5)) +
                          C(2) * b * q4 - C(1, 3) * qb3 * a + C(2, 3) * a * sb;
         return r + lin * x4;
       }},
  };
  s.determine = [](Ctx&) {};
  return s;
}

SystemDef make_t3b() {
  SystemDef s;
  s.slots = {{"p", {5, 6}, 5, 4},        {"q2", {5, 6, 7}, 1, 5},       {"q3", {5, 6, 7}, 2, 5},
             {"r5", range(1, 7), 0, 4}, {"r6", {2, 4, 5, 6, 7}, 0, 5}, {"r7", range(4, 7), 0, 6}};
  s.free = {{"p", {5, 6}, 0, 0},        {"q2", {5, 6, 7}, 0, 0},    {"q3bar", {5, 6}, 0, 0},
            {"r5hat", {5, 6, 7}, 0, 0}, {"r6hat", {5, 6, 7}, 0, 0}, {"r7hat", {5, 6, 7}, 0, 0}};
  s.free_full = {"p", "q2"};
  auto p6 = [](const Ctx& c) { return d(get(c, "p"), 6); };
  s.forms = {
      {"q3", "q3bar", {5, 6}, [=](const Ctx& c) { return -p6(c) * V(7); }},
      {"r6", "r6hat", {5, 6, 7},
       [=](const Ctx& c) { return -p6(c) * V(2) + C2(2) * d(get(c, "q2"), 7) * V(4); }},
      {"r7", "r7hat", {5, 6, 7}, [=](const Ctx& c) { return -C2(2) * p6(c) * V(4); }},
      {"r5", "r5hat", {5, 6, 7},
       [=](const Ctx& c) {
         const Expr p = get(c, "p"), q2 = get(c, "q2");
         const Expr lin =
             C(3) * d(q2, 7) * p + d(get(c, "q3"), 5) + d(get(c, "r6hat"), 7) - d(get(c, "r7hat"), 6);
         return -p6(c) * V(1) + p6(c) * (C(1) - p) * V(2) + d(q2, 7) * V(3) + kIR2 * lin * V(4) +
                (d(q2, 7, 7) + d(p, 6, 6)) * V(4) * V(4);
       }},
  };
  s.determine = [](Ctx&) {};
  return s;
}

SystemDef make_t4b0() {
  SystemDef s;
  s.slots = {{"p", {5, 6}, 6, 4},
             {"q", {5, 6, 7}, 2, 5},
             {"r5", {2, 4, 5, 6, 7}, 0, 4},
             {"r6", {3, 5, 6, 7}, 0, 5},
             {"r7", range(4, 7), 0, 6}};
  s.free = {{"p", {5, 6}, 0, 0},
            {"qbar", {5, 6}, 0, 0},
            {"r5bar", {5, 6, 7}, 0, 0},
            {"r6bar", {5, 6, 7}, 0, 0},
            {"r7bar", {5, 6, 7}, 0, 0}};
  s.free_full = {"p"};
  auto p6 = [](const Ctx& c) { return d(get(c, "p"), 6); };
  s.forms = {
      {"q", "qbar", {5, 6}, [=](const Ctx& c) { return -p6(c) * V(7); }},
      {"r6", "r6bar", {5, 6, 7}, [=](const Ctx& c) { return -p6(c) * V(3); }},
      {"r7", "r7bar", {5, 6, 7}, [=](const Ctx& c) { return -C2(2) * p6(c) * V(4); }},
      {"r5", "r5bar", {5, 6, 7},
       [=](const Ctx& c) {
         const Expr p = get(c, "p");
         const Expr lin = d(get(c, "r6bar"), 7) - d(get(c, "r7bar"), 6) - C(3) * p6(c) * p -
                          d(p, 6, 5) * V(7) + d(get(c, "qbar"), 5);
         return p6(c) * V(2) + C2(1, 2) * lin * V(4) + d(p, 6, 6) * V(4) * V(4);
       }},
  };
  s.determine = [](Ctx&) {};
  return s;
}

SystemDef make_t4b1() {
  SystemDef s;
  s.slots = {{"q2", range(4, 7), 1, 5},
             {"q3", {5, 6, 7}, 2, 5},
             {"r5", range(2, 7), 0, 4},
             {"r6", range(3, 7), 0, 5},
             {"r7", range(4, 7), 0, 6}};
  s.free = {{"q3", {5, 6, 7}, 0, 0},
            {"q2bar", {5, 6, 7}, 0, 0},
            {"r5bar", {5, 6, 7}, 0, 0},
            {"r6bar", {5, 6, 7}, 0, 0},
            {"r7bar", {5, 6, 7}, 0, 0}};
  s.free_full = {"q3"};
  auto q37 = [](const Ctx& c) { return d(get(c, "q3"), 7); };
  s.forms = {
      {"q2", "q2bar", {5, 6, 7}, [=](const Ctx& c) { return kR2 * q37(c) * V(4); }},
      {"r6", "r6bar", {5, 6, 7},
       [=](const Ctx& c) {
         return C(2) * q37(c) * V(3) + C(2) * d(q37(c), 7) * V(4) * V(4) + C2(2) * d(get(c, "q2bar"), 7) * V(4);
       }},
      {"r7", "r7bar", {5, 6, 7}, [=](const Ctx& c) { return C2(2) * q37(c) * V(4); }},
      {"r5", "r5bar", {5, 6, 7},
       [=](const Ctx& c) {
         const Expr q3 = get(c, "q3"), qb2 = get(c, "q2bar");
         return -q37(c) * V(2) + kR2 * d(q3, 7, 7) * V(3) * V(4) + d(qb2, 7) * V(3) +
                C2(1, 3) * d(q3, 7, 7, 7) * pow_nat(V(4), 3) + (d(qb2, 7, 7) - d(q3, 6, 7)) * V(4) * V(4) +
                kIR2 * (d(get(c, "r6bar"), 7) - d(get(c, "r7bar"), 6) + d(q3, 5)) * V(4);
       }},
  };
  s.determine = [](Ctx&) {};
  return s;
}

const SystemDef& def(SystemId s) {
  static const std::array<SystemDef, 8> defs = {make_p1(),    make_t2b(),  make_t2c00(), make_t2c10(),
                                                make_t2c11(), make_t3b(), make_t4b0(),  make_t4b1()};
  return defs[static_cast<int>(s)];
}

// Bars (and derived quantities) of a full bundle.
Ctx compute_bars(const SystemDef& sd, const FunctionBundle& full) {
  Ctx c = full;
  for (const auto& e : sd.derived) c[e.bar] = e.explicit_part(c);
  for (const auto& e : sd.forms) c[e.bar] = get(c, e.slot) - e.explicit_part(c);
  return c;
}

// Full slots from bars plus full free slots.
FunctionBundle assemble(SystemId s, const SystemDef& sd, Ctx c) {
  for (const auto& e : sd.forms) c[e.slot] = get(c, e.bar) + e.explicit_part(c);
  FunctionBundle out;
  for (const auto& sl : sd.slots) {
    Expr v = get(c, sl.name);
    if (!v.is_zero()) out[sl.name] = v;
  }
  (void)s;
  return out;
}

}  // namespace

std::string to_string(SystemId s) {
  static const std::array<const char*, 8> names = {"P1", "T2B", "T2C00", "T2C10", "T2C11", "T3B", "T4B0", "T4B1"};
  return names[static_cast<int>(s)];
}

SystemId parse_system(const std::string& s) {
  for (SystemId id : kAllSystems)
    if (to_string(id) == s) return id;
  throw std::invalid_argument("unknown system '" + s + "' (expected P1, T2B, T2C00, T2C10, T2C11, T3B, T4B0, T4B1)");
}

std::string system_algebra(SystemId s) {
  switch (s) {
    case SystemId::P1: return "p1";
    case SystemId::T2B: return "2b";
    case SystemId::T2C00: return "2c(0,0)";
    case SystemId::T2C10: return "2c(1,0)";
    case SystemId::T2C11: return "2c(1,1)";
    case SystemId::T3B: return "3b";
    case SystemId::T4B0: return "4b(0)";
    case SystemId::T4B1: return "4b(1)";
  }
  return "";
}

const std::vector<SlotSchema>& schema(SystemId s) { return def(s).slots; }
const std::vector<SlotSchema>& free_schema(SystemId s) { return def(s).free; }

void check_schema(SystemId s, const FunctionBundle& fns) {
  const auto& sl = schema(s);
  for (const auto& [name, e] : fns) {
    auto it = std::find_if(sl.begin(), sl.end(), [&](const SlotSchema& x) { return x.name == name; });
    if (it == sl.end()) throw SchemaError("system " + to_string(s) + " has no slot '" + name + "'");
    for (int k = 1; k <= kDim; ++k)
      if (std::find(it->vars.begin(), it->vars.end(), k) == it->vars.end() && e.depends_on(k))
        throw DependenceViolation(name, k);
  }
}

Coframe build_coframe(SystemId s, const FunctionBundle& fns) {
  check_schema(s, fns);
  Coframe c;
  for (const auto& sl : schema(s)) {
    auto it = fns.find(sl.name);
    if (it != fns.end())
      c.B(sl.row, sl.col) = it->second;
    else if (sl.name == "f")
      c.B(sl.row, sl.col) = Expr(1);
  }
  return c;
}

std::vector<Residual> residuals(SystemId s, const FunctionBundle& fns) {
  check_schema(s, fns);
  const SystemDef& sd = def(s);
  FunctionBundle full = fns;
  if (s == SystemId::P1 && !full.count("f")) full["f"] = Expr(1);
  Ctx c = compute_bars(sd, full);
  std::vector<Residual> out;
  auto forbid = [&](const FormEntry& e) {
    const Expr v = get(c, e.bar);
    for (int k = 1; k <= kDim; ++k)
      if (std::find(e.bar_vars.begin(), e.bar_vars.end(), k) == e.bar_vars.end())
        out.push_back({"(" + e.bar + ")_x" + std::to_string(k) + " = 0", ddx(v, k)});
  };
  for (const auto& e : sd.derived) forbid(e);
  for (const auto& e : sd.forms) forbid(e);
  for (const auto& k : sd.constraints) out.push_back({k.tag, k.lhs_minus_rhs(c)});
  return out;
}

bool all_zero(const std::vector<Residual>& r) {
  return std::all_of(r.begin(), r.end(), [](const Residual& x) { return x.value.is_zero(); });
}

Expr check_integrability_2b(const Expr& q2) { return d(q2, 4, 4) - C(2) * d(q2, 3, 7); }

FunctionBundle synthesize(SystemId s, const FunctionBundle& free_inputs) {
  if (s == SystemId::P1) throw SynthesisError("unsupported: no constructive scheme for system P1");
  const SystemDef& sd = def(s);
  Ctx c;
  for (const auto& [name, e] : free_inputs) {
    auto it = std::find_if(sd.free.begin(), sd.free.end(), [&](const SlotSchema& x) { return x.name == name; });
    if (it == sd.free.end()) throw SchemaError("system " + to_string(s) + " has no free input '" + name + "'");
    require_vars(name, e, it->vars);
    c[name] = e;
  }
  sd.determine(c);
  return assemble(s, sd, c);
}

FunctionBundle extract_free(SystemId s, const FunctionBundle& full) {
  if (s == SystemId::P1) throw SynthesisError("unsupported: no constructive scheme for system P1");
  const SystemDef& sd = def(s);
  check_schema(s, full);
  const Ctx bars = compute_bars(sd, full);
  FunctionBundle out;
  for (const auto& f : sd.free) {
    bool is_const = std::any_of(sd.consts.begin(), sd.consts.end(), [&](const FreeConst& k) { return k.name == f.name; });
    if (is_const) continue;
    Expr v = get(bars, f.name);
    if (!v.is_zero()) out[f.name] = v;
  }
  // integration constants, in order
  for (std::size_t i = 0; i < sd.consts.size(); ++i) {
    const FreeConst& k = sd.consts[i];
    Ctx trial = out;
    sd.determine(trial);
    Expr diff = get(bars, k.bar) - get(trial, k.bar);
    // pbar carries two constants: c0 + c1*x6
    if (k.name == "pbar_const0") {
      Expr c1 = d(diff, 6);
      Expr c0 = diff - c1 * V(6);
      if (!c0.is_zero()) out["pbar_const0"] = c0;
      if (!c1.is_zero()) out["pbar_const1"] = c1;
      ++i;
      continue;
    }
    if (!diff.is_zero()) out[k.name] = diff;
  }
  return out;
}

namespace {

Expr random_poly(std::mt19937_64& rng, const std::vector<int>& vars, int max_terms, int max_deg) {
  std::uniform_int_distribution<int> nterms(0, max_terms), coef(-3, 3), var(0, static_cast<int>(vars.size()) - 1),
      deg(0, max_deg), coin(0, 3);
  Expr e;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    int cv = coef(rng);
    if (cv == 0) cv = 1;
    Expr term = coin(rng) == 0 ? C2(cv) : C(cv);
    const int dd = deg(rng);
    for (int i = 0; i < dd; ++i) term *= V(vars[var(rng)]);
    e += term;
  }
  return e;
}

}  // namespace

FunctionBundle random_admissible(SystemId s, std::mt19937_64& rng) {
  if (s == SystemId::P1) throw SynthesisError("unsupported: no constructive scheme for system P1");
  const SystemDef& sd = def(s);
  FunctionBundle out;
  for (const auto& f : sd.free) {
    const bool is_const = f.name.find("_const") != std::string::npos;
    Expr e = random_poly(rng, f.vars, is_const ? 1 : 2, 2);
    if (!e.is_zero()) out[f.name] = e;
  }
  std::uniform_int_distribution<int> small(-2, 2), pick(1, 3);
  if (s == SystemId::T2B) {
    // q2 = sum_n c_n(x5,x6) L^n with L = m^2 g x3 + sqrt2 m g x4 + g x7, plus affine terms
    Expr q2 = random_poly(rng, {5, 6}, 1, 1) * V(3) + random_poly(rng, {5, 6, 7}, 2, 2);
    for (int rep = 0; rep < 2; ++rep) {
      long m = small(rng), g = pick(rng);
      Expr L = C(m * m * g) * V(3) + C2(m * g) * V(4) + C(g) * V(7);
      q2 += random_poly(rng, {5, 6}, 1, 1) * pow_nat(L, static_cast<unsigned>(pick(rng)));
    }
    if (!q2.is_zero())
      out["q2"] = q2;
    else
      out.erase("q2");
  }
  if (s == SystemId::T2C10) {
    Expr p = random_poly(rng, {5, 6}, 2, 2) + random_poly(rng, {5, 6}, 2, 1) * V(7);
    if (!p.is_zero())
      out["p"] = p;
    else
      out.erase("p");
  }
  return out;
}

}  // namespace g2hol
