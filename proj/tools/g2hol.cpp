#include "g2hol/fixtures.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace g2hol;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

enum Exit { kOk = 0, kFail = 1, kInput = 2 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Point parse_point(const std::vector<std::string>& toks) {
  if (toks.size() != kDim) throw InputError("--point needs exactly 7 rationals");
  Point p;
  for (int i = 0; i < kDim; ++i) {
    try {
      p[i] = Rational::parse(toks[i]);
    } catch (const std::exception&) {
      throw InputError("bad point coordinate '" + toks[i] + "'");
    }
  }
  return p;
}

std::string point_text(const Point& p) {
  std::string s;
  for (int i = 0; i < kDim; ++i) s += (i ? " " : "") + p[i].to_string();
  return s;
}

MetricFixture resolve_fixture(const std::string& name) {
  auto f = find_fixture(name);
  if (!f) throw InputError("unknown fixture '" + name + "'");
  return *f;
}

// Scalar multiple form, e.g. "-2*h(...)", when the leading nonzero slot is not 1.
std::string scaled_form(const HParams& p) {
  int lead = -1;
  for (int i = 0; i < 9 && lead < 0; ++i)
    if (!hparam_slot(p, i).is_zero()) lead = i;
  if (lead < 0) return "0";
  const QSqrt2 c = hparam_slot(p, lead);
  if (c == QSqrt2(1)) return render_hparams_compact(p);
  HParams q;
  const QSqrt2 inv = *c.inverse();
  for (int i = 0; i < 9; ++i) set_hparam_slot(q, i, hparam_slot(p, i) * inv);
  std::string cs = c.to_string();
  if (!c.is_rational() && !c.a().is_zero()) cs = "(" + cs + ")";
  return cs + "*" + render_hparams_compact(q);
}

struct FixtureReport {
  Json json;
  std::string text;
  bool pass = false;
};

FixtureReport verify_fixture(const MetricFixture& f, int max_order, const std::optional<Point>& pt_override) {
  MetricFixture fx = f;
  if (pt_override) fx.point = *pt_override;
  FixtureReport rep;
  std::ostringstream t;
  const SubalgebraSpec claimed = fx.claimed();
  t << "== " << fx.name << " (system " << to_string(fx.system) << ", claim " << claimed.label() << ", dim "
    << claimed.dim() << ", point " << point_text(fx.point) << ")\n";

  Json checks = Json::object();
  const auto res = residuals(fx.system, fx.functions);
  std::size_t nz = 0;
  Json eqs = Json::array();
  for (const auto& r : res) {
    Json e = {{"equation", r.tag}, {"zero", r.value.is_zero()}};
    if (!r.value.is_zero()) {
      ++nz;
      e["value"] = render(r.value);
      t << "  residual NONZERO  " << r.tag << "  :  " << render(r.value) << "\n";
    }
    eqs.push_back(e);
  }
  checks["residuals"] = {{"ok", nz == 0}, {"count", res.size()}, {"equations", eqs}};
  t << "residuals: " << (res.size() - nz) << "/" << res.size() << " zero\n";

  std::cerr << "[" << fx.name << "] connection and curvature\n";
  Pipeline p(fx.coframe());
  bool ops_ok = true;
  Json ops = Json::array();
  const auto cmps = compare_expected(fx, p);
  if (!cmps.empty()) t << "operators:\n";
  for (std::size_t i = 0; i < cmps.size(); ++i) {
    const auto& c = cmps[i];
    ops_ok = ops_ok && c.ok();
    Json comp = Json::object(), exp = Json::object();
    std::string starred;
    for (int s = 0; s < 9; ++s) comp[kHSlots[s]] = hparam_slot(c.computed, s).to_string();
    for (const auto& s : fx.expected[i].slots) {
      exp[s.slot] = s.value ? s.value->to_string() : "*";
      if (!s.value) starred += " " + s.slot;
    }
    ops.push_back({{"op", c.op},
                   {"in_h", c.in_h},
                   {"computed", comp},
                   {"expected", exp},
                   {"ok", c.ok()},
                   {"mismatches", c.mismatches}});
    t << "  " << c.op << " = " << render_hparams(c.computed) << (c.in_h ? "" : "  [not in h]")
      << (c.ok() ? "  ok" : "  MISMATCH");
    if (!starred.empty()) t << "  (starred:" << starred << ")";
    t << "\n";
    for (const auto& m : c.mismatches) t << "    " << m << "\n";
  }
  checks["operators"] = ops;

  std::cerr << "[" << fx.name << "] containment and generation\n";
  const HolonomyVerdict v = verify(p, claimed, fx.point, max_order);
  checks["containment"] = {{"ok", v.containment_ok}, {"witness", v.containment_witness}};
  t << "containment in " << claimed.label() << ": " << (v.containment_ok ? "ok" : "FAILED") << "\n";
  if (!v.containment_ok) t << "  witness: " << v.containment_witness << "\n";
  Json gens = Json::array();
  for (const auto& g : v.generators) gens.push_back({{"op", g.op}, {"order", g.order}});
  checks["generation"] = {{"ok", v.generation_ok},
                          {"max_order", max_order},
                          {"closure_dim_by_order", v.closure_dim},
                          {"order_used", v.order_used},
                          {"claimed_dim", claimed.dim()},
                          {"generators", gens}};
  t << "closure dim by order:";
  for (std::size_t o = 0; o < v.closure_dim.size(); ++o) t << " [" << o << "] " << v.closure_dim[o];
  t << "  (claimed " << claimed.dim() << ")\n";
  if (!v.generation_ok && max_order < 2) t << "  generation incomplete at order " << max_order << "; covariant derivatives of higher order may be needed\n";

  rep.pass = nz == 0 && ops_ok && v.equal;
  t << "verdict: " << (rep.pass ? "PASS" : "FAIL") << "  " << v.summary() << "\n";
  rep.json = {{"name", fx.name},
              {"system", to_string(fx.system)},
              {"claim", claimed.label()},
              {"point", point_text(fx.point)},
              {"checks", checks},
              {"verdict", {{"equal", v.equal}, {"pass", rep.pass}, {"summary", v.summary()}}}};
  rep.text = t.str();
  return rep;
}

int cmd_verify(const std::string& metric, const std::string& fixture, bool all, int max_order,
               const std::vector<std::string>& point, const std::string& format) {
  if ((!metric.empty()) + (!fixture.empty()) + all != 1)
    throw InputError("give exactly one of --metric, --fixture, --all");
  std::optional<Point> pt;
  if (!point.empty()) pt = parse_point(point);
  std::vector<MetricFixture> list;
  if (all)
    list = registry();
  else if (!fixture.empty())
    list.push_back(resolve_fixture(fixture));
  else
    list.push_back(load_fixture(metric));
  Json arr = Json::array();
  std::string text;
  bool ok = true;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list.size() > 1) std::cerr << "[" << (i + 1) << "/" << list.size() << "] " << list[i].name << "\n";
    FixtureReport r = verify_fixture(list[i], max_order, pt);
    ok = ok && r.pass;
    arr.push_back(r.json);
    text += r.text;
  }
  std::size_t passed = 0;
  for (const auto& j : arr) passed += j["verdict"]["pass"].get<bool>();
  if (format == "json") {
    Json out = {{"schema_version", kSchemaVersion}, {"command", "verify"}, {"fixtures", arr},
                {"passed", passed}, {"total", arr.size()}, {"all_pass", ok}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text << passed << "/" << arr.size() << " fixtures pass\n";
  }
  return ok ? kOk : kFail;
}

int cmd_synthesize(const std::string& system, const std::string& input, const std::string& out) {
  std::ifstream in(input);
  if (!in) throw InputError("cannot open '" + input + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  FreeInputFile fi = parse_free_inputs(ss.str(), input);
  std::optional<SystemId> sys = fi.system;
  if (!system.empty()) sys = parse_system(system);
  if (!sys) throw InputError("no system given (use --system or a 'system' line)");
  const MetricFixture f = synthesized_fixture(*sys, fi);
  const std::string text = save_fixture(f);
  if (out.empty())
    std::cout << text;
  else
    save_fixture_file(f, out);
  return kOk;
}

int cmd_curvature(const std::string& metric, const std::string& fixture, const std::string& op_text,
                  const std::vector<std::string>& point, const std::string& format) {
  if ((!metric.empty()) + (!fixture.empty()) != 1) throw InputError("give exactly one of --metric, --fixture");
  const MetricFixture f = fixture.empty() ? load_fixture(metric) : resolve_fixture(fixture);
  const OperatorId op = OperatorId::parse(op_text);
  const Point pt = point.empty() ? f.point : parse_point(point);
  Pipeline p(f.coframe());
  const AlgebraElement m = evaluate_operator(p, op, pt);
  const HDecomposition d = decompose_h(m);
  if (format == "json") {
    Json slots = Json::object();
    for (int s = 0; s < 9; ++s) slots[kHSlots[s]] = hparam_slot(d.params, s).to_string();
    Json out = {{"schema_version", kSchemaVersion}, {"command", "curvature"}, {"fixture", f.name},
                {"op", op.to_string()},     {"point", point_text(pt)},  {"zero", m.is_zero()},
                {"in_h", d.in_h()},         {"hparams", slots},         {"scaled", scaled_form(d.params)}};
    if (!d.in_h()) out["matrix"] = m.to_string();
    std::cout << out.dump(2) << "\n";
  } else if (m.is_zero()) {
    std::cout << op.to_string() << " = 0\n";
  } else {
    std::cout << op.to_string() << " = " << render_hparams_compact(d.params) << "\n";
    const std::string sc = scaled_form(d.params);
    if (sc != render_hparams_compact(d.params)) std::cout << op.to_string() << " = " << sc << "\n";
    if (!d.in_h()) std::cout << "not in h; full matrix:\n" << m.to_string() << "\n";
  }
  return kOk;
}

int cmd_list_algebras(const std::string& format) {
  Json arr = Json::array();
  std::ostringstream t;
  for (const auto& e : catalogue_listing()) {
    const SubalgebraSpec s = catalogue(e.name, e.sample);
    arr.push_back({{"name", e.name}, {"label", s.label()}, {"params", e.params}, {"dim", s.dim()}});
    t << s.label();
    for (std::size_t i = s.label().size(); i < 18; ++i) t << ' ';
    t << "dim " << s.dim();
    if (!e.params.empty()) t << "   " << e.params;
    t << "\n";
  }
  if (format == "json")
    std::cout << Json{{"schema_version", kSchemaVersion}, {"command", "list-algebras"}, {"algebras", arr}}.dump(2)
              << "\n";
  else
    std::cout << t.str() << arr.size() << " algebras\n";
  return kOk;
}

int cmd_numeric(const std::string& fixture, double side, int nloops, const std::string& format) {
  const MetricFixture f = resolve_fixture(fixture);
  if (!(side > 0)) throw InputError("--side must be positive");
  std::vector<LoopSpec> loops = default_loops(side);
  if (nloops < 1 || nloops > 21) throw InputError("--loops must be in 1..21");
  loops.resize(nloops);
  Pipeline p(f.coframe());
  std::cerr << "[" << f.name << "] transporting " << loops.size() << " loops\n";
  const NumericHolonomy nh = numeric_holonomy(p.theta(), loops);
  std::vector<LoopSpec> half = loops;
  for (auto& l : half) l.side /= 2;
  const NumericHolonomy nh2 = numeric_holonomy(p.theta(), half);
  double worst_ratio = 0;
  for (std::size_t i = 0; i < nh.logs.size(); ++i) {
    double a = 0, b = 0;
    for (int k = 0; k < 49; ++k) {
      a += nh.logs[i][k] * nh.logs[i][k];
      b += nh2.logs[i][k] * nh2.logs[i][k];
    }
    // only loops where curvature is the leading term scale by 1/4
    const auto& pl = loops[i].plane;
    if (p.curvature().coord[TwoForm::index(std::min(pl[0], pl[1]) - 1, std::max(pl[0], pl[1]) - 1)].eval_float(loops[i].center) == FloatMatrix{}) continue;
    if (a > 0) worst_ratio = std::max(worst_ratio, std::abs(std::sqrt(b / a) - 0.25) / 0.25);
  }
  const SubalgebraSpec claimed = f.claimed();
  const LowerBound lb = lower_bound(p, f.point, 2);
  const double dev = span_deviation(nh.logs, lb.algebra.basis);
  if (format == "json") {
    Json out = {{"schema_version", kSchemaVersion},
                {"command", "numeric"},
                {"fixture", f.name},
                {"side", side},
                {"loops", loops.size()},
                {"estimated_dim", nh.dimension},
                {"claimed_dim", claimed.dim()},
                {"exact_lower_bound_dim", lb.algebra.dim()},
                {"span_deviation", dev},
                {"half_side_ratio_error", worst_ratio}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "fixture " << f.name << ": estimated holonomy dim " << nh.dimension << " from " << loops.size()
              << " loops of side " << side << " (claimed " << claimed.dim() << ", exact lower bound "
              << lb.algebra.dim() << ")\n";
    std::cout << "max deviation of normalized logs from the exact span: " << dev << "\n";
    std::cout << "convergence: halving the side scales logs by 1/4 within " << worst_ratio * 100 << "%\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact holonomy certificates for Type I split-G2 metrics"};
  app.require_subcommand(1);

  std::string metric, fixture, format = "text", op, system, input, out;
  bool all = false;
  int max_order = 2, nloops = 21;
  double side = 1e-2;
  std::vector<std::string> point;

  auto* v = app.add_subcommand("verify", "verify residuals, containment and generation");
  v->add_option("--metric", metric, "fixture file");
  v->add_option("--fixture", fixture, "built-in fixture name");
  v->add_flag("--all", all, "every built-in fixture");
  v->add_option("--max-order", max_order, "highest covariant derivative order")->check(CLI::Range(0, 2));
  v->add_option("--point", point, "evaluation point (7 rationals)")->expected(7);
  v->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* s = app.add_subcommand("synthesize", "build a coframe from free inputs");
  s->add_option("--system", system, "P1, T2B, T2C00, T2C10, T2C11, T3B, T4B0, T4B1");
  s->add_option("--input", input, "free-input file")->required();
  s->add_option("--out", out, "output fixture file (default stdout)");

  auto* c = app.add_subcommand("curvature", "decompose one curvature operator");
  c->add_option("--metric", metric, "fixture file");
  c->add_option("--fixture", fixture, "fixture name");
  c->add_option("--op", op, "R56, nR5_56, nnR4_5_56, ...")->required();
  c->add_option("--point", point)->expected(7);
  c->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* l = app.add_subcommand("list-algebras", "catalogue with dimensions");
  l->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* n = app.add_subcommand("numeric", "parallel-transport estimate of the holonomy dimension");
  n->add_option("--fixture", fixture)->required();
  n->add_option("--side", side, "loop side");
  n->add_option("--loops", nloops, "number of coordinate-plane loops (1..21)");
  n->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*v) return cmd_verify(metric, fixture, all, max_order, point, format);
    if (*s) return cmd_synthesize(system, input, out);
    if (*c) return cmd_curvature(metric, fixture, op, point, format);
    if (*l) return cmd_list_algebras(format);
    if (*n) return cmd_numeric(fixture, side, nloops, format);
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
