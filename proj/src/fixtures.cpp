#include "g2hol/fixtures.hpp"

#include "fixture_data.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace g2hol {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// "key rest" -> (key, rest)
std::pair<std::string, std::string> split_word(const std::string& s) {
  const auto sp = s.find_first_of(" \t");
  if (sp == std::string::npos) return {s, ""};
  return {s.substr(0, sp), trim(s.substr(sp + 1))};
}

struct PendingFn {
  std::string slot;
  Expr value;
  int line;
};

struct RawFixture {
  MetricFixture f;
  bool have_system = false, have_claim = false;
  std::vector<PendingFn> fns;
};

RawFixture parse_raw(const std::string& text, const std::string& origin) {
  RawFixture r;
  MetricFixture& f = r.f;
  bool& have_system = r.have_system;
  bool& have_claim = r.have_claim;
  std::vector<PendingFn>& fns = r.fns;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> void { throw FixtureError(origin, lineno, msg); };
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      f.comments.push_back(trim(line.substr(1)));
      continue;
    }
    auto [key, rest] = split_word(line);
    if (key == "name") {
      if (rest.empty()) fail("empty name");
      f.name = rest;
    } else if (key == "system") {
      try {
        f.system = parse_system(rest);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      have_system = true;
    } else if (key == "claim") {
      try {
        catalogue_from_label(rest);
      } catch (const std::exception& e) {
        fail(std::string("bad claim: ") + e.what());
      }
      f.claim = rest;
      have_claim = true;
    } else if (key == "point") {
      std::istringstream ps(rest);
      std::string tok;
      int n = 0;
      while (ps >> tok) {
        if (n == kDim) fail("point needs exactly 7 rationals");
        try {
          f.point[n++] = Rational::parse(tok);
        } catch (const std::exception& e) {
          fail("bad point coordinate '" + tok + "'");
        }
      }
      if (n != kDim) fail("point needs exactly 7 rationals");
    } else if (key == "fn") {
      const auto eq = rest.find('=');
      if (eq == std::string::npos) fail("expected 'fn <slot> = <expression>'");
      const std::string slot = trim(rest.substr(0, eq));
      if (slot.empty()) fail("missing slot name");
      Expr e;
      try {
        e = parse(trim(rest.substr(eq + 1)));
      } catch (const ParseError& err) {
        fail(std::string("in slot '") + slot + "': " + err.what());
      }
      if (std::any_of(fns.begin(), fns.end(), [&](const PendingFn& p) { return p.slot == slot; }))
        fail("slot '" + slot + "' given twice");
      fns.push_back({slot, e, lineno});
    } else if (key == "expect") {
      const auto eq = rest.find('=');
      if (eq == std::string::npos) fail("expected 'expect <op> <slot> = <value>|*'");
      auto [op, slot] = split_word(trim(rest.substr(0, eq)));
      try {
        OperatorId::parse(op);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      if (hparam_slot_index(slot) < 0) fail("unknown h-slot '" + slot + "'");
      const std::string val = trim(rest.substr(eq + 1));
      ExpectedSlot es{slot, std::nullopt};
      if (val != "*") {
        try {
          es.value = QSqrt2::parse(val);
        } catch (const std::exception& e) {
          fail("bad value '" + val + "': " + e.what());
        }
      }
      auto it = std::find_if(f.expected.begin(), f.expected.end(), [&](const ExpectedOperator& x) { return x.op == op; });
      if (it == f.expected.end()) {
        f.expected.push_back({op, {}});
        it = f.expected.end() - 1;
      }
      if (std::any_of(it->slots.begin(), it->slots.end(), [&](const ExpectedSlot& x) { return x.slot == slot; }))
        fail("slot '" + slot + "' of " + op + " given twice");
      it->slots.push_back(es);
    } else {
      fail("unknown directive '" + key + "'");
    }
  }
  return r;
}

}  // namespace

MetricFixture parse_fixture(const std::string& text, const std::string& origin) {
  RawFixture r = parse_raw(text, origin);
  MetricFixture& f = r.f;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> void { throw FixtureError(origin, lineno, msg); };
  if (!r.have_system) fail("missing 'system' line");
  if (!r.have_claim) fail("missing 'claim' line");
  for (const auto& p : r.fns) {
    lineno = p.line;
    try {
      check_schema(f.system, {{p.slot, p.value}});
    } catch (const DependenceViolation& e) {
      fail(e.what());
    } catch (const SchemaError& e) {
      fail(e.what());
    }
    f.functions[p.slot] = p.value;
  }
  return f;
}

FreeInputFile parse_free_inputs(const std::string& text, const std::string& origin) {
  RawFixture r = parse_raw(text, origin);
  FreeInputFile out;
  if (r.have_system) out.system = r.f.system;
  out.meta = r.f;
  for (const auto& p : r.fns) out.meta.functions[p.slot] = p.value;
  return out;
}

MetricFixture synthesized_fixture(SystemId s, const FreeInputFile& in) {
  MetricFixture f = in.meta;
  f.system = s;
  f.functions = synthesize(s, in.meta.functions);
  if (f.claim.empty()) f.claim = system_algebra(s);
  return f;
}

std::string save_fixture(const MetricFixture& f) {
  std::ostringstream o;
  for (const auto& c : f.comments) o << "#" << (c.empty() ? "" : " ") << c << "\n";
  if (!f.name.empty()) o << "name " << f.name << "\n";
  o << "system " << to_string(f.system) << "\n";
  o << "claim " << f.claim << "\n";
  o << "point";
  for (const auto& x : f.point) o << " " << x.to_string();
  o << "\n";
  for (const auto& sl : schema(f.system)) {
    auto it = f.functions.find(sl.name);
    if (it != f.functions.end()) o << "fn " << sl.name << " = " << render(it->second) << "\n";
  }
  for (const auto& e : f.expected)
    for (const auto& s : e.slots) o << "expect " << e.op << " " << s.slot << " = " << (s.value ? s.value->to_string() : "*") << "\n";
  return o.str();
}

MetricFixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError(path, 0, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  MetricFixture f = parse_fixture(ss.str(), path);
  if (f.name.empty()) f.name = std::filesystem::path(path).stem().string();
  return f;
}

void save_fixture_file(const MetricFixture& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << save_fixture(f);
}

const std::vector<MetricFixture>& registry() {
  static const std::vector<MetricFixture> all = [] {
    std::vector<MetricFixture> v;
    for (const auto& s : detail::fixture_sources()) v.push_back(parse_fixture(s.text, std::string("built-in ") + s.name));
    return v;
  }();
  return all;
}

MetricFixture flat_fixture() {
  MetricFixture f;
  f.name = "flat";
  f.system = SystemId::T4B1;
  f.claim = "m";
  return f;
}

std::optional<MetricFixture> find_fixture(const std::string& name) {
  for (const auto& f : registry())
    if (f.name == name) return f;
  if (name == "flat") return flat_fixture();
  if (const char* dirs = std::getenv("HOLONOMY_FIXTURE_DIR")) {
    std::stringstream ss(dirs);
    std::string dir;
    while (std::getline(ss, dir, ':')) {
      if (dir.empty()) continue;
      const auto p = std::filesystem::path(dir) / (name + ".fx");
      if (std::filesystem::exists(p)) return load_fixture(p.string());
    }
  }
  return std::nullopt;
}

std::vector<OperatorComparison> compare_expected(const MetricFixture& f, Pipeline& p) {
  std::vector<OperatorComparison> out;
  for (const auto& e : f.expected) {
    OperatorComparison c;
    c.op = e.op;
    const HDecomposition d = decompose_h(evaluate_operator(p, OperatorId::parse(e.op), f.point));
    c.computed = d.params;
    c.in_h = d.in_h();
    for (const auto& s : e.slots) {
      if (!s.value) continue;
      const QSqrt2 got = hparam_slot(d.params, hparam_slot_index(s.slot));
      if (!(got == *s.value))
        c.mismatches.push_back(s.slot + ": expected " + s.value->to_string() + ", got " + got.to_string());
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace g2hol
