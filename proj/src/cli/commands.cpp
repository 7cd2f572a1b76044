// Copyright 2026 The rittdyn Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"
#include "rittdyn/cli.hpp"
#include "rittdyn/decomp.hpp"
#include "rittdyn/dynamics.hpp"
#include "rittdyn/error.hpp"
#include "rittdyn/expr.hpp"
#include "rittdyn/fiberprod.hpp"
#include "rittdyn/monodromy.hpp"
#include "rittdyn/orbifold.hpp"

namespace rittdyn::cli {
namespace {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Serialization.

json J(const ExactPoint& p) { return p.ToString(); }

json J(const SpherePoint& p) {
  if (auto e = p.as_exact()) return {{"exact", e->ToString()}};
  return {{"re", p.approx.real()}, {"im", p.approx.imag()}, {"error_radius", p.error_radius}};
}

json J(const FiberComponent& c) {
  json pairs = json::array();
  for (auto [i, j] : c.pair_orbit) pairs.push_back({i, j});
  return {{"genus", c.genus},       {"total_degree", c.total_degree}, {"deg_x", c.deg_x},
          {"deg_y", c.deg_y},       {"diagonal", c.is_diagonal},      {"pairs", pairs}};
}

json Components(const std::vector<FiberComponent>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(J(c));
  return a;
}

std::vector<int> Genera(const std::vector<FiberComponent>& cs) {
  std::vector<int> g;
  for (const auto& c : cs) g.push_back(c.genus);
  std::sort(g.begin(), g.end());
  return g;
}

json J(const DecompClass& c) {
  json o = {{"U", c.U.ToString()},
            {"V", c.V.ToString()},
            {"deg_U", c.U.degree()},
            {"deg_V", c.V.degree()},
            {"normalization", c.normalization},
            {"status", c.status == FactorStatus::kExact ? "exact" : "numeric_only"}};
  if (c.blocks) o["block_size"] = c.blocks->block_size;
  return o;
}

int DegreeSum(const std::vector<FiberComponent>& cs) {
  int s = 0;
  for (const auto& c : cs) s += c.total_degree;
  return s;
}

// ---------------------------------------------------------------------------
// Commands.

struct Context {
  const Options& opts;
  std::uint64_t seed;
  json inputs = json::object();
  json results = json::object();
  json verification = json::object();

  PortraitOptions Portrait() const {
    PortraitOptions p;
    p.value_cluster_tol = opts.tol;
    return p;
  }
  MonodromyOptions Mono() const {
    MonodromyOptions m;
    m.portrait = Portrait();
    return m;
  }

  RatFunc Func(const char* name, std::size_t position) {
    const std::optional<std::string>& flag = name[0] == 'A' ? opts.A : opts.B;
    std::string text;
    if (flag) {
      text = *flag;
    } else if (position < opts.functions.size()) {
      text = opts.functions[position];
    } else {
      ThrowPrecondition(std::string("missing function ") + name);
    }
    RatFunc f = ParseFunction(text, opts.degree_guard);
    inputs[name] = {{"text", text}, {"canonical", f.ToString()}, {"degree", f.degree()}};
    return f;
  }
  ExactPoint Point(const char* name, const std::optional<std::string>& v) {
    if (!v) ThrowPrecondition(std::string("missing --") + name);
    ExactPoint p = ParsePoint(*v);
    inputs[name] = p.ToString();
    return p;
  }
};

void RequireDegree(const RatFunc& f, int d, const char* what) {
  if (f.degree() < d) {
    ThrowPrecondition(std::string(what) + " needs degree >= " + std::to_string(d));
  }
}

void Info(Context& c) {
  RatFunc f = c.Func("A", 0);
  RequireDegree(f, 2, "info");
  auto portrait = ComputePortrait(f, c.Portrait());
  json bps = json::array();
  for (const auto& b : portrait.branch_points) {
    bps.push_back({{"value", J(b.value)}, {"partition", b.partition}, {"exact_partition", b.exact_partition}});
  }
  Orbifold target = TargetOrbifold(portrait);
  c.results = {{"degree", f.degree()},
               {"polynomial", f.is_polynomial()},
               {"branch_points", bps},
               {"critical_points", portrait.critical_points.size()},
               {"target_signature", target.signature()},
               {"chi", EulerCharacteristic(target).get_str()},
               {"genus_class", ToString(ClassifyTargetOrbifold(target))}};
  c.verification["riemann_hurwitz"] = portrait.SatisfiesRiemannHurwitz();
}

void Tame(Context& c) {
  RatFunc f = c.Func("A", 0);
  RequireDegree(f, 2, "tame");
  auto r = Tameness(f, c.seed);
  c.results = {{"verdict", r.tame ? "tame" : "wild"},
               {"fast_path", r.fast_path},
               {"class_of_A", ToString(r.class_of_A)},
               {"components", Components(r.components)},
               {"genera", Genera(r.components)},
               {"reason", r.reason}};
  c.results["right_factor"] = r.right_factor ? json(r.right_factor->ToString()) : json(nullptr);
  c.verification["fast_path_consistent"] = r.consistent;
  c.verification["degree_sum"] = DegreeSum(r.components) == f.degree() * f.degree();
}

void Curve(Context& c) {
  RatFunc A = c.Func("A", 0), B = c.Func("B", 1);
  RequireDegree(A, 1, "curve");
  RequireDegree(B, 1, "curve");
  auto cs = CurveComponents(A, B, c.seed, c.Mono());
  c.results = {{"components", Components(cs)}, {"count", cs.size()}, {"genera", Genera(cs)}};
  c.verification["degree_sum"] = DegreeSum(cs) == A.degree() * B.degree();
}

void DecomposeCmd(Context& c) {
  RatFunc f = c.Func("A", 0);
  RequireDegree(f, 2, "decompose");
  auto classes = Decompose(f, c.seed);
  json a = json::array();
  bool ok = true;
  for (const auto& k : classes) {
    a.push_back(J(k));
    if (k.status == FactorStatus::kExact) ok = ok && EqualExact(Compose(k.U, k.V), f);
  }
  c.results = {{"classes", a}, {"count", classes.size()}};
  c.verification["recomposes"] = ok;
}

void Stabilize(Context& c) {
  RatFunc f = c.Func("A", 0);
  RequireDegree(f, 2, "stabilize");
  auto r = InducedStabilization(f, c.opts.dmax, c.seed, c.opts.degree_guard);
  json levels = json::array();
  for (const auto& lv : r.levels) {
    json cls = json::array();
    for (std::size_t k = 0; k < lv.classes.size(); ++k) {
      json o = J(lv.classes[k]);
      if (const auto& w = lv.induced[k]) {
        o["induced_from"] = {{"level", w->level}, {"k1", w->k1}, {"k2", w->k2}};
      } else {
        o["induced_from"] = nullptr;
      }
      cls.push_back(o);
    }
    levels.push_back({{"d", lv.d}, {"classes", cls}});
  }
  c.results = {{"levels", levels},
               {"N", r.N ? json(*r.N) : json(nullptr)},
               {"dmax", c.opts.dmax},
               {"note", "empirical: only iterates up to dmax were enumerated"}};
}

void Equiv(Context& c) {
  RatFunc f = c.Func("A", 0);
  RequireDegree(f, 2, "equiv");
  auto r = EquivalenceClasses(f, c.opts.depth, c.seed);
  json reps = json::array(), edges = json::array();
  for (const auto& g : r.representatives) reps.push_back(g.ToString());
  for (const auto& e : r.edges) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"L", e.L.ToString()}, {"R", e.R.ToString()},
                     {"exact", e.conjugacy.exact}});
  }
  c.results = {{"count", r.count}, {"closed", r.closed}, {"representatives", reps},
               {"edges", edges}, {"depth", c.opts.depth}};
}

RatFunc ModelFunction(const std::string& model) {
  if (model.rfind("z^", 0) == 0) return PowerMap(std::stoi(model.substr(2)));
  bool neg = model[0] == '-';
  RatFunc t = Chebyshev(std::stoi(model.substr(neg ? 3 : 2)));
  return neg ? RatFunc(-t.num()) : t;
}

void Special(Context& c) {
  RatFunc f = c.Func("A", 0);
  RequireDegree(f, 2, "special");
  auto v = SpecialDetect(f);
  c.results = {{"class", ToString(v.cls)}, {"exact", v.exact}, {"note", v.note}};
  c.results["model"] = v.model.empty() ? json(nullptr) : json(v.model);
  c.results["mu"] = v.mu ? json(v.mu->ToString()) : json(nullptr);
  if (v.orbifold) {
    c.results["signature"] = v.orbifold->signature();
    json support = json::array();
    for (const auto& [p, w] : v.orbifold->support) support.push_back({{"point", J(p)}, {"weight", w}});
    c.results["orbifold"] = support;
  }
  if (v.mu) c.verification["witness"] = EqualExact(Conjugate(ModelFunction(v.model), *v.mu), f);
}

void MonodromyCmd(Context& c) {
  RatFunc f = c.Func("A", 0);
  RequireDegree(f, 1, "monodromy");
  auto mopts = c.Mono();
  auto m = Monodromy(f, std::nullopt, c.seed, mopts);
  json bps = json::array(), perms = json::array(), types = json::array();
  for (const auto& b : m.branch_points) bps.push_back(J(b));
  for (const auto& p : m.permutations) {
    perms.push_back(CycleString(p));
    types.push_back(CycleType(p));
  }
  auto order = GroupOrder(m, mpz_class("1000000000000000"));
  c.results = {{"degree", m.degree},
               {"base_point", {{"re", m.base_point.z.real()}, {"im", m.base_point.z.imag()},
                               {"error_radius", m.base_point.error_radius}}},
               {"branch_points", bps},
               {"permutations", perms},
               {"cycle_types", types}};
  c.results["group_order"] = order ? json(order->get_str()) : json("> 10^15");
  auto portrait = ComputePortrait(f, mopts.portrait);
  c.verification["product_one"] = m.CheckProductOne().empty();
  c.verification["transitive"] = m.CheckTransitive().empty();
  c.verification["cycle_types"] = m.CheckCycleTypes(portrait, mopts.match_tol).empty();
}

void Orbit(Context& c) {
  RatFunc f = c.Func("A", 0);
  RequireDegree(f, 1, "orbit");
  ExactPoint x = c.Point("x1", c.opts.x1);
  auto o = ExactOrbit(f, x, c.opts.horizon);
  json pts = json::array();
  for (const auto& p : o.points) pts.push_back(J(p));
  c.results = {{"points", pts}, {"length", o.points.size()}, {"truncated", o.truncated},
               {"bit_cap", kDefaultBitCap}, {"horizon", c.opts.horizon}};
  c.results["preperiodic"] = o.preperiodic
                                 ? json({{"tail", o.preperiodic->first}, {"period", o.preperiodic->second}})
                                 : json(nullptr);
}

void Intersect(Context& c) {
  RatFunc A = c.Func("A", 0), B = c.Func("B", 1);
  ExactPoint x1 = c.Point("x1", c.opts.x1), x2 = c.Point("x2", c.opts.x2);
  auto r = OrbitIntersect(A, x1, B, x2, c.opts.horizon);
  json ms = json::array();
  for (const auto& m : r.matches) ms.push_back({{"k", m.k}, {"l", m.l}, {"point", J(m.point)}});
  bool same = PrimeSetCheck(A, B);
  c.results = {{"matches", ms},         {"count", r.matches.size()}, {"truncated", r.truncated},
               {"note", r.note},        {"same_prime_sets", same},   {"horizon", c.opts.horizon}};
  c.verification["prime_sets_consistent"] = r.matches.size() < 5 || same;
}

void CommonIterate(Context& c) {
  RatFunc A = c.Func("A", 0), B = c.Func("B", 1);
  auto r = CommonIterateSearch(A, B, c.opts.bound, c.opts.degree_guard);
  json tested = json::array();
  for (auto [k, l] : r.tested) tested.push_back({k, l});
  c.results = {{"tested", tested}, {"guard_hit", r.guard_hit}, {"bound", c.opts.bound}};
  c.results["witness"] = r.witness ? json({r.witness->first, r.witness->second}) : json(nullptr);
  if (r.witness) {
    c.verification["witness"] = EqualExact(Iterate(A, r.witness->first, c.opts.degree_guard),
                                           Iterate(B, r.witness->second, c.opts.degree_guard));
  }
}

void Bounds(Context& c) {
  std::optional<RatFunc> A, B;
  if (c.opts.A || !c.opts.functions.empty()) A = c.Func("A", 0);
  if (c.opts.B || c.opts.functions.size() > 1) B = c.Func("B", 1);
  int n = c.opts.n.value_or(A ? A->degree() : 0);
  int m = c.opts.m.value_or(B ? B->degree() : 0);
  if (n < 1 || m < 1) ThrowPrecondition("bounds needs --n and --m, or two functions");
  c.results = {{"n", n},
               {"m", m},
               {"genus_bound", GenusBound(n, m).get_str()},
               {"c1", BoundC1(n).get_str()},
               {"c2", BoundC2(n)},
               {"c2_at_m", BoundC2(m)}};
  if (A && B) {
    auto r = CheckBound(*A, *B, c.seed);
    json comps = json::array();
    for (const auto& v : r.components) {
      json o = J(v.component);
      o["satisfies_bound"] = v.satisfies_bound;
      o["is_graph"] = v.is_graph;
      o["S"] = v.S ? json(v.S->ToString()) : json(nullptr);
      comps.push_back(o);
    }
    c.results["a_tame"] = r.a_tame;
    c.results["components"] = comps;
    c.verification["dichotomy"] = r.dichotomy_holds;
  }
}

const std::map<std::string, std::function<void(Context&)>>& Table() {
  static const std::map<std::string, std::function<void(Context&)>> table = {
      {"info", Info},           {"tame", Tame},         {"curve", Curve},
      {"decompose", DecomposeCmd}, {"stabilize", Stabilize}, {"equiv", Equiv},
      {"special", Special},     {"monodromy", MonodromyCmd}, {"orbit", Orbit},
      {"intersect", Intersect}, {"common-iterate", CommonIterate}, {"bounds", Bounds}};
  return table;
}

// ---------------------------------------------------------------------------
// Human output.

std::string Scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

// Scalars and arrays holding no objects fit in one table cell.
bool IsCell(const json& x) {
  if (x.is_primitive()) return true;
  if (x.is_object()) return false;
  return std::all_of(x.begin(), x.end(), IsCell);
}

bool IsFlat(const json& v) { return v.is_object() && std::all_of(v.begin(), v.end(), IsCell); }

void Text(const json& v, int indent, std::ostringstream& out) {
  std::string pad(indent, ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const json& x = it.value();
    if (x.is_array() && !x.empty() && std::all_of(x.begin(), x.end(), IsFlat)) {
      out << pad << it.key() << ":\n";
      std::vector<std::string> cols;
      for (auto c = x[0].begin(); c != x[0].end(); ++c) cols.push_back(c.key());
      out << pad << "  ";
      for (const auto& c : cols) out << c << '\t';
      out << '\n';
      for (const auto& row : x) {
        out << pad << "  ";
        for (const auto& c : cols) out << (row.contains(c) ? Scalar(row[c]) : "") << '\t';
        out << '\n';
      }
    } else if (x.is_array() && !x.empty() && x[0].is_object()) {
      for (std::size_t k = 0; k < x.size(); ++k) {
        out << pad << it.key() << "[" << k << "]:\n";
        Text(x[k], indent + 2, out);
      }
    } else if (x.is_object()) {
      out << pad << it.key() << ":\n";
      Text(x, indent + 2, out);
    } else if (x.is_array()) {
      out << pad << it.key() << ": ";
      for (std::size_t k = 0; k < x.size(); ++k) out << (k ? ", " : "") << Scalar(x[k]);
      out << '\n';
    } else {
      out << pad << it.key() << ": " << Scalar(x) << '\n';
    }
  }
}

std::string HumanText(const json& report) {
  std::ostringstream out;
  out << report["command"].get<std::string>() << " (seed " << report["seed"].get<std::uint64_t>() << ")\n";
  if (report["status"] == "error") {
    out << "error: " << report["error"]["message"].get<std::string>() << '\n';
    return out.str();
  }
  for (auto it = report["inputs"].begin(); it != report["inputs"].end(); ++it) {
    const json& x = it.value();
    out << it.key() << " = " << (x.is_object() ? x["canonical"].get<std::string>() : Scalar(x)) << '\n';
  }
  Text(report["results"], 0, out);
  for (auto it = report["verification"].begin(); it != report["verification"].end(); ++it) {
    out << "check " << it.key() << ": " << (it.value().get<bool>() ? "ok" : "FAILED") << '\n';
  }
  return out.str();
}

template <typename T>
bool ParseNumber(const std::string& s, T& out) {
  if constexpr (std::is_floating_point_v<T>) {
    try {
      std::size_t used = 0;
      out = std::stod(s, &used);
      return used == s.size();
    } catch (...) {
      return false;
    }
  } else {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
  }
}

Report UsageReport(const std::string& command, const std::string& why) {
  Report r;
  r.exit_code = kExitUsage;
  json j = {{"schema", 1}, {"command", command}, {"status", "usage"}, {"error", {{"message", why}}}};
  r.json = j.dump(2);
  r.text = why + "\n" + Usage();
  return r;
}

}  // namespace

const std::vector<std::string>& Commands() {
  static const std::vector<std::string> commands = {
      "info",    "tame",      "curve", "decompose", "stabilize",      "equiv",
      "special", "monodromy", "orbit", "intersect", "common-iterate", "bounds"};
  return commands;
}

std::string Usage() {
  return "usage: rittdyn <command> [functions...] [flags]\n"
         "commands: info tame curve decompose stabilize equiv special monodromy orbit\n"
         "          intersect common-iterate bounds\n"
         "flags: --seed N --tol X --json --horizon N --dmax N --degree-guard N --depth N\n"
         "       --bound N --n N --m N --A EXPR --B EXPR --x1 POINT --x2 POINT\n";
}

std::uint64_t ResolveSeed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("RITTDYN_SEED")) {
    std::uint64_t v = 0;
    std::string s(env);
    if (ParseNumber(s, v)) return v;
  }
  return 0;
}

Report Execute(const std::string& command, const Options& opts) {
  auto it = Table().find(command);
  if (it == Table().end()) return UsageReport(command, "unknown command '" + command + "'");
  auto t0 = std::chrono::steady_clock::now();
  Context c{opts, ResolveSeed(opts.seed)};
  json report = {{"schema", 1}, {"command", command}, {"seed", c.seed}};
  report["tolerances"] = {{"value_cluster", opts.tol}, {"degree_guard", opts.degree_guard}};
  report["flags"] = {{"json", opts.json},   {"horizon", opts.horizon}, {"dmax", opts.dmax},
                     {"depth", opts.depth}, {"bound", opts.bound}};
  Report r;
  try {
    it->second(c);
    report["status"] = "ok";
  } catch (const Error& e) {
    bool input = e.kind() == ErrorKind::kPrecondition || e.kind() == ErrorKind::kSyntax;
    r.exit_code = input ? kExitPrecondition : kExitNumeric;
    static const char* kKinds[] = {"precondition", "numeric", "internal", "syntax"};
    report["status"] = "error";
    report["error"] = {{"kind", kKinds[static_cast<int>(e.kind())]}, {"message", e.what()}};
    if (auto* s = dynamic_cast<const SyntaxError*>(&e)) report["error"]["offset"] = s->offset();
  }
  report["inputs"] = c.inputs;
  report["results"] = c.results;
  report["verification"] = c.verification;
  for (const auto& [name, ok] : c.verification.items()) {
    if (!ok.get<bool>() && r.exit_code == kExitOk) r.exit_code = kExitNumeric;
  }
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  report["timing"] = {{"wall_ms", ms}};
  r.json = report.dump(2);
  r.text = HumanText(report);
  return r;
}

Report Execute(const std::string& command, const KeyValues& args) {
  Options o;
  for (const auto& [key, value] : args) {
    bool ok = true;
    auto integer = [&](int& dst) { ok = ParseNumber(value, dst); };
    if (key == "arg") {
      o.functions.push_back(value);
    } else if (key == "A") {
      o.A = value;
    } else if (key == "B") {
      o.B = value;
    } else if (key == "x1") {
      o.x1 = value;
    } else if (key == "x2") {
      o.x2 = value;
    } else if (key == "seed") {
      std::uint64_t s = 0;
      ok = ParseNumber(value, s);
      o.seed = s;
    } else if (key == "tol") {
      ok = ParseNumber(value, o.tol) && o.tol > 0;
    } else if (key == "json") {
      ok = value == "1" || value == "true" || value == "0" || value == "false";
      o.json = value == "1" || value == "true";
    } else if (key == "horizon") {
      integer(o.horizon);
    } else if (key == "dmax") {
      integer(o.dmax);
    } else if (key == "degree-guard") {
      integer(o.degree_guard);
    } else if (key == "depth") {
      integer(o.depth);
    } else if (key == "bound") {
      integer(o.bound);
    } else if (key == "n" || key == "m") {
      int v = 0;
      integer(v);
      (key == "n" ? o.n : o.m) = v;
    } else {
      return UsageReport(command, "unknown flag --" + key);
    }
    if (!ok) return UsageReport(command, "bad value '" + value + "' for --" + key);
  }
  return Execute(command, o);
}

}  // namespace rittdyn::cli
