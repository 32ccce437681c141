#include "foliationlab/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "foliationlab/classify.hpp"
#include "foliationlab/divisorgraph.hpp"
#include "foliationlab/holonomy.hpp"
#include "foliationlab/reduce2d.hpp"

namespace fl {

using nlohmann::json;

namespace {

const std::vector<std::string> kAnalyses = {"integrability", "multiplicity", "blowup",         "restrict", "classify",
                                            "cs_sum",        "reduce2d",     "monomial_probe", "graph",    "holonomy"};

int variable_index(const std::string& name, int n) {
  for (int i = 0; i < n; ++i) {
    if (name == variable_name(n, i)) return i;
  }
  throw Error(ErrorCode::SchemaError, "unknown variable " + name);
}

CenterSpec parse_center(const json& j, int n, long d) {
  const auto kind = j.at("kind").get<std::string>();
  const auto& coords = j.at("coords");
  if (static_cast<int>(coords.size()) != n) throw Error(ErrorCode::SchemaError, "center needs one entry per variable");
  CenterSpec c;
  for (const auto& v : coords) {
    if (v.is_null()) {
      c.coords.emplace_back();
    } else {
      c.coords.emplace_back(parse_field_element(v.get<std::string>(), d));
    }
  }
  int fixed = static_cast<int>(c.center_vars().size());
  if (kind == "point") {
    if (fixed != n) throw Error(ErrorCode::SchemaError, "a point center fixes every coordinate");
    c.kind = CenterSpec::Kind::Point;
  } else if (kind == "curve") {
    if (n != 3 || fixed != 2) throw Error(ErrorCode::SchemaError, "a curve center fixes two of three coordinates");
    c.kind = CenterSpec::Kind::Curve;
  } else {
    throw Error(ErrorCode::SchemaError, "center kind " + kind);
  }
  return c;
}

cplx complex_of(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::SchemaError, "complex numbers are [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

std::vector<std::string> strings(const std::vector<FieldElement>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

bool singular_origin(const OneForm& w) {
  OneForm p = w.plain();
  return std::all_of(p.coeff.begin(), p.coeff.end(), [](const Polynomial& c) { return c.constant_term().is_zero(); });
}

json classification_json(const PointClassification& c, int n) {
  json j;
  j["type"] = to_string(c.type);
  j["residues"] = strings(c.residues);
  std::vector<std::string> vars;
  for (int v : c.residue_vars) vars.push_back(v < 0 ? "-" : variable_name(n, v));
  j["residue_vars"] = vars;
  j["saddle_nodal"] = c.saddle_nodal ? json(to_string(*c.saddle_nodal)) : json(nullptr);
  if (c.eigenvalues) j["eigenvalues"] = {c.eigenvalues->first.to_string(), c.eigenvalues->second.to_string()};
  j["resonant"] = c.resonant;
  std::vector<std::string> witness;
  for (const auto& m : c.resonance_witness) witness.push_back(m.get_str());
  j["resonance_witness"] = witness;
  j["dimensional_type"] = c.dimensional_type;
  j["dimensional_type_exact"] = c.dimensional_type_exact;
  j["dicritical_eliminated"] = c.dicritical_eliminated;
  return j;
}

struct Context {
  const Scenario& s;
  const RunOptions& opts;
  OneForm form;
  std::optional<BlowupAtlas> atlas;
  json results = json::object();
  std::vector<std::string> violations;
  json errors = json::array();
  std::map<std::string, std::string> artifacts;

  const BlowupAtlas& get_atlas() {
    if (!atlas) atlas = run_script(form, s.script, s.field_d, s.divisor);
    return *atlas;
  }
};

void run_blowup(Context& cx) {
  const BlowupAtlas& a = cx.get_atlas();
  json steps = json::array();
  for (const auto& st : a.steps()) {
    json charts = json::object();
    for (const auto& [label, r] : st.chart_r) charts[label] = r;
    steps.push_back({{"step", st.step},
                     {"chart", st.chart},
                     {"center", st.center.to_string()},
                     {"order", st.order},
                     {"dicritical", st.dicritical},
                     {"chart_r", charts}});
  }
  json comps = json::array();
  for (const auto& c : a.components()) {
    comps.push_back({{"name", c.name},
                     {"created_at", c.created_at},
                     {"compact", c.compact},
                     {"invariant", c.invariant},
                     {"curve_center", c.curve_center}});
  }
  std::vector<std::string> leaves;
  for (const auto* c : a.leaves()) leaves.push_back(c->label);
  cx.results["blowup"] = {{"steps", steps}, {"components", comps}, {"leaves", leaves}};
}

void run_classify(Context& cx) {
  const BlowupAtlas& a = cx.get_atlas();
  json out = json::array();
  for (const auto* chart : a.leaves()) {
    json rec{{"chart", chart->label}, {"form", chart->form.to_string()}};
    rec["singular"] = singular_origin(chart->form);
    if (rec["singular"]) {
      LocalDivisor div{a.invariant_divisor_vars(*chart), a.dicritical_divisor_vars(*chart)};
      rec["classification"] = classification_json(classify_point(chart->form, div, cx.opts.truncation), a.nvars());
    }
    out.push_back(rec);
  }
  cx.results["classify"] = out;
}

void run_restrict(Context& cx) {
  if (cx.s.dimension != 3) throw Error(ErrorCode::DimensionError, "restriction to the exceptional plane needs n = 3");
  OneForm w = saturate(cx.form).form;
  bool dicritical = detect_dicritical(w, CenterSpec::origin(3));
  json rec{{"dicritical", dicritical}};
  if (dicritical) {
    PlaneFoliation p = restrict_to_exceptional(w);
    rec["foliation"] = p.to_string();
    rec["degree"] = p.degree;
    rec["nu"] = p.nu;
    rec["degree_law"] = p.degree + 1 == p.nu;
    if (p.degree + 1 != p.nu) cx.violations.push_back("restrict: d + 1 != nu");
  }
  cx.results["restrict"] = rec;
}

void run_cs_sum(Context& cx) {
  if (cx.s.dimension != 2) throw Error(ErrorCode::DimensionError, "the Camacho-Sad sum needs n = 2");
  json idx = json::array();
  FieldElement sum;
  for (const auto& [label, v] : cs_indices_after_blowup(cx.form)) {
    idx.push_back({{"point", label}, {"index", v.to_string()}});
    sum += v;
  }
  bool ok = sum == FieldElement(-1);
  if (!ok) cx.violations.push_back("cs_sum: sum " + sum.to_string() + " != -1");
  cx.results["cs_sum"] = {{"indices", idx}, {"sum", sum.to_string()}, {"matches", ok}};
}

void run_reduce2d(Context& cx) {
  if (cx.s.dimension != 2) throw Error(ErrorCode::DimensionError, "reduce2d needs n = 2");
  ReductionTree t = reduce(cx.form, cx.opts.max_depth, false, cx.opts.truncation);
  json curves = json::array();
  for (const auto& c : t.curves) {
    curves.push_back({{"name", c.name}, {"self_intersection", c.self_intersection}, {"dicritical", c.dicritical}});
  }
  json leaves = json::array();
  for (const auto* l : t.leaves()) {
    leaves.push_back({{"path", l->path},
                      {"type", to_string(l->classification.type)},
                      {"residues", strings(l->classification.residues)}});
  }
  auto verdict = verdict_generalized_curve(t);
  json rec{{"blowups", t.blowups},
           {"depth", t.depth},
           {"complete", t.complete},
           {"curves", curves},
           {"leaves", leaves},
           {"verdict", verdict.generalized_curve ? "GeneralizedCurve" : "SaddleNodeFound"},
           {"saddle_nodes", verdict.saddle_nodes},
           {"nodal_separators", detect_nodal_separators(t)}};
  if (verdict.generalized_curve) {
    json audit = json::array();
    for (const auto& r : cs_sum_audit(t)) {
      json idx = json::array();
      for (const auto& [path, v] : r.indices) idx.push_back({{"point", path}, {"index", v.to_string()}});
      audit.push_back({{"curve", r.curve},
                       {"self_intersection", r.self_intersection},
                       {"indices", idx},
                       {"sum", r.sum.to_string()},
                       {"matches", r.matches}});
      if (!r.matches) cx.violations.push_back("reduce2d: Camacho-Sad sum mismatch on " + r.curve);
    }
    rec["cs_audit"] = audit;
  }
  cx.results["reduce2d"] = rec;
  if (cx.opts.dot) cx.artifacts["reduce2d.dot"] = to_dot(t);
}

void run_monomial_probe(Context& cx) {
  json out = json::array();
  for (const auto& b : cx.s.monomial_probes) {
    std::vector<FieldElement> lam;
    for (const auto& x : b.at("lambda")) lam.push_back(parse_field_element(x.get<std::string>(), cx.s.field_d));
    auto a = b.at("a").get<std::vector<int>>();
    auto w = b.at("b").get<std::vector<int>>();
    if (a.size() != lam.size() || w.size() != lam.size()) throw Error(ErrorCode::SchemaError, "probe weight length");
    auto p = monomial_probe(lam, a, w);
    auto nr = nonresonant(lam);
    out.push_back({{"lambda", strings(lam)},
                   {"a", a},
                   {"b", w},
                   {"alpha", p.alpha.to_string()},
                   {"beta", p.beta.to_string()},
                   {"witness", p.saddle_node_witness},
                   {"resonant", nr.resonant}});
    if (!nr.resonant && p.saddle_node_witness) cx.violations.push_back("monomial_probe: witness for a nonresonant vector");
  }
  cx.results["monomial_probe"] = out;
}

void run_graph(Context& cx) {
  DivisorGraph g = cx.s.graph.is_null() ? from_atlas(cx.get_atlas(), cx.opts.truncation) : graph_from_json(cx.s.graph);
  json rec{{"provenance", to_string(g.provenance)},
           {"components", g.components.size()},
           {"curves", g.curves.size()},
           {"points", g.points.size()}};
  auto viol_json = [](const std::vector<Violation>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back({{"rule", x.rule}, {"subject", x.subject}, {"message", x.message}});
    return out;
  };
  auto invalid = validate(g);
  rec["validate"] = viol_json(invalid);
  for (const auto& v : invalid) cx.violations.push_back("graph: " + v.rule + " at " + v.subject);
  cx.artifacts["graph.json"] = to_json(g).dump(2) + "\n";
  if (cx.opts.dot) cx.artifacts["graph.dot"] = to_dot(g);
  if (!invalid.empty()) {
    cx.results["graph"] = rec;
    return;
  }
  json ncs = json::array();
  for (const auto& nc : nodal_components(g)) {
    ncs.push_back({{"curves", nc.curves}, {"compact", nc.compact}, {"meets_dicritical", nc.meets_dicritical}});
  }
  rec["nodal_components"] = ncs;
  rec["regular_components"] = regular_components(g);
  auto t3 = theorem3_verdict(g);
  json t3v = json::array();
  for (const auto& nc : t3.violations) {
    t3v.push_back(nc.curves);
    std::string names;
    for (const auto& c : nc.curves) names += (names.empty() ? "" : " ") + c;
    cx.violations.push_back("graph: compact nodal component {" + names + "} misses the dicritical components");
  }
  rec["theorem3"] = {{"verdict", t3.holds ? "Holds" : "Violations"}, {"violations", t3v}};
  auto incompat = trace_incompatibility_check(g);
  rec["trace_incompatibility"] = viol_json(incompat);
  for (const auto& v : incompat) cx.violations.push_back("graph: trace incompatibility " + v.subject);
  if (g.fiber) {
    json seps = json::array();
    for (const auto& s : separatrix_components(g)) {
      seps.push_back({{"id", s.id},
                      {"locus", s.locus == TraceLocus::STr ? "STr" : "ITr"},
                      {"members", s.members},
                      {"closed_immersion", s.closed_immersion}});
    }
    rec["separatrix_components"] = seps;
    auto p6 = prop6_checks(g);
    json checks = json::array();
    for (const auto& c : p6.checks) {
      checks.push_back({{"item", c.item}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    rec["prop6"] = {{"asserted", cx.s.no_invariant_surface},
                    {"passed", p6.passed()},
                    {"checks", checks},
                    {"certificates", p6.certificates}};
    if (cx.s.no_invariant_surface && !p6.passed()) {
      for (const auto& c : p6.checks) {
        if (!c.passed) cx.violations.push_back("graph: invariant-surface check " + std::to_string(c.item) + " failed");
      }
    }
  } else if (cx.s.no_invariant_surface) {
    throw Error(ErrorCode::MissingFiberData, "no_invariant_surface is asserted but the graph has no fiber data");
  }
  cx.results["graph"] = rec;
}

NumericConfig numeric_config(const json& b) {
  NumericConfig cfg;
  cfg.step = b.value("step", cfg.step);
  cfg.tolerance = b.value("tolerance", cfg.tolerance);
  cfg.max_path_length = b.value("max_path_length", cfg.max_path_length);
  return cfg;
}

LinearModel model_of(const json& b) {
  LinearModel m;
  if (b.contains("r")) {
    m = LinearModel::nodal(b.at("r").get<std::vector<double>>(), b.at("k").get<int>());
  } else {
    for (const auto& l : b.at("lambda")) m.lambda.push_back(complex_of(l));
  }
  m.delta = b.value("delta", 1.0);
  return m;
}

BasePath path_of(const json& b) {
  BasePath p;
  for (const auto& x : b.at("base")) p.start.push_back(complex_of(x));
  for (const auto& leg : b.value("legs", json::array())) {
    PathLeg l;
    for (const auto& w : leg) l.w.push_back(complex_of(w));
    if (l.w.size() != p.start.size()) throw Error(ErrorCode::SchemaError, "leg length must match the base");
    p.legs.push_back(l);
  }
  return p;
}

void run_holonomy(Context& cx) {
  json out = json::array();
  int index = 0;
  for (const auto& b : cx.s.holonomy) {
    ++index;
    const auto kind = b.at("kind").get<std::string>();
    const NumericConfig cfg = numeric_config(b);
    json rec{{"kind", kind}};
    const std::string tag = "holonomy[" + std::to_string(index) + "]: ";
    if (kind == "loop") {
      cplx lambda = complex_of(b.at("lambda"));
      int turns = b.value("turns", 1);
      cplx start = complex_of(b.at("start"));
      LinearModel m = LinearModel::planar(lambda, b.value("delta", 1.0));
      cplx base = complex_of(b.at("base"));
      cplx closed = start * loop_multiplier(lambda, turns);
      cplx lifted = lift_path(m, 1, BasePath::circle({base}, 0, turns), start, cfg);
      double err = std::abs(lifted - closed);
      double formula = std::exp(-2 * std::numbers::pi * turns * lambda.imag() / std::norm(lambda));
      double modulus_err = std::abs(std::abs(loop_multiplier(lambda, turns)) - formula);
      rec.update({{"closed_form", complex_json(closed)},
                  {"lifted", complex_json(lifted)},
                  {"error", err},
                  {"modulus_formula_error", modulus_err},
                  {"within_tolerance", err < cfg.tolerance && modulus_err < cfg.tolerance}});
      if (!rec["within_tolerance"]) cx.violations.push_back(tag + "lift disagrees with the closed form");
    } else if (kind == "drift") {
      LinearModel m = model_of(b);
      double drift = nodal_first_integral_drift(m, b.value("fiber", 0), path_of(b), complex_of(b.at("start")), cfg);
      double bound = b.value("bound", 1e-6);
      rec.update({{"drift", drift}, {"bound", bound}, {"conserved", drift < bound}});
      if (drift >= bound) cx.violations.push_back(tag + "first integral drift above bound");
    } else if (kind == "lemma4") {
      double lambda = b.at("lambda").get<double>(), rho = b.at("rho").get<double>(), eps = b.at("epsilon").get<double>();
      int samples = b.value("samples", 100);
      double c = lemma4_constant(lambda, rho, eps);
      int reached = lemma4_reach_count(lambda, rho, eps, b.value("delta", 1.0), complex_of(b.at("alpha")), nullptr,
                                       samples, b.value("seed", 1), cfg);
      rec.update({{"c", c}, {"samples", samples}, {"reached", reached}});
      if (reached != samples) cx.violations.push_back(tag + "not every sample reached the transversal");
    } else if (kind == "probe") {
      LinearModel m = model_of(b);
      Transversal t;
      t.ell = b.at("ell").get<int>();
      for (const auto& x : b.at("mu")) t.mu.push_back(complex_of(x));
      t.epsilon = b.at("epsilon").get<double>();
      SampleGrid grid;
      grid.n = b.value("n", 20);
      grid.base_max = b.value("base_max", 0.0);
      grid.fiber_max = b.value("fiber_max", 0.0);
      if (b.contains("fiber_max_lemma4")) {
        const auto& l = b.at("fiber_max_lemma4");
        grid.fiber_max = lemma4_constant(l.at("lambda").get<double>(), l.at("rho").get<double>(),
                                         l.at("epsilon").get<double>());
      }
      ProbeResult r = saturation_probe(m, t, grid, cfg);
      rec.update({{"grid", grid.n},
                  {"reached_fraction", r.reached_fraction},
                  {"unreached", r.unreached.size()}});
      if (m.real()) {
        // The first integral is constant on leaves; Delta covers the values on one side of its value at the rim.
        double log_thr = m.lambda[t.ell].real() * std::log(t.epsilon);
        for (int i = 0; i < m.tau(); ++i) {
          if (i != t.ell) log_thr += m.lambda[i].real() * std::log(std::abs(t.mu[i]));
        }
        const bool below = m.lambda[t.ell].real() > 0;
        int mis = 0;
        for (const auto& p : r.points) {
          double v = log_first_integral(m, p.x);
          if (p.reached != (below ? v < log_thr : v > log_thr)) ++mis;
        }
        rec["threshold"] = std::exp(log_thr);
        rec["misclassified"] = mis;
        if (mis != 0) cx.violations.push_back(tag + "probe disagrees with the first-integral threshold");
      } else if (r.reached_fraction != 1.0) {
        cx.violations.push_back(tag + "complex saddle probe left points unreached");
      }
      if (cx.opts.csv) cx.artifacts["probe" + std::to_string(index) + ".csv"] = to_csv(r);
    } else {
      throw Error(ErrorCode::SchemaError, "holonomy block kind " + kind);
    }
    out.push_back(rec);
  }
  cx.results["holonomy"] = out;
}

}  // namespace

bool Scenario::wants(const std::string& analysis) const {
  return std::find(analyses.begin(), analyses.end(), analysis) != analyses.end();
}

Scenario parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                                           e.what());
  }
  try {
    Scenario s;
    s.source = j;
    s.name = j.at("name").get<std::string>();
    s.dimension = j.value("dimension", 2);
    if (s.dimension != 2 && s.dimension != 3) throw Error(ErrorCode::SchemaError, "dimension must be 2 or 3");
    s.field_d = j.value("field_d", 0L);
    if (j.contains("form")) {
      const auto& f = j.at("form");
      s.coefficients = f.at("coefficients").get<std::vector<std::string>>();
      s.log = f.value("log", std::vector<bool>(s.coefficients.size(), false));
      if (static_cast<int>(s.coefficients.size()) != s.dimension || s.log.size() != s.coefficients.size()) {
        throw Error(ErrorCode::SchemaError, "form needs one coefficient and log flag per variable");
      }
    }
    for (const auto& v : j.value("divisor", std::vector<std::string>{})) {
      s.divisor.push_back(variable_index(v, s.dimension));
    }
    for (const auto& st : j.value("script", json::array())) {
      s.script.push_back({st.value("chart", std::vector<std::string>{}), parse_center(st.at("center"), s.dimension, s.field_d)});
    }
    s.analyses = j.value("analyses", std::vector<std::string>{});
    for (const auto& a : s.analyses) {
      if (std::find(kAnalyses.begin(), kAnalyses.end(), a) == kAnalyses.end()) {
        throw Error(ErrorCode::SchemaError, "unknown analysis " + a);
      }
    }
    s.no_invariant_surface = j.value("flags", json::object()).value("no_invariant_surface", false);
    s.graph = j.value("graph", json());
    s.holonomy = j.value("holonomy", json::array());
    s.monomial_probes = j.value("monomial_probes", json::array());
    s.expected_exit = j.value("expect", json::object()).value("exit_code", 0);
    if (s.coefficients.empty()) {
      for (const auto& a : s.analyses) {
        if (a != "graph" && a != "holonomy" && a != "monomial_probe") {
          throw Error(ErrorCode::SchemaError, "analysis " + a + " needs a form");
        }
      }
      if (s.wants("graph") && s.graph.is_null()) throw Error(ErrorCode::SchemaError, "graph analysis needs a form or a graph");
    }
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  }
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

RunResult run_scenario(const Scenario& s, const RunOptions& opts) {
  Context cx{s, opts, OneForm(), std::nullopt};
  json report;
  report["tool"] = "foliation-lab";
  report["version"] = kToolVersion;
  report["scenario"] = s.name;
  std::ostringstream hash;
  hash << std::hex << fnv1a64(s.source.dump());
  report["scenario_hash"] = hash.str();

  std::vector<std::string> todo;
  if (opts.only.empty()) {
    todo = s.analyses;
  } else {
    todo = {opts.only};
  }
  std::vector<std::string> ordered;
  for (const auto& a : kAnalyses) {
    if (std::find(todo.begin(), todo.end(), a) != todo.end()) ordered.push_back(a);
  }

  try {
    if (!s.coefficients.empty()) {
      cx.form = parse_one_form(s.coefficients, s.log, s.dimension, s.field_d);
      report["form"] = cx.form.to_string();
    }
  } catch (const Error& e) {
    cx.errors.push_back({{"analysis", "form"}, {"code", to_string(e.code())}, {"detail", e.detail()}});
    ordered.clear();
  }
  for (const auto& a : ordered) {
    try {
      if (a == "integrability") {
        cx.results[a] = {{"integrable", integrability_check(cx.form)}};
      } else if (a == "multiplicity") {
        cx.results[a] = {{"nu", multiplicity(saturate(cx.form).form)}};
      } else if (a == "blowup") {
        run_blowup(cx);
      } else if (a == "restrict") {
        run_restrict(cx);
      } else if (a == "classify") {
        run_classify(cx);
      } else if (a == "cs_sum") {
        run_cs_sum(cx);
      } else if (a == "reduce2d") {
        run_reduce2d(cx);
      } else if (a == "monomial_probe") {
        run_monomial_probe(cx);
      } else if (a == "graph") {
        run_graph(cx);
      } else if (a == "holonomy") {
        run_holonomy(cx);
      }
    } catch (const Error& e) {
      cx.errors.push_back({{"analysis", a}, {"code", to_string(e.code())}, {"detail", e.detail()}});
    } catch (const json::exception& e) {
      cx.errors.push_back({{"analysis", a}, {"code", "SchemaError"}, {"detail", e.what()}});
    }
  }
  report["results"] = cx.results;
  report["violations"] = cx.violations;
  report["errors"] = cx.errors;
  RunResult out;
  out.exit_code = !cx.errors.empty() ? 1 : (!cx.violations.empty() ? 2 : 0);
  report["exit_code"] = out.exit_code;
  out.report = std::move(report);
  out.artifacts = std::move(cx.artifacts);
  return out;
}

std::string report_text(const json& report) { return report.dump(2) + "\n"; }

std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CorpusEntry> corpus_run(const std::filesystem::path& dir, const std::string& filter, const RunOptions& opts,
                                    bool update_golden) {
  std::vector<CorpusEntry> out;
  for (const auto& path : corpus_files(dir)) {
    Scenario s = load_scenario(path);
    if (!filter.empty() && s.name.find(filter) == std::string::npos && !s.wants(filter)) continue;
    RunResult r = run_scenario(s, opts);
    CorpusEntry e{s.name, r.exit_code, s.expected_exit};
    const auto golden = dir / "golden" / (s.name + ".json");
    const std::string text = report_text(r.report);
    if (update_golden) {
      std::filesystem::create_directories(golden.parent_path());
      std::ofstream(golden) << text;
    }
    if (std::filesystem::exists(golden)) {
      e.golden_present = true;
      std::ifstream in(golden);
      std::stringstream ss;
      ss << in.rdbuf();
      e.golden_match = ss.str() == text;
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace fl
