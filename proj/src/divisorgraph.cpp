#include "foliationlab/divisorgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "foliationlab/classify.hpp"

namespace fl {

const char* to_string(CurveKind k) {
  return k == CurveKind::STraceCurve ? "STraceCurve" : "GenericallySimpleCorner";
}

const char* to_string(Provenance p) { return p == Provenance::FromAtlas ? "FromAtlas" : "Ingested"; }

namespace {

template <class T>
const T* find_id(const std::vector<T>& v, const std::string& id) {
  for (const auto& x : v) {
    if (x.id == id) return &x;
  }
  return nullptr;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// Groups ids into connected components, two ids being adjacent when some point lists both.
std::vector<std::vector<std::string>> connected_by_points(const std::vector<std::string>& ids,
                                                          const std::vector<std::vector<std::string>>& point_sets) {
  UnionFind uf(static_cast<int>(ids.size()));
  for (const auto& ps : point_sets) {
    int first = -1;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (!contains(ps, ids[i])) continue;
      if (first < 0) {
        first = static_cast<int>(i);
      } else {
        uf.unite(static_cast<int>(i), first);
      }
    }
  }
  std::map<int, std::vector<std::string>> groups;
  std::vector<int> order;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    int r = uf.find(static_cast<int>(i));
    if (!groups.count(r)) order.push_back(r);
    groups[r].push_back(ids[i]);
  }
  std::vector<std::vector<std::string>> out;
  for (int r : order) out.push_back(groups[r]);
  return out;
}

void require_valid(const DivisorGraph& g) {
  auto v = validate(g);
  if (!v.empty()) throw Error(ErrorCode::InvalidGraph, v.front().rule + " at " + v.front().subject);
}

bool is_compact_dicritical(const DivisorGraph& g, const std::string& id) {
  const auto* c = g.component(id);
  return c && c->compact && !c->invariant;
}

std::vector<SeparatrixComponent> separatrices(const DivisorGraph& g) {
  std::vector<SeparatrixComponent> out;
  std::vector<std::string> str;
  for (const auto& c : g.curves) {
    if (c.kind == CurveKind::STraceCurve && c.in_adapted_singular_locus) str.push_back(c.id);
  }
  std::vector<std::vector<std::string>> curve_sets;
  for (const auto& p : g.points) curve_sets.push_back(p.curves);
  for (auto& group : connected_by_points(str, curve_sets)) {
    SeparatrixComponent s;
    s.locus = TraceLocus::STr;
    bool touches = false;
    for (const auto& cid : group) {
      for (const auto& comp : g.curve(cid)->components) touches = touches || is_compact_dicritical(g, comp);
    }
    for (const auto& p : g.points) {
      if (std::none_of(group.begin(), group.end(), [&](const std::string& c) { return contains(p.curves, c); })) continue;
      s.points.push_back(p.id);
      for (const auto& comp : p.components) touches = touches || is_compact_dicritical(g, comp);
    }
    s.members = std::move(group);
    s.closed_immersion = !touches;
    out.push_back(std::move(s));
  }
  if (g.fiber) {
    std::vector<std::string> itr;
    std::map<std::string, const FiberComponent*> by_id;
    for (const auto& f : *g.fiber) {
      by_id[f.id] = &f;
      if (f.trace && f.invariant) itr.push_back(f.id);
    }
    std::vector<std::vector<std::string>> fiber_sets;
    for (const auto& p : g.points) {
      std::vector<std::string> through;
      for (const auto& f : *g.fiber) {
        if (contains(f.points, p.id)) through.push_back(f.id);
      }
      fiber_sets.push_back(std::move(through));
    }
    for (auto& group : connected_by_points(itr, fiber_sets)) {
      SeparatrixComponent s;
      s.locus = TraceLocus::ITr;
      bool touches = false;
      std::set<std::string> pts;
      for (const auto& fid : group) {
        if (const auto* c = g.curve(fid)) {
          for (const auto& comp : c->components) touches = touches || is_compact_dicritical(g, comp);
        }
        for (const auto& pid : by_id[fid]->points) pts.insert(pid);
      }
      for (const auto& pid : pts) {
        if (const auto* p = g.point(pid)) {
          for (const auto& comp : p->components) touches = touches || is_compact_dicritical(g, comp);
        }
      }
      s.members = std::move(group);
      s.points.assign(pts.begin(), pts.end());
      s.closed_immersion = !touches;
      out.push_back(std::move(s));
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].id = "PS:" + std::to_string(i + 1);
  return out;
}

std::string axis_surface(const Chart& c, int var, int n) {
  return c.surfaces[var].empty() ? c.label + ":" + variable_name(n, var) : c.surfaces[var];
}

bool vanishes_on_axis(const OneForm& plain, int a, int b) {
  return std::all_of(plain.coeff.begin(), plain.coeff.end(), [&](const Polynomial& p) {
    return p.restrict(a, FieldElement()).restrict(b, FieldElement()).is_zero();
  });
}

bool generically_nodal_axis(const OneForm& omega, int a, int b) {
  OneForm log = to_log_form(omega, {a, b});
  Polynomial ra = log.coeff[a].restrict(a, FieldElement()).restrict(b, FieldElement());
  Polynomial rb = log.coeff[b].restrict(a, FieldElement()).restrict(b, FieldElement());
  if (ra.is_zero() || rb.is_zero()) return false;
  FieldElement la = ra.leading_term().second, lb = rb.leading_term().second;
  if (ra * lb != rb * la) return false;
  RatioClass rc = classify_ratio(la, lb);
  return rc == RatioClass::NegativeRational || rc == RatioClass::NegativeIrrational;
}

}  // namespace

const GraphComponent* DivisorGraph::component(const std::string& id) const { return find_id(components, id); }
const GraphCurve* DivisorGraph::curve(const std::string& id) const { return find_id(curves, id); }
const GraphPoint* DivisorGraph::point(const std::string& id) const { return find_id(points, id); }

std::vector<Violation> validate(const DivisorGraph& g) {
  std::vector<Violation> out;
  auto flag = [&](const char* rule, const std::string& subject, const std::string& msg) {
    out.push_back({rule, subject, msg});
  };
  for (const auto& c : g.curves) {
    for (const auto& comp : c.components) {
      if (!g.component(comp)) flag("UnknownReference", c.id, "unknown component " + comp);
    }
  }
  for (const auto& p : g.points) {
    for (const auto& comp : p.components) {
      if (!g.component(comp)) flag("UnknownReference", p.id, "unknown component " + comp);
    }
    for (const auto& cid : p.curves) {
      if (!g.curve(cid)) flag("UnknownReference", p.id, "unknown curve " + cid);
    }
  }
  if (g.fiber) {
    for (const auto& f : *g.fiber) {
      for (const auto& pid : f.points) {
        if (!g.point(pid)) flag("UnknownReference", f.id, "unknown point " + pid);
      }
    }
  }
  if (!out.empty()) return out;

  for (const auto& p : g.points) {
    if (p.components.size() > 3) flag("NormalCrossings", p.id, "more than three incident components");
  }
  for (const auto& c : g.curves) {
    bool in_dicritical = false;
    int e = 0;
    for (const auto& comp : c.components) {
      if (g.component(comp)->invariant) {
        ++e;
      } else {
        in_dicritical = true;
      }
    }
    if (c.in_adapted_singular_locus && in_dicritical) {
      flag("DicriticalSingularCurve", c.id, "singular curve inside a dicritical component");
    }
    if (c.compact && c.in_adapted_singular_locus) {
      if (e != 1 && e != 2) {
        flag("TraceCornerDichotomy", c.id, "compact singular curve in " + std::to_string(e) + " invariant components");
      } else if ((e == 2) != (c.kind == CurveKind::GenericallySimpleCorner)) {
        flag("TraceCornerDichotomy", c.id,
             std::string("kind ") + to_string(c.kind) + " with " + std::to_string(e) + " invariant components");
      }
    }
    if (c.generically_nodal && (!c.in_adapted_singular_locus || in_dicritical)) {
      flag("NodalPlacement", c.id, "generically nodal curve outside the invariant singular locus");
    }
  }
  for (const auto& p : g.points) {
    if (p.dimensional_type != 3 || p.components.size() != 3) continue;
    auto curve_between = [&](const std::string& u, const std::string& v) -> const GraphCurve* {
      for (const auto& cid : p.curves) {
        const auto* c = g.curve(cid);
        if (contains(c->components, u) && contains(c->components, v)) return c;
      }
      return nullptr;
    };
    const auto& e = p.components;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const auto* c = curve_between(e[i], e[j]);
        if (!c || !c->generically_nodal) continue;
        const std::string& l = e[3 - i - j];
        bool all_invariant = std::all_of(e.begin(), e.end(), [&](const std::string& id) {
          return g.component(id)->invariant;
        });
        if (!all_invariant) {
          flag("CornerRule", p.id, "nodal corner curve " + c->id + " at a corner with a dicritical component");
          continue;
        }
        const auto* c1 = curve_between(e[i], l);
        const auto* c2 = curve_between(l, e[j]);
        int nodal = (c1 && c1->generically_nodal) + (c2 && c2->generically_nodal);
        if (nodal != 1) {
          flag("CornerRule", p.id,
               "nodal curve " + c->id + " needs exactly one nodal partner, found " + std::to_string(nodal));
        }
      }
    }
  }
  return out;
}

std::vector<NodalComponent> nodal_components(const DivisorGraph& g) {
  require_valid(g);
  std::vector<std::string> nodal;
  for (const auto& c : g.curves) {
    if (c.generically_nodal) nodal.push_back(c.id);
  }
  std::vector<std::vector<std::string>> curve_sets;
  for (const auto& p : g.points) curve_sets.push_back(p.curves);
  std::vector<NodalComponent> out;
  for (auto& group : connected_by_points(nodal, curve_sets)) {
    bool ok = true;
    NodalComponent nc;
    nc.compact = true;
    for (const auto& cid : group) {
      const auto* c = g.curve(cid);
      nc.compact = nc.compact && c->compact;
      for (const auto& comp : c->components) nc.meets_dicritical = nc.meets_dicritical || !g.component(comp)->invariant;
    }
    for (const auto& p : g.points) {
      auto through = std::count_if(group.begin(), group.end(), [&](const std::string& c) { return contains(p.curves, c); });
      if (through == 0) continue;
      if (!p.nodal || (p.dimensional_type == 3 && through != 2)) ok = false;
      for (const auto& comp : p.components) nc.meets_dicritical = nc.meets_dicritical || !g.component(comp)->invariant;
    }
    if (!ok) continue;
    nc.curves = std::move(group);
    out.push_back(std::move(nc));
  }
  return out;
}

std::vector<SeparatrixComponent> separatrix_components(const DivisorGraph& g) {
  if (!g.fiber) throw Error(ErrorCode::MissingFiberData, "the graph carries no fiber data");
  require_valid(g);
  return separatrices(g);
}

std::vector<std::string> regular_components(const DivisorGraph& g) {
  require_valid(g);
  std::vector<std::string> out;
  for (const auto& c : g.components) {
    if (c.invariant || c.compact) out.push_back(c.id);
  }
  for (const auto& s : separatrices(g)) out.push_back(s.id);
  return out;
}

Connectivity nodally_free_connected(const DivisorGraph& g, const std::string& a, const std::string& b) {
  auto regular = regular_components(g);
  for (const auto& id : {a, b}) {
    if (!contains(regular, id)) throw Error(ErrorCode::NotRegular, id + " is not a regular component");
  }
  auto seps = separatrices(g);
  // Non-nodal curves carried by each regular node.
  std::vector<std::vector<std::string>> carried(regular.size());
  for (std::size_t i = 0; i < regular.size(); ++i) {
    if (const auto* comp = g.component(regular[i])) {
      for (const auto& c : g.curves) {
        if (!c.generically_nodal && contains(c.components, comp->id)) carried[i].push_back(c.id);
      }
    } else {
      for (const auto& s : seps) {
        if (s.id != regular[i]) continue;
        for (const auto& m : s.members) {
          const auto* c = g.curve(m);
          if (c && !c->generically_nodal) carried[i].push_back(m);
        }
      }
    }
  }
  auto index = [&](const std::string& id) {
    return static_cast<int>(std::find(regular.begin(), regular.end(), id) - regular.begin());
  };
  const int start = index(a), goal = index(b);
  std::vector<int> prev(regular.size(), -2);
  std::vector<std::string> via(regular.size());
  std::deque<int> queue{start};
  prev[start] = -1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == goal) break;
    for (std::size_t v = 0; v < regular.size(); ++v) {
      if (prev[v] != -2) continue;
      for (const auto& c : carried[u]) {
        if (contains(carried[v], c)) {
          prev[v] = u;
          via[v] = c;
          queue.push_back(static_cast<int>(v));
          break;
        }
      }
    }
  }
  Connectivity out;
  if (prev[goal] == -2) return out;
  out.connected = true;
  for (int v = goal; v >= 0; v = prev[v]) {
    out.chain.push_back(regular[v]);
    if (prev[v] >= 0) out.via.push_back(via[v]);
  }
  std::reverse(out.chain.begin(), out.chain.end());
  std::reverse(out.via.begin(), out.via.end());
  return out;
}

Theorem3Verdict theorem3_verdict(const DivisorGraph& g) {
  Theorem3Verdict out;
  for (auto& nc : nodal_components(g)) {
    if (nc.compact && !nc.meets_dicritical) out.violations.push_back(std::move(nc));
  }
  out.holds = out.violations.empty();
  return out;
}

bool Prop6Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Prop6Check& c) { return c.passed; });
}

Prop6Report prop6_checks(const DivisorGraph& g) {
  auto seps = separatrix_components(g);
  Prop6Report rep;
  Prop6Check fiber{1, "fiber components invariant", true, ""};
  for (const auto& f : *g.fiber) {
    if (!f.invariant) {
      fiber.passed = false;
      fiber.detail += (fiber.detail.empty() ? "" : ", ") + f.id;
    }
  }
  rep.checks.push_back(fiber);
  for (auto [item, locus, name] : {std::tuple{2, TraceLocus::ITr, "ITr components meet a compact dicritical component"},
                                   std::tuple{3, TraceLocus::STr, "STr components meet a compact dicritical component"}}) {
    Prop6Check chk{item, name, true, ""};
    for (const auto& s : seps) {
      if (s.locus != locus || !s.closed_immersion) continue;
      chk.passed = false;
      chk.detail += (chk.detail.empty() ? "" : ", ") + s.id;
      std::string members;
      for (const auto& m : s.members) members += (members.empty() ? "" : " ") + m;
      rep.certificates.push_back(s.id + " is a closed partial separatrix over {" + members + "}");
    }
    rep.checks.push_back(chk);
  }
  bool any = std::any_of(g.components.begin(), g.components.end(),
                         [](const GraphComponent& c) { return c.compact && !c.invariant; });
  rep.checks.push_back({4, "a compact dicritical component exists", any, any ? "" : "none"});
  return rep;
}

std::vector<Violation> trace_incompatibility_check(const DivisorGraph& g) {
  std::set<std::string> in_n;
  for (const auto& nc : nodal_components(g)) in_n.insert(nc.curves.begin(), nc.curves.end());
  std::vector<const GraphCurve*> traces;
  for (const auto& c : g.curves) {
    if (c.kind == CurveKind::STraceCurve) traces.push_back(&c);
  }
  std::vector<Violation> out;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    for (std::size_t j = i + 1; j < traces.size(); ++j) {
      const auto &c1 = *traces[i], &c2 = *traces[j];
      bool share_point = std::any_of(g.points.begin(), g.points.end(), [&](const GraphPoint& p) {
        return contains(p.curves, c1.id) && contains(p.curves, c2.id);
      });
      bool share_component = std::any_of(c1.components.begin(), c1.components.end(),
                                         [&](const std::string& e) { return contains(c2.components, e); });
      if (!share_point || !share_component) continue;
      if (in_n.count(c1.id) != in_n.count(c2.id)) {
        const auto& inside = in_n.count(c1.id) ? c1.id : c2.id;
        out.push_back({"TraceIncompatibility", c1.id + "," + c2.id,
                       "only " + inside + " lies in a nodal component"});
      }
    }
  }
  return out;
}

DivisorGraph from_atlas(const BlowupAtlas& atlas, int truncation) {
  const int n = atlas.nvars();
  if (n != 3) throw Error(ErrorCode::DimensionError, "divisor graphs are built from three-dimensional atlases");
  DivisorGraph g;
  g.provenance = Provenance::FromAtlas;
  for (const auto& c : atlas.components()) g.components.push_back({c.name, c.compact, c.invariant});

  for (const Chart* chart : atlas.leaves()) {
    auto div = atlas.divisor_vars(*chart);
    auto dic = atlas.dicritical_divisor_vars(*chart);
    auto is_div = [&](int v) { return std::find(div.begin(), div.end(), v) != div.end(); };
    OneForm plain = chart->form.plain();
    std::vector<std::string> here;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (!is_div(a) && !is_div(b)) continue;
        if (!vanishes_on_axis(plain, a, b)) continue;
        std::string sa = axis_surface(*chart, a, n), sb = axis_surface(*chart, b, n);
        std::string id = std::min(sa, sb) + "|" + std::max(sa, sb);
        here.push_back(id);
        if (g.curve(id)) continue;
        GraphCurve curve;
        curve.id = id;
        bool in_dicritical = false;
        int e = 0;
        for (int v : {a, b}) {
          if (!is_div(v)) continue;
          const Component* comp = atlas.component_by_name(chart->surfaces[v]);
          curve.components.push_back(comp->name);
          curve.compact = curve.compact || comp->compact;
          if (comp->invariant) {
            ++e;
          } else {
            in_dicritical = true;
          }
        }
        curve.kind = e >= 2 ? CurveKind::GenericallySimpleCorner : CurveKind::STraceCurve;
        if (!in_dicritical) {
          if (!hyperplane_invariant(chart->form, a) || !hyperplane_invariant(chart->form, b)) {
            throw Error(ErrorCode::UnclassifiableCurve, id);
          }
          curve.generically_nodal = generically_nodal_axis(chart->form, a, b);
        }
        g.curves.push_back(std::move(curve));
      }
    }
    if (div.empty()) continue;
    bool singular = std::all_of(plain.coeff.begin(), plain.coeff.end(),
                                [](const Polynomial& p) { return p.constant_term().is_zero(); });
    if (!singular) continue;
    LocalDivisor ld{atlas.invariant_divisor_vars(*chart), dic};
    PointClassification pc = classify_point(chart->form, ld, truncation);
    GraphPoint p;
    p.id = chart->label + "@0";
    p.curves = here;
    for (int v : div) p.components.push_back(chart->surfaces[v]);
    p.nodal = pc.saddle_nodal && *pc.saddle_nodal == SaddleNodalClass::Nodal;
    p.dimensional_type = std::clamp(pc.dimensional_type, 2, 3);
    g.points.push_back(std::move(p));
  }

  std::vector<FiberComponent> fiber;
  for (const auto& c : g.curves) {
    if (!c.compact) continue;
    FiberComponent f{c.id, true, c.kind == CurveKind::STraceCurve, {}};
    for (const auto& p : g.points) {
      if (contains(p.curves, c.id)) f.points.push_back(p.id);
    }
    fiber.push_back(std::move(f));
  }
  g.fiber = std::move(fiber);
  return g;
}

nlohmann::json to_json(const DivisorGraph& g) {
  using nlohmann::json;
  json j;
  j["provenance"] = to_string(g.provenance);
  j["components"] = json::array();
  for (const auto& c : g.components) {
    j["components"].push_back({{"id", c.id}, {"compact", c.compact}, {"invariant", c.invariant}});
  }
  j["curves"] = json::array();
  for (const auto& c : g.curves) {
    j["curves"].push_back({{"id", c.id},
                           {"compact", c.compact},
                           {"components", c.components},
                           {"generically_nodal", c.generically_nodal},
                           {"kind", to_string(c.kind)},
                           {"in_adapted_singular_locus", c.in_adapted_singular_locus}});
  }
  j["points"] = json::array();
  for (const auto& p : g.points) {
    j["points"].push_back({{"id", p.id},
                           {"curves", p.curves},
                           {"components", p.components},
                           {"nodal", p.nodal},
                           {"dimensional_type", p.dimensional_type}});
  }
  if (g.fiber) {
    j["fiber"] = json::array();
    for (const auto& f : *g.fiber) {
      j["fiber"].push_back({{"id", f.id}, {"invariant", f.invariant}, {"trace", f.trace}, {"points", f.points}});
    }
  } else {
    j["fiber"] = nullptr;
  }
  return j;
}

DivisorGraph graph_from_json(const nlohmann::json& j) {
  try {
    DivisorGraph g;
    std::string prov = j.value("provenance", "Ingested");
    if (prov != "Ingested" && prov != "FromAtlas") throw Error(ErrorCode::SchemaError, "provenance " + prov);
    g.provenance = prov == "FromAtlas" ? Provenance::FromAtlas : Provenance::Ingested;
    for (const auto& c : j.at("components")) {
      g.components.push_back({c.at("id").get<std::string>(), c.at("compact").get<bool>(), c.at("invariant").get<bool>()});
    }
    for (const auto& c : j.at("curves")) {
      GraphCurve curve;
      curve.id = c.at("id").get<std::string>();
      curve.compact = c.at("compact").get<bool>();
      curve.components = c.at("components").get<std::vector<std::string>>();
      curve.generically_nodal = c.at("generically_nodal").get<bool>();
      std::string kind = c.at("kind").get<std::string>();
      if (kind == "STraceCurve") {
        curve.kind = CurveKind::STraceCurve;
      } else if (kind == "GenericallySimpleCorner") {
        curve.kind = CurveKind::GenericallySimpleCorner;
      } else {
        throw Error(ErrorCode::SchemaError, "curve kind " + kind);
      }
      curve.in_adapted_singular_locus = c.value("in_adapted_singular_locus", true);
      g.curves.push_back(std::move(curve));
    }
    for (const auto& p : j.at("points")) {
      GraphPoint pt;
      pt.id = p.at("id").get<std::string>();
      pt.curves = p.at("curves").get<std::vector<std::string>>();
      pt.components = p.at("components").get<std::vector<std::string>>();
      pt.nodal = p.at("nodal").get<bool>();
      pt.dimensional_type = p.at("dimensional_type").get<int>();
      if (pt.dimensional_type != 2 && pt.dimensional_type != 3) {
        throw Error(ErrorCode::SchemaError, "dimensional_type of " + pt.id);
      }
      g.points.push_back(std::move(pt));
    }
    if (j.contains("fiber") && !j.at("fiber").is_null()) {
      std::vector<FiberComponent> fiber;
      for (const auto& f : j.at("fiber")) {
        fiber.push_back({f.at("id").get<std::string>(), f.at("invariant").get<bool>(), f.value("trace", false),
                         f.value("points", std::vector<std::string>{})});
      }
      g.fiber = std::move(fiber);
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  }
}

std::string to_dot(const DivisorGraph& g) {
  std::ostringstream os;
  os << "graph divisor {\n  node [fontname=\"monospace\"];\n";
  for (const auto& c : g.components) {
    os << "  \"E:" << c.id << "\" [shape=ellipse, label=\"" << c.id << (c.compact ? "\\ncompact" : "") << "\"";
    if (!c.invariant) os << ", style=dashed";
    os << "];\n";
  }
  for (const auto& c : g.curves) {
    os << "  \"C:" << c.id << "\" [shape=box, label=\"" << c.id << "\"";
    if (c.generically_nodal) os << ", style=bold";
    if (c.kind == CurveKind::STraceCurve) os << ", color=blue";
    os << "];\n";
    for (const auto& comp : c.components) os << "  \"C:" << c.id << "\" -- \"E:" << comp << "\";\n";
  }
  for (const auto& p : g.points) {
    os << "  \"P:" << p.id << "\" [shape=point, xlabel=\"" << p.id << "\"" << (p.nodal ? ", color=red" : "") << "];\n";
    for (const auto& c : p.curves) os << "  \"P:" << p.id << "\" -- \"C:" << c << "\" [style=dotted];\n";
  }
  os << "}\n";
  return os.str();
}

DivisorGraph nodal_corner_model() {
  DivisorGraph g;
  for (const char* e : {"x", "y", "z"}) g.components.push_back({std::string("E_") + e, false, true});
  g.curves.push_back({"xy", false, {"E_x", "E_y"}, true, CurveKind::GenericallySimpleCorner, true});
  g.curves.push_back({"xz", false, {"E_x", "E_z"}, true, CurveKind::GenericallySimpleCorner, true});
  g.curves.push_back({"yz", false, {"E_y", "E_z"}, false, CurveKind::GenericallySimpleCorner, true});
  g.points.push_back({"0", {"xy", "xz", "yz"}, {"E_x", "E_y", "E_z"}, true, 3});
  return g;
}

}  // namespace fl
