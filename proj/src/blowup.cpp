#include "foliationlab/blowup.hpp"

#include <algorithm>
#include <stdexcept>

namespace fl {

namespace {

void validate_center(const CenterSpec& c, int n, long d) {
  if (static_cast<int>(c.coords.size()) != n) {
    throw Error(ErrorCode::CenterNotSingularAdapted, "center has " + std::to_string(c.coords.size()) +
                                                         " coordinates in dimension " + std::to_string(n));
  }
  int fixed = 0;
  for (const auto& v : c.coords) {
    if (!v) continue;
    ++fixed;
    if (v->d() != 0 && v->d() != d) {
      throw Error(ErrorCode::OffFieldPoint, v->to_string() + " lies outside the field with d = " + std::to_string(d));
    }
  }
  if (c.kind == CenterSpec::Kind::Point && fixed != n) {
    throw Error(ErrorCode::CenterNotSingularAdapted, "point center must fix every coordinate");
  }
  if (c.kind == CenterSpec::Kind::Curve && (n != 3 || fixed != 2)) {
    throw Error(ErrorCode::CenterNotSingularAdapted, "curve centers fix exactly two of three coordinates");
  }
}

std::vector<Polynomial> chart_substitution(int n, const std::vector<int>& vars, int j) {
  std::vector<Polynomial> s;
  for (int i = 0; i < n; ++i) {
    Polynomial xi = Polynomial::variable(n, i);
    bool in_center = std::find(vars.begin(), vars.end(), i) != vars.end();
    s.push_back(in_center && i != j ? xi * Polynomial::variable(n, j) : xi);
  }
  return s;
}

bool contraction_vanishes(const OneForm& plain, const CenterSpec& center, int nu) {
  std::vector<int> vars = center.center_vars();
  Polynomial sum(plain.n);
  for (int i : vars) sum += Polynomial::variable(plain.n, i) * plain.coeff[i].part_of_order(vars, nu);
  if (!sum.is_zero()) return false;
  if (center.kind == CenterSpec::Kind::Curve) {
    for (int f = 0; f < plain.n; ++f) {
      if (std::find(vars.begin(), vars.end(), f) != vars.end()) continue;
      if (!plain.coeff[f].part_of_order(vars, nu).is_zero()) return false;
    }
  }
  return true;
}

void check_curve_invariant(const OneForm& plain, const CenterSpec& center) {
  if (center.kind != CenterSpec::Kind::Curve) return;
  std::vector<int> vars = center.center_vars();
  for (int f = 0; f < plain.n; ++f) {
    if (std::find(vars.begin(), vars.end(), f) != vars.end()) continue;
    Polynomial p = plain.coeff[f];
    for (int v : vars) p = p.restrict(v, FieldElement());
    if (!p.is_zero()) throw Error(ErrorCode::CenterNotInvariant, center.to_string());
  }
}

}  // namespace

CenterSpec CenterSpec::origin(int n) {
  CenterSpec c;
  c.coords.assign(n, FieldElement());
  return c;
}

CenterSpec CenterSpec::point(std::vector<FieldElement> c) {
  CenterSpec s;
  for (auto& v : c) s.coords.emplace_back(std::move(v));
  return s;
}

CenterSpec CenterSpec::curve(int a, const FieldElement& ca, int b, const FieldElement& cb) {
  CenterSpec s;
  s.kind = Kind::Curve;
  s.coords.assign(3, std::nullopt);
  s.coords.at(a) = ca;
  s.coords.at(b) = cb;
  return s;
}

std::vector<int> CenterSpec::center_vars() const {
  std::vector<int> v;
  for (int i = 0; i < static_cast<int>(coords.size()); ++i) {
    if (coords[i]) v.push_back(i);
  }
  return v;
}

bool CenterSpec::at_origin() const {
  return std::all_of(coords.begin(), coords.end(), [](const auto& c) { return !c || c->is_zero(); });
}

std::string CenterSpec::to_string() const {
  const int n = static_cast<int>(coords.size());
  std::string out = kind == Kind::Point ? "point(" : "curve(";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (!coords[i]) continue;
    if (!first) out += ", ";
    out += std::string(variable_name(n, i)) + " = " + coords[i]->to_string();
    first = false;
  }
  return out + ")";
}

Transformed transform_form(const OneForm& omega, const std::vector<Polynomial>& substitution, int exceptional_var) {
  OneForm p = omega.plain();
  const int n = p.n;
  std::vector<Polynomial> pulled;
  for (int i = 0; i < n; ++i) pulled.push_back(p.coeff[i].substitute(substitution));
  std::vector<Polynomial> out(n, Polynomial(n));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      Polynomial jac = substitution[i].derivative(k);
      if (!jac.is_zero()) out[k] += pulled[i] * jac;
    }
  }
  Saturation s = saturate(OneForm(std::move(out)));
  Transformed t;
  t.form = std::move(s.form);
  t.r = exceptional_var >= 0 ? s.removed.order_in(exceptional_var) : 0;
  return t;
}

int order_along(const OneForm& omega, const std::vector<int>& center_vars) {
  OneForm p = omega.plain();
  int best = -1;
  for (const auto& c : p.coeff) {
    if (c.is_zero()) continue;
    int o = c.order_in(center_vars);
    best = best < 0 ? o : std::min(best, o);
  }
  if (best < 0) throw Error(ErrorCode::ZeroForm, "order of the zero form");
  return best;
}

OneForm translate(const OneForm& omega, const std::vector<FieldElement>& p) {
  OneForm w = omega.plain();
  bool trivial = std::all_of(p.begin(), p.end(), [](const FieldElement& c) { return c.is_zero(); });
  if (trivial) return w;
  std::vector<Polynomial> sub;
  for (int i = 0; i < w.n; ++i) sub.push_back(Polynomial::variable(w.n, i) + Polynomial::constant(w.n, p[i]));
  for (auto& c : w.coeff) c = c.substitute(sub);
  return w;
}

bool detect_dicritical(const OneForm& omega, const CenterSpec& center) {
  OneForm plain = omega.plain();
  long d = plain.field_d();
  for (const auto& c : center.coords) {
    if (d == 0 && c) d = c->d();
  }
  validate_center(center, plain.n, d);
  if (!center.at_origin()) {
    std::vector<FieldElement> t;
    for (const auto& c : center.coords) t.push_back(c.value_or(FieldElement()));
    plain = translate(plain, t);
  }
  CenterSpec c0 = center;
  for (auto& v : c0.coords) {
    if (v) v = FieldElement();
  }
  check_curve_invariant(plain, c0);
  std::vector<int> vars = c0.center_vars();
  int nu = order_along(plain, vars);
  bool contraction = contraction_vanishes(plain, c0, nu);
  for (int j : vars) {
    Transformed t = transform_form(plain, chart_substitution(plain.n, vars, j), j);
    if ((t.r == nu + 1) != contraction) {
      throw std::logic_error("dicriticality routes disagree in chart " + std::string(variable_name(plain.n, j)));
    }
  }
  return contraction;
}

std::string PlaneFoliation::to_string() const {
  return "(" + w[0].to_string() + ") dX + (" + w[1].to_string() + ") dY + (" + w[2].to_string() + ") dZ";
}

PlaneFoliation make_plane_foliation(std::array<Polynomial, 3> w) {
  Polynomial contraction(3);
  for (int i = 0; i < 3; ++i) contraction += Polynomial::variable(3, i) * w[i];
  if (!contraction.is_zero()) {
    throw Error(ErrorCode::NotDicritical, "X A + Y B + Z C does not vanish, so W is not a plane foliation");
  }
  Polynomial g(3);
  for (const auto& c : w) g = gcd(g, c);
  if (g.is_zero()) throw Error(ErrorCode::ZeroForm, "plane foliation with zero coefficients");
  PlaneFoliation out;
  int deg = -1;
  for (int i = 0; i < 3; ++i) {
    out.w[i] = *w[i].exact_div(g);
    if (!(out.w[i].homogeneous_part(out.w[i].total_degree()) == out.w[i])) {
      throw Error(ErrorCode::DimensionError, "plane foliation coefficients must be homogeneous");
    }
    deg = std::max(deg, out.w[i].total_degree());
  }
  out.degree = deg - 1;
  out.nu = deg;
  return out;
}

PlaneFoliation restrict_to_exceptional(const OneForm& omega) {
  OneForm plain = omega.plain();
  if (plain.n != 3) throw Error(ErrorCode::DimensionError, "restriction to an exceptional plane needs dimension 3");
  if (!detect_dicritical(plain, CenterSpec::origin(3))) {
    throw Error(ErrorCode::NotDicritical, "the blow-up of the origin is not dicritical");
  }
  PlaneFoliation out;
  out.nu = order_along(plain, {0, 1, 2});
  Polynomial g(3);
  for (int i = 0; i < 3; ++i) {
    out.w[i] = plain.coeff[i].homogeneous_part(out.nu);
    g = gcd(g, out.w[i]);
  }
  int deg = -1;
  for (auto& c : out.w) {
    c = *c.exact_div(g);
    deg = std::max(deg, c.total_degree());
  }
  out.degree = deg - 1;
  return out;
}

BlowupAtlas::BlowupAtlas(const OneForm& omega, long d, const std::vector<int>& divisor_vars)
    : n_(omega.n), d_(d) {
  Chart root;
  root.label = "root";
  root.form = saturate(omega).form;
  for (int i = 0; i < n_; ++i) {
    root.surfaces.push_back(std::string("H:") + variable_name(n_, i));
    root.substitution.push_back(Polynomial::variable(n_, i));
    root.translation.emplace_back();
  }
  for (int v : divisor_vars) {
    if (v < 0 || v >= n_) throw Error(ErrorCode::DimensionError, "divisor variable index " + std::to_string(v));
    Component c;
    c.id = static_cast<int>(components_.size()) + 1;
    c.name = root.surfaces[v];
    c.invariant = hyperplane_invariant(root.form, v);
    c.dicritical = !c.invariant;
    c.center_chart = "root";
    components_.push_back(c);
  }
  charts_.push_back(std::move(root));
}

const Chart& BlowupAtlas::chart(const std::string& label) const {
  for (const auto& c : charts_) {
    if (c.label == label) return c;
  }
  throw Error(ErrorCode::ScriptChartMissing, label);
}

const Component* BlowupAtlas::component_by_name(const std::string& name) const {
  for (const auto& c : components_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<const Chart*> BlowupAtlas::leaves() const {
  std::vector<const Chart*> out;
  for (const auto& c : charts_) {
    if (!c.blown_up) out.push_back(&c);
  }
  return out;
}

std::vector<int> BlowupAtlas::divisor_vars(const Chart& c) const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    if (!c.surfaces[i].empty() && component_by_name(c.surfaces[i])) out.push_back(i);
  }
  return out;
}

std::vector<int> BlowupAtlas::invariant_divisor_vars(const Chart& c) const {
  std::vector<int> out;
  for (int i : divisor_vars(c)) {
    if (component_by_name(c.surfaces[i])->invariant) out.push_back(i);
  }
  return out;
}

std::vector<int> BlowupAtlas::dicritical_divisor_vars(const Chart& c) const {
  std::vector<int> out;
  for (int i : divisor_vars(c)) {
    if (component_by_name(c.surfaces[i])->dicritical) out.push_back(i);
  }
  return out;
}

Chart& BlowupAtlas::find_chart(const std::vector<std::string>& path) {
  std::string parent = "root";
  std::size_t index = 0;
  for (const auto& label : path) {
    auto it = std::find_if(charts_.begin(), charts_.end(), [&](const Chart& c) { return c.label == label; });
    if (it == charts_.end() || it->parent != parent) {
      throw Error(ErrorCode::ScriptChartMissing, label + " is not a chart below " + parent);
    }
    parent = label;
    index = static_cast<std::size_t>(it - charts_.begin());
  }
  return charts_[index];
}

void BlowupAtlas::apply(const ScriptStep& step) {
  std::size_t parent_index = static_cast<std::size_t>(&find_chart(step.chart_path) - charts_.data());
  validate_center(step.center, n_, d_);
  std::vector<FieldElement> t;
  for (const auto& c : step.center.coords) t.push_back(c.value_or(FieldElement()));
  const Chart& parent = charts_[parent_index];
  OneForm w = translate(parent.form, t);
  std::vector<std::string> surfaces = parent.surfaces;
  for (int i = 0; i < n_; ++i) {
    if (!t[i].is_zero()) surfaces[i].clear();
  }
  CenterSpec c0 = step.center;
  for (auto& v : c0.coords) {
    if (v) v = FieldElement();
  }
  std::vector<int> vars = c0.center_vars();
  bool dicritical = detect_dicritical(w, c0);

  const int k = static_cast<int>(steps_.size()) + 1;
  Component comp;
  comp.id = static_cast<int>(components_.size()) + 1;
  comp.name = "E" + std::to_string(k);
  comp.created_at = k;
  comp.exceptional = true;
  comp.compact = step.center.kind == CenterSpec::Kind::Point;
  comp.curve_center = !comp.compact;
  comp.dicritical = dicritical;
  comp.invariant = !dicritical;
  comp.center_chart = parent.label;

  StepRecord rec;
  rec.step = k;
  rec.chart = parent.label;
  rec.center = step.center;
  rec.component = comp.id;
  rec.order = order_along(w, vars);
  rec.dicritical = dicritical;

  std::vector<Chart> created;
  for (int j : vars) {
    Chart c;
    c.label = comp.name + "." + variable_name(n_, j);
    c.parent = parent.label;
    c.step = k;
    c.exceptional_var = j;
    c.component = comp.id;
    c.translation = t;
    std::vector<Polynomial> sigma = chart_substitution(n_, vars, j);
    Transformed tr = transform_form(w, sigma, j);
    for (int i = 0; i < n_; ++i) c.substitution.push_back(sigma[i] + Polynomial::constant(n_, t[i]));
    c.surfaces = surfaces;
    c.surfaces[j] = comp.name;
    c.form = std::move(tr.form);
    c.r = tr.r;
    rec.chart_r.emplace_back(c.label, c.r);
    created.push_back(std::move(c));
  }
  charts_[parent_index].blown_up = true;
  components_.push_back(comp);
  for (auto& c : created) charts_.push_back(std::move(c));
  steps_.push_back(std::move(rec));
}

BlowupAtlas run_script(const OneForm& omega, const std::vector<ScriptStep>& script, long d,
                       const std::vector<int>& divisor_vars) {
  BlowupAtlas atlas(omega, d, divisor_vars);
  for (const auto& s : script) atlas.apply(s);
  return atlas;
}

}  // namespace fl
