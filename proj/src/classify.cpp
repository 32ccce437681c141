#include "foliationlab/classify.hpp"

#include <algorithm>

namespace fl {

const char* to_string(SaddleNodalClass c) {
  switch (c) {
    case SaddleNodalClass::ComplexSaddle: return "ComplexSaddle";
    case SaddleNodalClass::RealSaddle: return "RealSaddle";
    case SaddleNodalClass::Nodal: return "Nodal";
  }
  return "?";
}

const char* to_string(PointType t) {
  switch (t) {
    case PointType::NonSingularNormalCrossings: return "NonSingularNormalCrossings";
    case PointType::PreSimpleCHCorner: return "PreSimpleCHCorner";
    case PointType::SimpleCHCorner: return "SimpleCHCorner";
    case PointType::SimpleCHTrace: return "SimpleCHTrace";
    case PointType::SimpleCHPoint: return "SimpleCHPoint";
    case PointType::SeidenbergSimpleResonant: return "SeidenbergSimpleResonant";
    case PointType::SaddleNode: return "SaddleNode";
    case PointType::NotPreSimple: return "NotPreSimple";
  }
  return "?";
}

bool is_simple(PointType t) {
  return t == PointType::SimpleCHCorner || t == PointType::SimpleCHTrace || t == PointType::SimpleCHPoint;
}

bool is_presimple_corner(PointType t) {
  return t == PointType::PreSimpleCHCorner || t == PointType::SimpleCHCorner;
}

SaddleNodalClass classify_saddle_nodal(std::span<const FieldElement> lambda) {
  for (const auto& l : lambda) {
    if (l.is_zero()) throw Error(ErrorCode::ZeroEntry, "residual vector entry is zero");
  }
  bool negative = false;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      switch (classify_ratio(lambda[i], lambda[j])) {
        case RatioClass::NotReal: return SaddleNodalClass::ComplexSaddle;
        case RatioClass::NegativeRational:
        case RatioClass::NegativeIrrational: negative = true; break;
        default: break;
      }
    }
  }
  return negative ? SaddleNodalClass::Nodal : SaddleNodalClass::RealSaddle;
}

namespace {

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::vector<int> invariant_hyperplanes(const OneForm& plain) {
  std::vector<int> out;
  for (int i = 0; i < plain.n; ++i) {
    if (hyperplane_invariant(plain, i)) out.push_back(i);
  }
  return out;
}

FieldElement partial_at_origin(const Polynomial& p, int var) {
  Exponent e{0, 0, 0};
  e[var] = 1;
  return p.coefficient(e);
}

bool nonsingular_at_origin(const OneForm& plain) {
  return std::any_of(plain.coeff.begin(), plain.coeff.end(),
                     [](const Polynomial& c) { return !c.constant_term().is_zero(); });
}

// Saturated form that keeps the caller's scaling when omega is already saturated.
OneForm saturated_keep_scale(const OneForm& omega) {
  Saturation s = saturate(omega);
  if (s.removed.is_constant()) return omega.plain();
  return s.form;
}

int count_in(const std::vector<int>& vars, const std::vector<int>& set) {
  return static_cast<int>(std::count_if(vars.begin(), vars.end(), [&](int v) { return v >= 0 && contains(set, v); }));
}

void label_residues(PointClassification& out, int tau) {
  out.dimensional_type = tau;
  Resonance res = nonresonant(out.residues);
  out.resonant = res.resonant;
  out.resonance_witness = res.witness;
  out.saddle_nodal = classify_saddle_nodal(out.residues);
  int tau_inv = count_in(out.residue_vars, out.divisor.invariant);
  if (!res.resonant) {
    if (tau_inv == tau) {
      out.type = PointType::SimpleCHCorner;
    } else if (tau_inv == tau - 1) {
      out.type = PointType::SimpleCHTrace;
    } else {
      out.type = PointType::SimpleCHPoint;
    }
  } else if (tau_inv == tau) {
    out.type = PointType::PreSimpleCHCorner;
  } else if (tau == 2 && classify_ratio(out.residues[0], out.residues[1]) == RatioClass::NegativeRational) {
    out.type = PointType::SeidenbergSimpleResonant;
  } else {
    out.type = PointType::NotPreSimple;
    out.dimensional_type_exact = false;
  }
}

// Linear part of p dx + q dy at a singular origin; fills residues but leaves labelling to the caller.
void classify_planar(const OneForm& plain, const std::vector<int>& inv, long d, PointClassification& out) {
  const Polynomial& p = plain.coeff[0];
  const Polynomial& q = plain.coeff[1];
  FieldElement px = partial_at_origin(p, 0), py = partial_at_origin(p, 1);
  FieldElement qx = partial_at_origin(q, 0), qy = partial_at_origin(q, 1);
  FieldElement tr = qx - py;
  FieldElement det = qy * px - qx * py;
  if (det.is_zero()) {
    out.dimensional_type = 2;
    if (tr.is_zero()) {
      out.type = PointType::NotPreSimple;
      out.dimensional_type_exact = false;
      return;
    }
    out.type = PointType::SaddleNode;
    out.eigenvalues = std::make_pair(FieldElement(), tr);
    return;
  }
  if (!inv.empty()) {
    out.eigenvalues = std::make_pair(qx, -py);
    out.residues = {py, qx};
    out.residue_vars = {contains(inv, 0) ? 0 : -1, contains(inv, 1) ? 1 : -1};
  } else {
    // Characteristic polynomial t^2 - tr t + det of the dual vector field.
    Polynomial t = Polynomial::variable(2, 0);
    Polynomial chi = t * t - Polynomial::constant(2, tr) * t + Polynomial::constant(2, det);
    auto roots = field_roots(chi, 0, d);
    FieldElement mu1 = roots[0].value;
    FieldElement mu2 = roots.size() > 1 ? roots[1].value : mu1;
    out.eigenvalues = std::make_pair(mu1, mu2);
    out.residues = {-mu2, mu1};
    out.residue_vars = {-1, -1};
  }
}

}  // namespace

PointClassification classify_point(const OneForm& omega, const LocalDivisor& divisor, int truncation) {
  PointClassification out;
  out.divisor = divisor;
  OneForm cur = saturated_keep_scale(omega);
  long d = cur.field_d();
  for (int v : divisor.invariant) {
    if (v < 0 || v >= cur.n || !hyperplane_invariant(cur, v)) {
      throw Error(ErrorCode::SchemaError, std::string("divisor hyperplane ") + variable_name(cur.n, std::clamp(v, 0, cur.n - 1)) +
                                              " is not invariant");
    }
  }

  if (nonsingular_at_origin(cur)) {
    out.dimensional_type = 1;
    out.dimensional_type_exact = true;
    if (divisor.invariant.size() > 1) {
      out.type = PointType::NotPreSimple;
      return out;
    }
    if (divisor.invariant.size() == 1) {
      out.type = PointType::NonSingularNormalCrossings;
      return out;
    }
    std::vector<int> all = divisor.dicritical;
    bool transverse = false;
    for (int k = 0; k < cur.n; ++k) {
      if (!contains(all, k) && !cur.coeff[k].constant_term().is_zero()) transverse = true;
    }
    out.type = transverse ? PointType::NonSingularNormalCrossings : PointType::NotPreSimple;
    return out;
  }

  // Original index of every surviving variable.
  std::vector<int> orig(cur.n);
  for (int i = 0; i < cur.n; ++i) orig[i] = i;
  bool exact = true;

  for (;;) {
    std::vector<int> inv = invariant_hyperplanes(cur);
    OneForm log = to_log_form(cur, inv);
    int j = -1;
    for (int k = 0; k < cur.n && j < 0; ++k) {
      if (contains(inv, k)) continue;
      for (int s = 0; s < cur.n; ++s) {
        if (s != k && !log.coeff[s].constant_term().is_zero()) {
          j = k;
          break;
        }
      }
    }
    if (j < 0 || cur.n == 1) break;
    try {
      flow_box_eliminate(log, j, truncation);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TruncationInconclusive) throw;
      exact = false;
    }
    if (contains(divisor.dicritical, orig[j])) out.dicritical_eliminated = true;
    out.eliminated.push_back(orig[j]);
    orig.erase(orig.begin() + j);
    std::vector<Polynomial> coeff;
    std::vector<bool> flags;
    for (int i = 0; i < cur.n; ++i) {
      if (i == j) continue;
      coeff.push_back(log.coeff[i].drop_variable(j));
      flags.push_back(log.log[i]);
    }
    OneForm restricted(std::move(coeff), flags);
    if (restricted.plain().is_zero()) throw Error(ErrorCode::ZeroForm, "restriction of the form vanishes");
    cur = saturated_keep_scale(restricted);
  }
  std::sort(out.eliminated.begin(), out.eliminated.end());

  // Report residue variables in the caller's coordinates.
  auto to_orig = [&](std::vector<int> vars) {
    for (auto& v : vars) {
      if (v >= 0) v = orig[v];
    }
    return vars;
  };
  std::vector<int> inv = invariant_hyperplanes(cur);
  out.dimensional_type_exact = exact;
  const int m = cur.n;
  if (m == 2) {
    classify_planar(cur, inv, d, out);
    out.residue_vars = to_orig(out.residue_vars);
    if (!out.residues.empty()) label_residues(out, 2);
  } else {
    OneForm log = to_log_form(cur, inv);
    bool all_log = static_cast<int>(inv.size()) == m;
    bool nonzero = std::all_of(log.coeff.begin(), log.coeff.end(),
                               [](const Polynomial& c) { return !c.constant_term().is_zero(); });
    if (!all_log || !nonzero) {
      out.type = PointType::NotPreSimple;
      out.dimensional_type = m;
      out.dimensional_type_exact = false;
      return out;
    }
    for (int i = 0; i < m; ++i) {
      out.residues.push_back(log.coeff[i].constant_term());
      out.residue_vars.push_back(orig[i]);
    }
    label_residues(out, m);
  }
  if (out.type == PointType::NotPreSimple) out.dimensional_type_exact = false;
  else out.dimensional_type_exact = exact;
  return out;
}

OneForm flow_box_eliminate(const OneForm& omega, int j, int truncation) {
  const int n = omega.n;
  if (j < 0 || j >= n) throw Error(ErrorCode::DimensionError, "flow box variable out of range");
  if (omega.log[j]) throw Error(ErrorCode::NotAUnit, std::string("d") + variable_name(n, j) + " carries a log pole");
  int s = -1;
  for (int k = 0; k < n; ++k) {
    if (k != j && !omega.coeff[k].constant_term().is_zero()) {
      s = k;
      break;
    }
  }
  if (s < 0) throw Error(ErrorCode::NotAUnit, std::string("no unit coefficient transverse to ") + variable_name(n, j));
  const int N = truncation;

  std::vector<Polynomial> xi(n, Polynomial(n));
  xi[j] = omega.coeff[s];
  xi[s] = -omega.coeff[j];
  if (omega.log[s]) xi[s] = xi[s].shift_exponent(s, 1);
  auto apply = [&](const Polynomial& f, int deg) {
    Polynomial acc(n);
    for (int i = 0; i < n; ++i) {
      if (!xi[i].is_zero()) acc += f.derivative(i).multiply_truncated(xi[i], deg);
    }
    return acc.truncate(deg);
  };

  // Phi_i = sum_k t^k / k! (xi^k x_i) at x_j = 0, with t = y_j.
  std::vector<Polynomial> phi;
  Polynomial t = Polynomial::variable(n, j);
  for (int i = 0; i < n; ++i) {
    Polynomial f = Polynomial::variable(n, i);
    Polynomial sum = f.restrict(j, FieldElement());
    Polynomial tk = Polynomial::constant(n, FieldElement(1));
    Rational fact = 1;
    for (int k = 1; k <= N + 1; ++k) {
      f = apply(f, N + 1 - k);
      if (f.is_zero()) break;
      tk = tk * t;
      fact *= k;
      sum += (f.restrict(j, FieldElement()) * tk) * FieldElement(Rational(1) / fact);
    }
    phi.push_back(sum.truncate(N + 1));
  }

  OneForm plain = omega.plain();
  std::vector<Polynomial> pulled(n, Polynomial(n));
  for (int i = 0; i < n; ++i) {
    Polynomial pi = plain.coeff[i].substitute_truncated(phi, N);
    if (pi.is_zero()) continue;
    for (int k = 0; k < n; ++k) pulled[k] += pi.multiply_truncated(phi[i].derivative(k), N);
  }
  if (!pulled[j].truncate(N).is_zero()) {
    throw Error(ErrorCode::TruncationInconclusive, "dx_j coefficient survives at order " + std::to_string(N));
  }
  pulled[j] = Polynomial(n);
  std::vector<Polynomial> base;
  for (const auto& c : pulled) base.push_back(c.restrict(j, FieldElement()));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Polynomial w = pulled[a].multiply_truncated(base[b], N) - pulled[b].multiply_truncated(base[a], N);
      if (!w.is_zero()) {
        throw Error(ErrorCode::TruncationInconclusive,
                    "straightened form still depends on " + std::string(variable_name(n, j)) + " at order " +
                        std::to_string(N));
      }
    }
  }
  return OneForm(std::move(pulled));
}

int multiplicity(const OneForm& omega) {
  OneForm s = saturate(omega).form;
  int m = -1;
  for (const auto& c : s.coeff) {
    if (c.is_zero()) continue;
    int o = c.order();
    if (m < 0 || o < m) m = o;
  }
  return m;
}

int multiplicity(const OneForm& omega, const std::vector<FieldElement>& point) {
  return multiplicity(translate(omega, point));
}

MonomialProbe monomial_probe(std::span<const FieldElement> lambda, std::span<const int> a, std::span<const int> b) {
  if (a.size() != lambda.size() || b.size() != lambda.size()) {
    throw Error(ErrorCode::DimensionError, "weights must match the residual vector");
  }
  MonomialProbe out;
  bool a_nonzero = false, b_nonzero = false;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (a[i] < 0 || b[i] < 0) throw Error(ErrorCode::BadParameters, "weights must be non-negative");
    out.alpha -= FieldElement(Rational(a[i])) * lambda[i];
    out.beta += FieldElement(Rational(b[i])) * lambda[i];
    a_nonzero = a_nonzero || a[i] != 0;
    b_nonzero = b_nonzero || b[i] != 0;
  }
  if (!a_nonzero && !b_nonzero) throw Error(ErrorCode::BadParameters, "both weight vectors are zero");
  out.saddle_node_witness = (out.alpha.is_zero() && a_nonzero && !out.beta.is_zero()) ||
                            (out.beta.is_zero() && b_nonzero && !out.alpha.is_zero());
  return out;
}

FieldElement camacho_sad_index(const FieldElement& alpha_u, const FieldElement& alpha_v, Branch branch) {
  if (alpha_u.is_zero() || alpha_v.is_zero()) {
    throw Error(ErrorCode::SaddleNodeUnsupported, "a residue vanishes");
  }
  return branch == Branch::V ? -(alpha_u / alpha_v) : -(alpha_v / alpha_u);
}

int restricted_multiplicity(const OneForm& eta, const FieldElement& t) {
  if (eta.n != 2) throw Error(ErrorCode::DimensionError, "restricted multiplicity needs a planar form");
  OneForm p = eta.plain();
  if (!p.coeff[1].restrict(0, FieldElement()).is_zero()) {
    throw Error(ErrorCode::LineNotInvariant, "x does not divide the dy coefficient");
  }
  Polynomial a = p.coeff[0].restrict(0, FieldElement());
  if (a.is_zero()) throw Error(ErrorCode::ZeroForm, "the form vanishes along x = 0");
  std::vector<Polynomial> sub{Polynomial(2), Polynomial::variable(2, 1) + Polynomial::constant(2, t)};
  return a.substitute(sub).order_in(1);
}

DegreeIdentityReport degree_identity_check(const PlaneFoliation& w, const std::array<FieldElement, 3>& line,
                                           long field_d) {
  DegreeIdentityReport out;
  out.degree = w.degree;
  out.lhs = w.degree + 1;
  Polynomial euler(3);
  for (int i = 0; i < 3; ++i) euler += Polynomial::variable(3, i) * w.w[i];
  if (!euler.is_zero()) throw Error(ErrorCode::NotDicritical, "not a projective foliation");

  int k = -1;
  for (int i = 0; i < 3 && k < 0; ++i) {
    if (!line[i].is_zero()) k = i;
  }
  if (k < 0) throw Error(ErrorCode::BadParameters, "line has no nonzero coefficient");
  long d = field_d;
  for (const auto& c : w.w) d = d ? d : c.field_d();
  for (const auto& l : line) d = d ? d : l.d();

  // New coordinates: u0 = the line's linear form, u1, u2 = the other old variables.
  std::array<int, 2> others{};
  for (int i = 0, m = 0; i < 3; ++i) {
    if (i != k) others[m++] = i;
  }
  std::vector<Polynomial> old(3, Polynomial(3));
  FieldElement inv = line[k].inverse();
  old[k] = Polynomial::variable(3, 0) * inv;
  for (int m = 0; m < 2; ++m) {
    old[others[m]] = Polynomial::variable(3, m + 1);
    old[k] -= Polynomial::variable(3, m + 1) * (line[others[m]] * inv);
  }
  std::array<Polynomial, 3> pulled{Polynomial(3), Polynomial(3), Polynomial(3)};
  for (int i = 0; i < 3; ++i) {
    Polynomial wi = w.w[i].substitute(old);
    for (int m = 0; m < 3; ++m) pulled[m] += wi * old[i].derivative(m);
  }
  for (int m = 1; m < 3; ++m) {
    if (!pulled[m].restrict(0, FieldElement()).is_zero()) {
      out.invariant = false;
      return out;
    }
  }
  out.invariant = true;
  Polynomial a = pulled[0].restrict(0, FieldElement());
  if (a.is_zero()) throw Error(ErrorCode::ZeroForm, "the line lies in the singular set");

  auto point_of = [&](const FieldElement& u1, const FieldElement& u2) {
    std::vector<FieldElement> uv{FieldElement(), u1, u2};
    std::vector<FieldElement> coords;
    for (int i = 0; i < 3; ++i) coords.push_back(old[i].evaluate(uv));
    return coords;
  };

  Polynomial affine = a.restrict(2, FieldElement(1));
  for (const auto& r : field_roots(affine, 1, d)) {
    out.points.push_back({point_of(r.value, FieldElement(1)), r.multiplicity});
    out.rhs += r.multiplicity;
  }
  int at_infinity = a.restrict(1, FieldElement(1)).order_in(2);
  if (at_infinity > 0) {
    out.points.push_back({point_of(FieldElement(1), FieldElement()), at_infinity});
    out.rhs += at_infinity;
  }
  out.holds = out.lhs == out.rhs;
  return out;
}

}  // namespace fl
