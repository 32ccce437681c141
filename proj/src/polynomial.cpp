#include "foliationlab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "foliationlab/detail/expr_parser.hpp"

namespace fl {

namespace {

int degree_of(const Exponent& e) { return e[0] + e[1] + e[2]; }

void check_var(int n, int var) {
  if (var < 0 || var >= n) throw Error(ErrorCode::DimensionError, "variable index " + std::to_string(var));
}

std::string coefficient_string(const FieldElement& c) {
  std::string s = c.to_string();
  bool compound = s.find(' ') != std::string::npos;
  return compound ? "(" + s + ")" : s;
}

// Leading coefficient and degree with respect to one variable.
Polynomial lc_in(const Polynomial& p, int var, int deg) {
  Polynomial out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] != deg) continue;
    Exponent f = e;
    f[var] = 0;
    out += Polynomial::monomial(p.nvars(), f, c);
  }
  return out;
}

std::vector<Polynomial> coefficients_in(const Polynomial& p, int var) {
  std::vector<Polynomial> out(std::max(p.degree_in(var), 0) + 1, Polynomial(p.nvars()));
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    f[var] = 0;
    out[e[var]] += Polynomial::monomial(p.nvars(), f, c);
  }
  return out;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  auto q = a.exact_div(b);
  if (!q) throw Error(ErrorCode::NotDivisible, "internal: inexact division in gcd");
  return *q;
}

Polynomial gcd_rec(const Polynomial& f, const Polynomial& g, std::vector<int> vars);

Polynomial content_in(const Polynomial& p, int var, const std::vector<int>& rest) {
  Polynomial c(p.nvars());
  for (const auto& k : coefficients_in(p, var)) {
    if (k.is_zero()) continue;
    c = c.is_zero() ? k : gcd_rec(c, k, rest);
    if (c.is_constant()) break;
  }
  return c.monic();
}

Polynomial primitive_in(const Polynomial& p, int var, const std::vector<int>& rest) {
  if (p.is_zero()) return p;
  return divide_exact(p, content_in(p, var, rest)).monic();
}

Polynomial prem(Polynomial a, const Polynomial& b, int var) {
  int db = b.degree_in(var);
  Polynomial lb = lc_in(b, var, db);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    int da = a.degree_in(var);
    Polynomial la = lc_in(a, var, da);
    a = lb * a - la * b.shift_exponent(var, da - db);
  }
  return a;
}

Polynomial gcd_rec(const Polynomial& f, const Polynomial& g, std::vector<int> vars) {
  const int n = f.nvars();
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (vars.empty() || f.is_constant() || g.is_constant()) return Polynomial::constant(n, 1);
  int v = vars.back();
  vars.pop_back();
  if (f.degree_in(v) == 0 && g.degree_in(v) == 0) return gcd_rec(f, g, vars);
  Polynomial cf = content_in(f, v, vars);
  Polynomial cg = content_in(g, v, vars);
  Polynomial c = gcd_rec(cf, cg, vars);
  Polynomial a = divide_exact(f, cf);
  Polynomial b = divide_exact(g, cg);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  Polynomial h(n);
  for (;;) {
    if (b.is_zero()) {
      h = a;
      break;
    }
    if (b.degree_in(v) == 0) {
      h = Polynomial::constant(n, 1);
      break;
    }
    Polynomial r = prem(a, b, v);
    a = b;
    b = primitive_in(r, v, vars);
  }
  return (c * primitive_in(h, v, vars)).monic();
}

struct PolyTraits {
  using Value = Polynomial;
  int n;
  long d;
  Value constant(const FieldElement& c) { return Polynomial::constant(n, c); }
  Value sqrt(const Integer& k) {
    auto r = rational_sqrt_in_field(Rational(k), d);
    if (!r) throw Error(ErrorCode::FieldMismatch, "sqrt(" + k.get_str() + ") is not in the field with d = " + std::to_string(d));
    return Polynomial::constant(n, *r);
  }
  std::optional<Value> variable(const std::string& name) {
    for (int k = 0; k < n; ++k) {
      if (name == variable_name(n, k) || name == "x" + std::to_string(k + 1)) return Polynomial::variable(n, k);
    }
    return std::nullopt;
  }
  Value power(const Value& b, unsigned e) { return pow(b, e); }
  Value divide(const Value& a, const Value& b, std::size_t at) {
    if (!b.is_constant() || b.is_zero()) {
      if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by 0");
      throw Error(ErrorCode::ParseError, "division by a non-constant at column " + std::to_string(at + 1));
    }
    return a * b.constant_term().inverse();
  }
};

using CLD = std::complex<long double>;

CLD horner(const std::vector<CLD>& c, CLD z) {
  CLD r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
  return r;
}

// Aberth iteration for all roots of a polynomial with low-to-high coefficients.
std::vector<CLD> numeric_roots(const std::vector<CLD>& c) {
  const std::size_t m = c.size() - 1;
  std::vector<CLD> dc(m);
  for (std::size_t k = 1; k <= m; ++k) dc[k - 1] = c[k] * static_cast<long double>(k);
  long double bound = 0;
  for (std::size_t k = 0; k < m; ++k) bound = std::max(bound, std::abs(c[k] / c[m]));
  long double radius = std::min<long double>(1 + bound, 1e6L) * 0.5L + 0.1L;
  std::vector<CLD> z(m);
  const long double two_pi = 6.283185307179586476925L;
  for (std::size_t k = 0; k < m; ++k) z[k] = std::polar(radius, two_pi * k / m + 0.4L);
  for (int iter = 0; iter < 1000; ++iter) {
    long double worst = 0;
    for (std::size_t k = 0; k < m; ++k) {
      CLD pv = horner(c, z[k]);
      CLD dv = horner(dc, z[k]);
      if (pv == CLD(0)) continue;
      CLD ratio = pv / dv;
      CLD s = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != k) s += CLD(1) / (z[k] - z[j]);
      }
      CLD w = ratio / (CLD(1) - ratio * s);
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max<long double>(1, std::abs(z[k])));
    }
    if (worst < 1e-18L) break;
  }
  return z;
}

std::vector<CLD> numeric_coefficients(const Polynomial& p, int var, long d, bool conj) {
  std::vector<CLD> c(p.degree_in(var) + 1, CLD(0));
  long double s = std::sqrt(static_cast<long double>(d));
  for (const auto& [e, v] : p.terms()) {
    FieldElement w = conj ? v.conj_sqrt() : v;
    long double re = w.a().re.get_d() + w.b().re.get_d() * s;
    long double im = w.a().im.get_d() + w.b().im.get_d() * s;
    c[e[var]] += CLD(re, im);
  }
  return c;
}

std::optional<GaussRational> recognize_gauss(CLD z) {
  auto re = recognize_rational(static_cast<double>(z.real()), 100000, 1e-8);
  auto im = recognize_rational(static_cast<double>(z.imag()), 100000, 1e-8);
  if (std::fabs(static_cast<double>(z.real())) < 1e-10) re = Rational(0);
  if (std::fabs(static_cast<double>(z.imag())) < 1e-10) im = Rational(0);
  if (!re || !im) return std::nullopt;
  return GaussRational(*re, *im);
}

}  // namespace

Polynomial::Polynomial(int nvars) : n_(nvars) {
  if (nvars < 1 || nvars > 3) throw Error(ErrorCode::DimensionError, "polynomials support 1 to 3 variables");
}

Polynomial Polynomial::constant(int nvars, const FieldElement& c) {
  Polynomial p(nvars);
  p.add_term({0, 0, 0}, c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int var) {
  check_var(nvars, var);
  Exponent e{0, 0, 0};
  e[var] = 1;
  return monomial(nvars, e);
}

Polynomial Polynomial::monomial(int nvars, const Exponent& e, const FieldElement& c) {
  Polynomial p(nvars);
  for (int k = nvars; k < 3; ++k) {
    if (e[k] != 0) throw Error(ErrorCode::DimensionError, "exponent outside the ambient dimension");
  }
  p.add_term(e, c);
  return p;
}

void Polynomial::add_term(const Exponent& e, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

FieldElement Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElement() : it->second;
}

const std::pair<const Exponent, FieldElement>& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroForm, "leading term of the zero polynomial");
  return *terms_.rbegin();
}

int Polynomial::total_degree() const { return terms_.empty() ? -1 : degree_of(terms_.rbegin()->first); }

int Polynomial::order() const { return terms_.empty() ? -1 : degree_of(terms_.begin()->first); }

int Polynomial::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int Polynomial::order_in(int var) const { return order_in(std::vector<int>{var}); }

int Polynomial::order_in(const std::vector<int>& vars) const {
  if (terms_.empty()) return -1;
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : vars) s += e[v];
    best = best < 0 ? s : std::min(best, s);
  }
  return best;
}

long Polynomial::field_d() const {
  for (const auto& [e, c] : terms_) {
    if (c.d() != 0) return c.d();
  }
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  if (q.n_ != n_) throw Error(ErrorCode::DimensionError, "adding polynomials of different arity");
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  if (q.n_ != n_) throw Error(ErrorCode::DimensionError, "subtracting polynomials of different arity");
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const FieldElement& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.n_ != q.n_) throw Error(ErrorCode::DimensionError, "multiplying polynomials of different arity");
  Polynomial r(p.n_);
  for (const auto& [e1, c1] : p.terms_) {
    for (const auto& [e2, c2] : q.terms_) {
      r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    }
  }
  return r;
}

Polynomial Polynomial::multiply_truncated(const Polynomial& q, int max_degree) const {
  Polynomial r(n_);
  for (const auto& [e1, c1] : terms_) {
    if (degree_of(e1) > max_degree) break;
    for (const auto& [e2, c2] : q.terms_) {
      if (degree_of(e1) + degree_of(e2) > max_degree) break;
      r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    }
  }
  return r;
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial r = Polynomial::constant(p.nvars(), 1);
  Polynomial b = p;
  while (e != 0) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e != 0) b = b * b;
  }
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  check_var(n_, var);
  Polynomial r(n_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    r.add_term(f, c * FieldElement(static_cast<long>(e[var])));
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != n_) throw Error(ErrorCode::DimensionError, "substitution arity");
  int m = images.front().nvars();
  // Cache powers per variable.
  std::array<std::vector<Polynomial>, 3> powers;
  for (int k = 0; k < n_; ++k) {
    if (images[k].nvars() != m) throw Error(ErrorCode::DimensionError, "substitution images differ in arity");
    powers[k].push_back(Polynomial::constant(m, 1));
  }
  Polynomial r(m);
  for (const auto& [e, c] : terms_) {
    Polynomial t = Polynomial::constant(m, c);
    for (int k = 0; k < n_; ++k) {
      while (static_cast<int>(powers[k].size()) <= e[k]) powers[k].push_back(powers[k].back() * images[k]);
      if (e[k] > 0) t = t * powers[k][e[k]];
    }
    r += t;
  }
  return r;
}

Polynomial Polynomial::substitute_truncated(const std::vector<Polynomial>& images, int max_degree) const {
  if (static_cast<int>(images.size()) != n_) throw Error(ErrorCode::DimensionError, "substitution arity");
  int m = images.front().nvars();
  std::array<std::vector<Polynomial>, 3> powers;
  for (int k = 0; k < n_; ++k) powers[k].push_back(Polynomial::constant(m, 1));
  Polynomial r(m);
  for (const auto& [e, c] : terms_) {
    Polynomial t = Polynomial::constant(m, c);
    for (int k = 0; k < n_; ++k) {
      while (static_cast<int>(powers[k].size()) <= e[k]) {
        powers[k].push_back(powers[k].back().multiply_truncated(images[k], max_degree));
      }
      if (e[k] > 0) t = t.multiply_truncated(powers[k][e[k]], max_degree);
    }
    r += t;
  }
  return r;
}

Polynomial Polynomial::drop_variable(int var) const {
  check_var(n_, var);
  if (n_ == 1) throw Error(ErrorCode::DimensionError, "cannot drop the only variable");
  Polynomial r(n_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[var] != 0) continue;
    Exponent f{0, 0, 0};
    int k = 0;
    for (int v = 0; v < n_; ++v) {
      if (v != var) f[k++] = e[v];
    }
    r.terms_.emplace(f, c);
  }
  return r;
}

Polynomial Polynomial::restrict(int var, const FieldElement& value) const {
  check_var(n_, var);
  Polynomial r(n_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] = 0;
    r.add_term(f, c * fl::pow(value, static_cast<unsigned>(e[var])));
  }
  return r;
}

FieldElement Polynomial::evaluate(const std::vector<FieldElement>& point) const {
  if (static_cast<int>(point.size()) != n_) throw Error(ErrorCode::DimensionError, "evaluation point arity");
  FieldElement r;
  for (const auto& [e, c] : terms_) {
    FieldElement t = c;
    for (int k = 0; k < n_; ++k) {
      if (e[k] != 0) t *= fl::pow(point[k], static_cast<unsigned>(e[k]));
    }
    r += t;
  }
  return r;
}

std::complex<double> Polynomial::evaluate_numeric(const std::vector<std::complex<double>>& point) const {
  std::complex<double> r = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (int k = 0; k < n_; ++k) {
      for (int j = 0; j < e[k]; ++j) t *= point[k];
    }
    r += t;
  }
  return r;
}

Polynomial Polynomial::homogeneous_part(int k) const {
  Polynomial r(n_);
  for (const auto& [e, c] : terms_) {
    if (degree_of(e) == k) r.terms_.emplace(e, c);
  }
  return r;
}

Polynomial Polynomial::part_of_order(const std::vector<int>& vars, int k) const {
  Polynomial r(n_);
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : vars) s += e[v];
    if (s == k) r.terms_.emplace(e, c);
  }
  return r;
}

Polynomial Polynomial::truncate(int max_degree) const {
  Polynomial r(n_);
  for (const auto& [e, c] : terms_) {
    if (degree_of(e) <= max_degree) r.terms_.emplace(e, c);
  }
  return r;
}

Polynomial Polynomial::shift_exponent(int var, int delta) const {
  Polynomial r(n_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] += delta;
    if (f[var] < 0) throw Error(ErrorCode::NotDivisible, std::string(variable_name(n_, var)));
    r.terms_.emplace(f, c);
  }
  return r;
}

std::optional<Polynomial> Polynomial::exact_div(const Polynomial& d) const {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by 0");
  if (d.n_ != n_) throw Error(ErrorCode::DimensionError, "dividing polynomials of different arity");
  const auto& [de, dc] = d.leading_term();
  FieldElement dinv = dc.inverse();
  Polynomial rem = *this;
  Polynomial quo(n_);
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading_term();
    Exponent q{re[0] - de[0], re[1] - de[1], re[2] - de[2]};
    if (q[0] < 0 || q[1] < 0 || q[2] < 0) return std::nullopt;
    Polynomial t = monomial(n_, q, rc * dinv);
    quo += t;
    rem -= t * d;
  }
  return quo;
}

Polynomial Polynomial::with_nvars(int nvars) const {
  Polynomial r(nvars);
  for (const auto& [e, c] : terms_) {
    for (int k = nvars; k < 3; ++k) {
      if (e[k] != 0) throw Error(ErrorCode::DimensionError, "polynomial uses a dropped variable");
    }
    r.terms_.emplace(e, c);
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading_term().second.inverse();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int k = 0; k < n_; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(n_, k);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    bool negative = c.is_real() && reality_sign(c) == Sign::Negative && c.is_rational();
    FieldElement mag = negative ? -c : c;
    std::string coef;
    if (mono.empty()) {
      coef = coefficient_string(mag);
    } else if (!mag.is_one()) {
      coef = coefficient_string(mag) + "*";
    }
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coef + mono;
    first = false;
  }
  return out;
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != g.nvars()) throw Error(ErrorCode::DimensionError, "gcd of polynomials of different arity");
  std::vector<int> vars(f.nvars());
  std::iota(vars.begin(), vars.end(), 0);
  return gcd_rec(f, g, vars).monic();
}

const char* variable_name(int nvars, int var) {
  static const char* names3[] = {"x", "y", "z"};
  static const char* names1[] = {"t"};
  if (nvars == 1) return names1[0];
  return names3[var];
}

Polynomial parse_polynomial(std::string_view text, int nvars, long d) {
  if (!valid_discriminant(d)) throw Error(ErrorCode::FieldMismatch, "invalid discriminant " + std::to_string(d));
  PolyTraits traits{nvars, d};
  return detail::ExprParser<PolyTraits>(text, traits).parse();
}

std::vector<FieldRoot> field_roots(const Polynomial& p, int var, long d) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroForm, "roots of the zero polynomial");
  for (const auto& [e, c] : p.terms()) {
    for (int k = 0; k < p.nvars(); ++k) {
      if (k != var && e[k] != 0) throw Error(ErrorCode::DimensionError, "field_roots expects a univariate polynomial");
    }
  }
  const int n = p.nvars();
  std::vector<FieldRoot> out;
  if (p.degree_in(var) == 0) return out;
  Polynomial g = gcd(p, p.derivative(var));
  Polynomial sq = *p.exact_div(g);
  Polynomial t = Polynomial::variable(n, var);

  std::vector<FieldElement> found;
  auto consider = [&](const FieldElement& cand) {
    for (const auto& f : found) {
      if (f == cand) return;
    }
    Polynomial at = sq.restrict(var, cand);
    if (at.is_zero()) found.push_back(cand);
  };

  auto alpha = numeric_roots(numeric_coefficients(sq, var, d, false));
  if (d == 0) {
    for (const auto& a : alpha) {
      if (auto gr = recognize_gauss(a)) consider(FieldElement(*gr, {}, 0));
    }
  } else {
    auto beta = numeric_roots(numeric_coefficients(sq, var, d, true));
    long double s = std::sqrt(static_cast<long double>(d));
    for (const auto& a : alpha) {
      for (const auto& b : beta) {
        auto ga = recognize_gauss((a + b) / 2.0L);
        auto gc = recognize_gauss((a - b) / (2.0L * s));
        if (ga && gc) consider(FieldElement(*ga, *gc, d));
      }
    }
  }

  Polynomial rest = sq;
  for (const auto& r : found) rest = *rest.exact_div(t - Polynomial::constant(n, r));
  if (rest.degree_in(var) == 1) {
    FieldElement a = rest.coefficient([&] { Exponent e{0, 0, 0}; e[var] = 1; return e; }());
    found.push_back(-rest.constant_term() / a);
  } else if (rest.degree_in(var) > 1) {
    throw Error(ErrorCode::NonRationalSingularPoint, rest.monic().to_string() + " has no roots in the field");
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return compare(a, b) < 0; });
  for (const auto& r : found) {
    Polynomial lin = t - Polynomial::constant(n, r);
    Polynomial q = p;
    int mult = 0;
    while (auto next = q.exact_div(lin)) {
      q = *next;
      ++mult;
    }
    out.push_back({r, mult});
  }
  return out;
}

}  // namespace fl
