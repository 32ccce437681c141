#include "foliationlab/oneform.hpp"

#include <algorithm>

namespace fl {

OneForm::OneForm(std::vector<Polynomial> plain_coefficients)
    : OneForm(std::move(plain_coefficients), std::vector<bool>()) {}

OneForm::OneForm(std::vector<Polynomial> coefficients, std::vector<bool> log_flags)
    : n(static_cast<int>(coefficients.size())), coeff(std::move(coefficients)), log(std::move(log_flags)) {
  if (n < 1 || n > 3) throw Error(ErrorCode::DimensionError, "forms live in dimension 1 to 3");
  if (log.empty()) log.assign(n, false);
  if (static_cast<int>(log.size()) != n) throw Error(ErrorCode::DimensionError, "log flag count");
  for (const auto& c : coeff) {
    if (c.nvars() != n) throw Error(ErrorCode::DimensionError, "coefficient arity differs from the form");
  }
}

bool OneForm::is_zero() const {
  return std::all_of(coeff.begin(), coeff.end(), [](const Polynomial& c) { return c.is_zero(); });
}

bool OneForm::has_log() const { return std::find(log.begin(), log.end(), true) != log.end(); }

OneForm OneForm::plain() const {
  if (!has_log()) return *this;
  std::vector<Polynomial> out;
  for (int i = 0; i < n; ++i) {
    Polynomial c = coeff[i];
    for (int j = 0; j < n; ++j) {
      if (log[j] && j != i) c = c.shift_exponent(j, 1);
    }
    out.push_back(std::move(c));
  }
  return OneForm(std::move(out));
}

long OneForm::field_d() const {
  for (const auto& c : coeff) {
    if (long d = c.field_d(); d != 0) return d;
  }
  return 0;
}

std::string OneForm::to_string() const {
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (coeff[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string v = variable_name(n, i);
    out += "(" + coeff[i].to_string() + ") d" + v;
    if (log[i]) out += "/" + v;
  }
  return out.empty() ? "0" : out;
}

Saturation saturate(const OneForm& omega) {
  OneForm p = omega.plain();
  if (p.is_zero()) throw Error(ErrorCode::ZeroForm, "cannot saturate the zero form");
  Polynomial g(p.n);
  for (const auto& c : p.coeff) g = gcd(g, c);
  for (auto& c : p.coeff) c = *c.exact_div(g);
  // Canonical scaling: the first nonzero coefficient is monic.
  for (const auto& c : p.coeff) {
    if (c.is_zero()) continue;
    FieldElement lc = c.leading_term().second;
    if (!lc.is_one()) {
      FieldElement inv = lc.inverse();
      for (auto& k : p.coeff) k *= inv;
      g *= lc;
    }
    break;
  }
  return {std::move(p), std::move(g)};
}

bool integrability_check(const OneForm& omega) {
  if (omega.n == 2) return true;
  OneForm p = omega.plain();
  const Polynomial& P = p.coeff[0];
  const Polynomial& Q = p.coeff[1];
  const Polynomial& R = p.coeff[2];
  Polynomial w = P * (R.derivative(1) - Q.derivative(2)) + Q * (P.derivative(2) - R.derivative(0)) +
                 R * (Q.derivative(0) - P.derivative(1));
  return w.is_zero();
}

OneForm to_log_form(const OneForm& omega, const std::vector<int>& vars) {
  OneForm p = omega.plain();
  std::vector<bool> flags(p.n, false);
  for (int j : vars) {
    if (j < 0 || j >= p.n) throw Error(ErrorCode::DimensionError, "log variable index " + std::to_string(j));
    flags[j] = true;
  }
  for (int j = 0; j < p.n; ++j) {
    if (!flags[j]) continue;
    for (int i = 0; i < p.n; ++i) {
      if (i != j && !p.coeff[i].divisible_by_var(j)) throw Error(ErrorCode::NotDivisible, variable_name(p.n, j));
    }
  }
  std::vector<Polynomial> out;
  for (int i = 0; i < p.n; ++i) {
    Polynomial c = p.coeff[i];
    for (int j = 0; j < p.n; ++j) {
      if (flags[j] && j != i) c = c.shift_exponent(j, -1);
    }
    out.push_back(std::move(c));
  }
  return OneForm(std::move(out), flags);
}

OneForm to_plain_form(const OneForm& omega) {
  OneForm p = omega.plain();
  for (int j = 0; j < p.n; ++j) {
    if (!omega.log[j]) continue;
    bool all = std::all_of(p.coeff.begin(), p.coeff.end(), [&](const Polynomial& c) { return c.divisible_by_var(j); });
    if (!all) continue;
    for (auto& c : p.coeff) c = c.shift_exponent(j, -1);
  }
  return p;
}

OneForm parse_one_form(const std::vector<std::string>& coefficients, const std::vector<bool>& log, int n, long d) {
  if (static_cast<int>(coefficients.size()) != n) {
    throw Error(ErrorCode::SchemaError, "expected " + std::to_string(n) + " coefficients");
  }
  std::vector<Polynomial> c;
  for (const auto& text : coefficients) c.push_back(parse_polynomial(text, n, d));
  return OneForm(std::move(c), log.empty() ? std::vector<bool>(n, false) : log);
}

bool hyperplane_invariant(const OneForm& omega, int var) {
  OneForm p = omega.plain();
  for (int i = 0; i < p.n; ++i) {
    if (i != var && !p.coeff[i].restrict(var, FieldElement()).is_zero()) return false;
  }
  return true;
}

}  // namespace fl
