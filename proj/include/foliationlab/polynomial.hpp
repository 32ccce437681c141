#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "foliationlab/exactfield.hpp"

namespace fl {

using Exponent = std::array<int, 3>;

/// Graded lexicographic order with x > y > z.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = a[0] + a[1] + a[2];
    int db = b[0] + b[1] + b[2];
    if (da != db) return da < db;
    return a < b;
  }
};

/// Polynomial over Q(i, sqrt d) in n = 2 or 3 variables, canonical sparse form.
class Polynomial {
 public:
  using Terms = std::map<Exponent, FieldElement, GrlexLess>;

  explicit Polynomial(int nvars = 3);
  static Polynomial constant(int nvars, const FieldElement& c);
  static Polynomial variable(int nvars, int var);
  static Polynomial monomial(int nvars, const Exponent& e, const FieldElement& c = FieldElement(1));

  int nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  FieldElement coefficient(const Exponent& e) const;
  FieldElement constant_term() const { return coefficient({0, 0, 0}); }
  /// Greatest term in grlex order; requires nonzero.
  const std::pair<const Exponent, FieldElement>& leading_term() const;

  int total_degree() const;  // -1 for zero
  int order() const;         // lowest total degree, -1 for zero
  int degree_in(int var) const;
  int order_in(int var) const;
  /// Lowest total degree in the given subset of variables.
  int order_in(const std::vector<int>& vars) const;
  long field_d() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }
  Polynomial& operator*=(const FieldElement& c);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(Polynomial p, const FieldElement& c) { return p *= c; }
  friend Polynomial operator*(const FieldElement& c, Polynomial p) { return p *= c; }
  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.n_ == q.n_ && p.terms_ == q.terms_; }

  Polynomial derivative(int var) const;
  /// Composition with images[k] substituted for variable k; images share one arity.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Composition keeping only terms of total degree <= max_degree.
  Polynomial substitute_truncated(const std::vector<Polynomial>& images, int max_degree) const;
  Polynomial restrict(int var, const FieldElement& value) const;
  /// Sets x_var = 0 and renumbers the remaining variables into nvars - 1.
  Polynomial drop_variable(int var) const;
  FieldElement evaluate(const std::vector<FieldElement>& point) const;
  std::complex<double> evaluate_numeric(const std::vector<std::complex<double>>& point) const;
  /// Sum of the terms of total degree k.
  Polynomial homogeneous_part(int k) const;
  /// Sum of the terms whose degree in the listed variables equals k.
  Polynomial part_of_order(const std::vector<int>& vars, int k) const;
  Polynomial truncate(int max_degree) const;
  Polynomial multiply_truncated(const Polynomial& q, int max_degree) const;
  Polynomial shift_exponent(int var, int delta) const;
  /// Exact quotient, or std::nullopt when the division leaves a remainder.
  std::optional<Polynomial> exact_div(const Polynomial& d) const;
  bool divisible_by_var(int var, int power = 1) const { return is_zero() || order_in(var) >= power; }
  Polynomial with_nvars(int nvars) const;
  /// Scales so the grlex-leading coefficient is 1.
  Polynomial monic() const;

  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const FieldElement& c);

  int n_;
  Terms terms_;
};

Polynomial pow(const Polynomial& p, unsigned e);

/// Monic greatest common divisor by recursive content and primitive part.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

/// Variable names used for printing and parsing.
const char* variable_name(int nvars, int var);
/// Reads `x y z` or `x1 x2 x3` names with `^` powers and field constants.
Polynomial parse_polynomial(std::string_view text, int nvars, long d);

struct FieldRoot {
  FieldElement value;
  int multiplicity;
};

/// Roots in Q(i, sqrt d) of a univariate polynomial in `var`.
///
/// Candidates come from a floating-point root finder; every reported root is
/// verified exactly. A factor without roots in the field raises
/// NonRationalSingularPoint naming that factor.
std::vector<FieldRoot> field_roots(const Polynomial& p, int var, long d);

}  // namespace fl
