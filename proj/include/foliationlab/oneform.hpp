#pragma once

#include <string>
#include <utility>
#include <vector>

#include "foliationlab/polynomial.hpp"

namespace fl {

/// Germ of a codimension-one foliation: sum of c_i dx_i, or c_i dx_i / x_i where log[i] is set.
struct OneForm {
  int n = 3;
  std::vector<Polynomial> coeff;
  std::vector<bool> log;

  OneForm() = default;
  explicit OneForm(std::vector<Polynomial> plain_coefficients);
  OneForm(std::vector<Polynomial> coefficients, std::vector<bool> log_flags);

  bool is_zero() const;
  bool has_log() const;
  /// Clears the logarithmic poles by multiplying through by the product of the log variables.
  OneForm plain() const;
  /// Plain coefficients of the form after clearing poles.
  std::vector<Polynomial> plain_coefficients() const { return plain().coeff; }
  long field_d() const;
  std::string to_string() const;

  friend bool operator==(const OneForm& a, const OneForm& b) {
    return a.n == b.n && a.coeff == b.coeff && a.log == b.log;
  }
};

struct Saturation {
  OneForm form;
  Polynomial removed;
};

/// Divides the plain coefficients by their monic gcd.
Saturation saturate(const OneForm& omega);

/// True iff omega wedge d(omega) vanishes identically; always true for n = 2.
bool integrability_check(const OneForm& omega);

/// Rewrites omega with log poles along the listed coordinate hyperplanes.
///
/// Each listed hyperplane must be invariant, i.e. x_j divides every plain
/// coefficient other than the dx_j one; otherwise NotDivisible names x_j.
OneForm to_log_form(const OneForm& omega, const std::vector<int>& vars);

/// Semantic plain value: clears the poles, then divides back by every log
/// variable that divides all plain coefficients.
OneForm to_plain_form(const OneForm& omega);

/// Builds a form from one coefficient text per variable.
OneForm parse_one_form(const std::vector<std::string>& coefficients, const std::vector<bool>& log, int n, long d);

/// Hyperplane {x_var = 0} is invariant for the plain form.
bool hyperplane_invariant(const OneForm& omega, int var);

}  // namespace fl
