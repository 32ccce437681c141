#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "foliationlab/errors.hpp"

namespace fl {

using Rational = mpq_class;
using Integer = mpz_class;

/// Gaussian rational re + im*i.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  friend GaussRational operator+(const GaussRational& x, const GaussRational& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussRational operator-(const GaussRational& x, const GaussRational& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussRational operator-(const GaussRational& x) { return {-x.re, -x.im}; }
  friend GaussRational operator*(const GaussRational& x, const GaussRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const GaussRational& x, const GaussRational& y) {
    return x.re == y.re && x.im == y.im;
  }
  GaussRational inverse() const;
};

/// Element a + b*sqrt(d) of Q(i, sqrt d) with a, b Gaussian rationals.
///
/// The discriminant travels with the element: it is 0 exactly when b = 0, so
/// elements of Q(i) combine freely with elements of any Q(i, sqrt d).
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long n) : a_(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  FieldElement(const Rational& q) : a_(GaussRational(q)) {}  // NOLINT(google-explicit-constructor)
  FieldElement(GaussRational a, GaussRational b, long d);

  static FieldElement imaginary_unit() { return FieldElement(GaussRational(0, 1), {}, 0); }
  static FieldElement sqrt_d(long d);
  static FieldElement rational(long num, long den) { return FieldElement(Rational(num, den)); }

  const GaussRational& a() const { return a_; }
  const GaussRational& b() const { return b_; }
  long d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return b_.is_zero() && a_.re == 1 && sgn(a_.im) == 0; }
  bool is_gaussian() const { return b_.is_zero(); }
  bool is_real() const { return sgn(a_.im) == 0 && sgn(b_.im) == 0; }
  bool is_rational() const { return b_.is_zero() && sgn(a_.im) == 0; }
  const Rational& rational_value() const;

  FieldElement operator-() const { return FieldElement(-a_, -b_, d_); }
  FieldElement& operator+=(const FieldElement& y) { return *this = *this + y; }
  FieldElement& operator-=(const FieldElement& y) { return *this = *this - y; }
  FieldElement& operator*=(const FieldElement& y) { return *this = *this * y; }
  FieldElement& operator/=(const FieldElement& y) { return *this = *this / y; }

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

  FieldElement inverse() const;
  /// Galois conjugate sending i to -i.
  FieldElement conj_i() const;
  /// Galois conjugate sending sqrt d to -sqrt d.
  FieldElement conj_sqrt() const;

  /// Rational coordinates over the basis {1, i, sqrt d, i sqrt d}.
  std::array<Rational, 4> coordinates() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  /// Total order used only for deterministic sorting.
  friend int compare(const FieldElement& x, const FieldElement& y);

 private:
  GaussRational a_;
  GaussRational b_;
  long d_ = 0;
};

FieldElement pow(FieldElement x, unsigned e);

enum class ArithOp { Add, Sub, Mul, Div };
FieldElement field_arith(const FieldElement& x, const FieldElement& y, ArithOp op);

enum class Sign { NotReal, Negative, Zero, Positive };
const char* to_string(Sign s);
Sign reality_sign(const FieldElement& x);

enum class RatioClass {
  NotReal,
  PositiveRational,
  NegativeRational,
  PositiveIrrational,
  NegativeIrrational,
  Undefined,
};
const char* to_string(RatioClass c);
RatioClass classify_ratio(const FieldElement& x, const FieldElement& y);

struct Resonance {
  bool resonant = false;
  std::vector<Integer> witness;  // empty when non-resonant
};
Resonance nonresonant(std::span<const FieldElement> lambda);

/// True iff d is 0 or a square-free integer >= 2.
bool valid_discriminant(long d);

/// Parses `3/2 - 2*i*sqrt(2)` style text; sqrt arguments must reduce to sqrt(d).
FieldElement parse_field_element(std::string_view text, long d);

/// Square root inside the field when the argument is rational.
std::optional<FieldElement> rational_sqrt_in_field(const Rational& q, long d);

/// Continued-fraction recovery of a rational with bounded denominator.
std::optional<Rational> recognize_rational(double x, long max_den = 1000000, double tol = 1e-9);

}  // namespace fl
