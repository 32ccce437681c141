#include "foliationlab/exactfield.hpp"

#include <algorithm>
#include <cmath>

#include "foliationlab/detail/expr_parser.hpp"

namespace fl {

namespace {

long common_d(const FieldElement& x, const FieldElement& y) {
  if (x.d() == 0) return y.d();
  if (y.d() == 0 || y.d() == x.d()) return x.d();
  throw Error(ErrorCode::FieldMismatch,
              "sqrt(" + std::to_string(x.d()) + ") and sqrt(" + std::to_string(y.d()) + ") in one expression");
}

// Splits n > 0 into k^2 * m with m square-free.
std::pair<Integer, Integer> square_split(Integer n) {
  Integer k = 1;
  Integer m = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      k *= p;
    }
    if (n % p == 0) {
      n /= p;
      m *= p;
    }
  }
  m *= n;
  return {k, m};
}

std::string term_string(const Rational& c, const char* unit, bool first) {
  std::string out;
  Rational mag = abs(c);
  if (sgn(c) < 0) {
    out += first ? "-" : " - ";
  } else if (!first) {
    out += " + ";
  }
  if (*unit == '\0') {
    out += mag.get_str();
  } else if (mag == 1) {
    out += unit;
  } else {
    out += mag.get_str() + "*" + unit;
  }
  return out;
}

// Rational kernel basis of a 4 x k matrix given by its columns.
std::vector<std::vector<Rational>> kernel(const std::vector<std::array<Rational, 4>>& cols) {
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> m(4, std::vector<Rational>(k));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t r = 0; r < 4; ++r) m[r][j] = cols[j][r];
  }
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < 4; ++col) {
    std::size_t p = row;
    while (p < 4 && sgn(m[p][col]) == 0) ++p;
    if (p == 4) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < k; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < k; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) continue;
    std::vector<Rational> v(k);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

struct FieldTraits {
  using Value = FieldElement;
  long d;
  Value constant(const FieldElement& c) { return c; }
  Value sqrt(const Integer& n) {
    auto r = rational_sqrt_in_field(Rational(n), d);
    if (!r) throw Error(ErrorCode::FieldMismatch, "sqrt(" + n.get_str() + ") is not in the field with d = " + std::to_string(d));
    return *r;
  }
  std::optional<Value> variable(const std::string&) { return std::nullopt; }
  Value power(const Value& b, unsigned e) { return pow(b, e); }
  Value divide(const Value& a, const Value& b, std::size_t) { return a / b; }
};

}  // namespace

GaussRational GaussRational::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
  return {re / n, -im / n};
}

FieldElement::FieldElement(GaussRational a, GaussRational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (b_.is_zero() || d_ == 0) {
    b_ = GaussRational();
    d_ = 0;
    return;
  }
  if (!valid_discriminant(d_)) {
    throw Error(ErrorCode::FieldMismatch, "discriminant " + std::to_string(d_) + " is not square-free >= 2");
  }
}

FieldElement FieldElement::sqrt_d(long d) {
  if (d == 0) return FieldElement();
  return FieldElement(GaussRational(), GaussRational(1), d);
}

const Rational& FieldElement::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::FieldMismatch, to_string() + " is not rational");
  return a_.re;
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  long d = common_d(x, y);
  return FieldElement(x.a_ + y.a_, x.b_ + y.b_, d);
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  long d = common_d(x, y);
  return FieldElement(x.a_ - y.a_, x.b_ - y.b_, d);
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  long d = common_d(x, y);
  GaussRational a = x.a_ * y.a_;
  if (d != 0) a = a + GaussRational(Rational(d)) * (x.b_ * y.b_);
  return FieldElement(a, x.a_ * y.b_ + x.b_ * y.a_, d);
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) { return x * y.inverse(); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "division by 0");
  GaussRational n = a_ * a_ - GaussRational(Rational(d_)) * (b_ * b_);
  GaussRational ninv = n.inverse();
  return FieldElement(a_ * ninv, -(b_ * ninv), d_);
}

FieldElement FieldElement::conj_i() const { return FieldElement(a_.conj(), b_.conj(), d_); }

FieldElement FieldElement::conj_sqrt() const { return FieldElement(a_, -b_, d_); }

std::array<Rational, 4> FieldElement::coordinates() const { return {a_.re, a_.im, b_.re, b_.im}; }

std::complex<double> FieldElement::to_complex() const {
  double s = std::sqrt(static_cast<double>(d_));
  return {a_.re.get_d() + b_.re.get_d() * s, a_.im.get_d() + b_.im.get_d() * s};
}

std::string FieldElement::to_string() const {
  if (is_zero()) return "0";
  std::string sq = "sqrt(" + std::to_string(d_) + ")";
  std::string isq = "i*" + sq;
  std::string out;
  bool first = true;
  auto add = [&](const Rational& c, const char* unit) {
    if (sgn(c) == 0) return;
    out += term_string(c, unit, first);
    first = false;
  };
  add(a_.re, "");
  add(a_.im, "i");
  add(b_.re, sq.c_str());
  add(b_.im, isq.c_str());
  return out;
}

int compare(const FieldElement& x, const FieldElement& y) {
  if (x.d_ != y.d_) return x.d_ < y.d_ ? -1 : 1;
  auto cx = x.coordinates();
  auto cy = y.coordinates();
  for (std::size_t k = 0; k < 4; ++k) {
    int c = cmp(cx[k], cy[k]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

FieldElement pow(FieldElement x, unsigned e) {
  FieldElement r(1);
  while (e != 0) {
    if (e & 1U) r *= x;
    e >>= 1U;
    if (e != 0) x *= x;
  }
  return r;
}

FieldElement field_arith(const FieldElement& x, const FieldElement& y, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
  }
  throw Error(ErrorCode::ParseError, "unknown arithmetic operation");
}

const char* to_string(Sign s) {
  switch (s) {
    case Sign::NotReal: return "NotReal";
    case Sign::Negative: return "Negative";
    case Sign::Zero: return "Zero";
    case Sign::Positive: return "Positive";
  }
  return "?";
}

Sign reality_sign(const FieldElement& x) {
  if (!x.is_real()) return Sign::NotReal;
  const Rational& p = x.a().re;
  const Rational& q = x.b().re;
  auto of = [](int s) { return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero); };
  int sp = sgn(p);
  int sq = sgn(q);
  if (sq == 0) return of(sp);
  if (sp == 0 || sp == sq) return of(sq);
  int c = cmp(p * p, Rational(x.d()) * q * q);
  return c > 0 ? of(sp) : of(sq);
}

const char* to_string(RatioClass c) {
  switch (c) {
    case RatioClass::NotReal: return "NotReal";
    case RatioClass::PositiveRational: return "PositiveRational";
    case RatioClass::NegativeRational: return "NegativeRational";
    case RatioClass::PositiveIrrational: return "PositiveIrrational";
    case RatioClass::NegativeIrrational: return "NegativeIrrational";
    case RatioClass::Undefined: return "Undefined";
  }
  return "?";
}

RatioClass classify_ratio(const FieldElement& x, const FieldElement& y) {
  if (y.is_zero() || x.is_zero()) return RatioClass::Undefined;
  FieldElement r = x / y;
  Sign s = reality_sign(r);
  if (s == Sign::NotReal) return RatioClass::NotReal;
  bool positive = s == Sign::Positive;
  if (r.is_rational()) return positive ? RatioClass::PositiveRational : RatioClass::NegativeRational;
  return positive ? RatioClass::PositiveIrrational : RatioClass::NegativeIrrational;
}

Resonance nonresonant(std::span<const FieldElement> lambda) {
  const std::size_t n = lambda.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (lambda[k].is_zero()) throw Error(ErrorCode::ZeroEntry, "lambda[" + std::to_string(k) + "] = 0");
  }
  std::vector<std::array<Rational, 4>> coords;
  coords.reserve(n);
  for (const auto& l : lambda) coords.push_back(l.coordinates());

  // A minimal-support non-negative solution spans a one-dimensional kernel.
  for (std::size_t size = 1; size <= n; ++size) {
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
      std::vector<std::size_t> support;
      std::vector<std::array<Rational, 4>> cols;
      for (std::size_t k = 0; k < n; ++k) {
        if (mask & (1U << k)) {
          support.push_back(k);
          cols.push_back(coords[k]);
        }
      }
      auto ker = kernel(cols);
      if (ker.size() != 1) continue;
      const auto& v = ker.front();
      int s0 = sgn(v[0]);
      if (s0 == 0 || !std::all_of(v.begin(), v.end(), [&](const Rational& c) { return sgn(c) == s0; })) continue;
      Integer l = 1;
      for (const auto& c : v) l = lcm(l, c.get_den());
      std::vector<Integer> w(n, Integer(0));
      Integer g = 0;
      for (std::size_t t = 0; t < support.size(); ++t) {
        Rational scaled = abs(v[t]) * l;
        w[support[t]] = scaled.get_num();
        g = gcd(g, w[support[t]]);
      }
      for (auto& m : w) m /= g;
      return {true, std::move(w)};
    }
  }
  return {false, {}};
}

bool valid_discriminant(long d) {
  if (d == 0) return true;
  if (d < 2) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

FieldElement parse_field_element(std::string_view text, long d) {
  if (!valid_discriminant(d)) throw Error(ErrorCode::FieldMismatch, "invalid discriminant " + std::to_string(d));
  FieldTraits traits{d};
  return detail::ExprParser<FieldTraits>(text, traits).parse();
}

std::optional<FieldElement> rational_sqrt_in_field(const Rational& q, long d) {
  if (sgn(q) == 0) return FieldElement();
  Rational mag = abs(q);
  auto [k, m] = square_split(mag.get_num() * mag.get_den());
  Rational root(k, mag.get_den());
  root.canonicalize();
  FieldElement r;
  if (m == 1) {
    r = FieldElement(root);
  } else if (d != 0 && m == d) {
    r = FieldElement(GaussRational(), GaussRational(root), d);
  } else {
    return std::nullopt;
  }
  if (sgn(q) < 0) r *= FieldElement::imaginary_unit();
  return r;
}

std::optional<Rational> recognize_rational(double x, long max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(r);
    if (std::fabs(fl) > 1e15) return std::nullopt;
    Integer a(fl);
    Integer h2 = a * h1 + h0;
    Integer k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    Rational cand(h1, k1);
    cand.canonicalize();
    if (std::fabs(cand.get_d() - x) <= tol * std::max(1.0, std::fabs(x))) return cand;
    double frac = r - fl;
    if (frac < 1e-300) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

}  // namespace fl
