#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <gmpxx.h>

#include <random>

#include "foliationlab/exactfield.hpp"

using namespace fl;

namespace {

FieldElement P(const char* s, long d = 0) { return parse_field_element(s, d); }

Rational random_rational(std::mt19937_64& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, range);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

FieldElement random_element(std::mt19937_64& rng, long d) {
  GaussRational a(random_rational(rng), random_rational(rng));
  GaussRational b(random_rational(rng), random_rational(rng));
  return FieldElement(a, b, d);
}

FieldElement random_real(std::mt19937_64& rng, long d, int range) {
  return FieldElement(GaussRational(random_rational(rng, range)), GaussRational(random_rational(rng, range)), d);
}

// 50-digit evaluation of a_re + b_re sqrt(d) with GMP floats.
int float_sign(const FieldElement& x) {
  mpf_class s(0, 200);
  mpf_class root = sqrt(mpf_class(x.d(), 200));
  s = mpf_class(x.a().re, 200) + mpf_class(x.b().re, 200) * root;
  return sgn(s);
}

}  // namespace

TEST_CASE("field_arith examples") {
  CHECK(P("1 + sqrt(2)", 2) * P("1 - sqrt(2)", 2) == FieldElement(-1));
  CHECK(P("i") * P("i") == FieldElement(-1));
  CHECK(P("1/2 + i") + P("1/2 - i") == FieldElement(1));
  CHECK(field_arith(P("3"), P("4"), ArithOp::Div) == FieldElement::rational(3, 4));
  CHECK_THROWS_AS(field_arith(P("1"), FieldElement(), ArithOp::Div), Error);
  try {
    (void)(P("1") / FieldElement());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
}

TEST_CASE("canonical representation") {
  FieldElement x = P("sqrt(2)", 2) - P("sqrt(2)", 2);
  CHECK(x.is_zero());
  CHECK(x.d() == 0);
  CHECK(x == FieldElement());
  CHECK(P("2/4") == FieldElement::rational(1, 2));
  CHECK(P("sqrt(8)", 2) == FieldElement(GaussRational(), GaussRational(2), 2));
  CHECK(P("sqrt(9)", 2) == FieldElement(3));
  CHECK(P("sqrt(0)", 2).is_zero());
}

TEST_CASE("printing round trips") {
  for (const char* s : {"3/2 - 2*i*sqrt(2)", "0", "-i", "1 + i + sqrt(2) + i*sqrt(2)", "-7/3*sqrt(2)"}) {
    FieldElement x = P(s, 2);
    CHECK(x.to_string() == s);
    CHECK(P(x.to_string().c_str(), 2) == x);
  }
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(P("1 +"), Error);
  CHECK_THROWS_AS(P("sqrt(3)", 2), Error);
  CHECK_THROWS_AS(P("x"), Error);
  CHECK_THROWS_AS(parse_field_element("1", 4), Error);
  try {
    P("(1");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
  try {
    (void)(P("sqrt(2)", 2) + P("sqrt(3)", 3));
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("reality_sign examples") {
  CHECK(reality_sign(P("1 - sqrt(2)", 2)) == Sign::Negative);
  CHECK(reality_sign(P("3 - 2*sqrt(2)", 2)) == Sign::Positive);
  CHECK(reality_sign(P("i")) == Sign::NotReal);
  CHECK(reality_sign(P("0")) == Sign::Zero);
  CHECK(reality_sign(P("-3 + 2*sqrt(2)", 2)) == Sign::Negative);
}

TEST_CASE("classify_ratio examples") {
  CHECK(classify_ratio(P("2"), P("-3")) == RatioClass::NegativeRational);
  CHECK(classify_ratio(P("sqrt(2)", 2), P("1")) == RatioClass::PositiveIrrational);
  CHECK(classify_ratio(P("1"), P("i")) == RatioClass::NotReal);
  CHECK(classify_ratio(P("1"), P("0")) == RatioClass::Undefined);
  CHECK(classify_ratio(P("-sqrt(2)", 2), P("3")) == RatioClass::NegativeIrrational);
  CHECK(classify_ratio(P("2*i"), P("3*i")) == RatioClass::PositiveRational);
}

TEST_CASE("nonresonant examples") {
  std::vector<FieldElement> a{P("1"), P("2/3")};
  CHECK_FALSE(nonresonant(a).resonant);
  std::vector<FieldElement> b{P("1"), P("-1/2")};
  Resonance r = nonresonant(b);
  REQUIRE(r.resonant);
  CHECK(r.witness == std::vector<Integer>{1, 2});
  std::vector<FieldElement> c{P("1"), P("i")};
  CHECK_FALSE(nonresonant(c).resonant);
  std::vector<FieldElement> z{P("1"), P("0")};
  try {
    nonresonant(z);
    FAIL("expected ZeroEntry");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroEntry);
  }
}

TEST_CASE("nonresonant finds witnesses outside any search bound") {
  std::vector<FieldElement> l{P("1"), P("-1/1000")};
  Resonance r = nonresonant(l);
  REQUIRE(r.resonant);
  CHECK(r.witness == std::vector<Integer>{1, 1000});
  std::vector<FieldElement> m{P("1 + i"), P("1 - i"), P("-1")};
  r = nonresonant(m);
  REQUIRE(r.resonant);
  CHECK(r.witness == std::vector<Integer>{1, 1, 2});
  std::vector<FieldElement> q{P("sqrt(2)", 2), P("-1")};
  CHECK_FALSE(nonresonant(q).resonant);
}

TEST_CASE("property: field axioms on random triples") {
  std::mt19937_64 rng(11);
  for (long d : {0L, 2L, 3L, 5L}) {
    for (int k = 0; k < 200; ++k) {
      FieldElement x = random_element(rng, d);
      FieldElement y = random_element(rng, d);
      FieldElement z = random_element(rng, d);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      if (!x.is_zero()) CHECK(x * x.inverse() == FieldElement(1));
      CHECK(x - x == FieldElement());
    }
  }
}

TEST_CASE("property: reality_sign agrees with 50-digit evaluation") {
  std::mt19937_64 rng(12);
  const long ds[] = {2, 3, 5, 6, 7, 10, 11};
  int checked = 0;
  for (int k = 0; k < 1000; ++k) {
    long d = ds[k % 7];
    FieldElement x = random_real(rng, d, 60);
    Sign s = reality_sign(x);
    REQUIRE(s != Sign::NotReal);
    int expected = float_sign(x);
    int got = s == Sign::Negative ? -1 : (s == Sign::Positive ? 1 : 0);
    CHECK(got == expected);
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("property: nonresonant agrees with brute force up to total 30") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> len(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    int n = len(rng);
    std::vector<FieldElement> l;
    while (static_cast<int>(l.size()) < n) {
      Rational q = random_rational(rng, 6);
      if (sgn(q) != 0) l.emplace_back(q);
    }
    bool brute = false;
    for (int a = 0; a <= 30 && !brute; ++a) {
      for (int b = 0; a + b <= 30 && !brute; ++b) {
        for (int c = 0; a + b + c <= 30 && !brute; ++c) {
          if (a + b + c == 0) continue;
          if (n < 2 && b > 0) continue;
          if (n < 3 && c > 0) continue;
          Rational s = a * l[0].rational_value();
          if (n > 1) s += b * l[1].rational_value();
          if (n > 2) s += c * l[2].rational_value();
          brute = sgn(s) == 0;
        }
      }
    }
    Resonance r = nonresonant(l);
    if (brute) CHECK(r.resonant);
    if (r.resonant) {
      FieldElement s;
      bool nonzero = false;
      for (int k = 0; k < n; ++k) {
        CHECK(r.witness[k] >= 0);
        nonzero = nonzero || r.witness[k] != 0;
        s += FieldElement(Rational(r.witness[k])) * l[k];
      }
      CHECK(nonzero);
      CHECK(s.is_zero());
    }
  }
}

TEST_CASE("rational square roots inside the field") {
  CHECK(*rational_sqrt_in_field(Rational(9, 4), 0) == FieldElement::rational(3, 2));
  CHECK(*rational_sqrt_in_field(Rational(-1), 0) == FieldElement::imaginary_unit());
  CHECK(*rational_sqrt_in_field(Rational(8), 2) == P("2*sqrt(2)", 2));
  CHECK_FALSE(rational_sqrt_in_field(Rational(3), 2).has_value());
}

TEST_CASE("recognize_rational") {
  CHECK(*recognize_rational(0.75) == Rational(3, 4));
  CHECK(*recognize_rational(-22.0 / 7.0) == Rational(-22, 7));
  CHECK_FALSE(recognize_rational(3.14159265358979, 100).has_value());
}
