#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "foliationlab/oneform.hpp"

using namespace fl;

namespace {

Polynomial P(const char* s, int n = 2, long d = 0) { return parse_polynomial(s, n, d); }

OneForm F(std::vector<std::string> c, std::vector<bool> log = {}, long d = 0) {
  int n = static_cast<int>(c.size());
  return parse_one_form(c, log, n, d);
}

Polynomial random_poly(std::mt19937_64& rng, int n, int max_deg, int terms) {
  std::uniform_int_distribution<int> e(0, max_deg);
  std::uniform_int_distribution<int> c(-5, 5);
  Polynomial p(n);
  for (int k = 0; k < terms; ++k) {
    Exponent x{0, 0, 0};
    for (int v = 0; v < n; ++v) x[v] = e(rng);
    if (x[0] + x[1] + x[2] > max_deg) continue;
    p += Polynomial::monomial(n, x, FieldElement(static_cast<long>(c(rng))));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial parsing and printing") {
  CHECK(P("x*y").to_string() == "x*y");
  CHECK(P("2 x^2 y - 3").to_string() == "2*x^2*y - 3");
  CHECK(P("x1 + x2 + x3", 3) == P("x + y + z", 3));
  CHECK(P("(1 + sqrt(2)) x", 2, 2).to_string() == "(1 + sqrt(2))*x");
  CHECK(P("y^2 - x^3").total_degree() == 3);
  CHECK(P("y^2 - x^3").order() == 2);
  CHECK_THROWS_AS(P("x/y"), Error);
  CHECK_THROWS_AS(P("w"), Error);
}

TEST_CASE("poly_substitute examples") {
  Polynomial xp = P("x");
  Polynomial chart_y = P("x*y");
  CHECK(P("x*y").substitute({xp, chart_y}) == P("x^2*y"));
  CHECK(P("x^2 - y").substitute({xp, Polynomial(2)}) == P("x^2"));
  CHECK(P("y^2 - x^3").substitute({xp, chart_y}) == P("x^2*y^2 - x^3"));
}

TEST_CASE("saturate examples") {
  Saturation s = saturate(F({"x*y", "x^2"}));
  CHECK(s.form == F({"y", "x"}));
  CHECK(s.removed == P("x"));
  s = saturate(F({"5*x*y", "3*x^2"}));
  CHECK(s.form.coeff[0] * FieldElement(5) == P("5*y") * FieldElement(1));
  CHECK(s.form.coeff[0] == P("y"));
  CHECK(s.form.coeff[1] == P("3/5*x"));
  CHECK(s.removed == P("5*x"));
  s = saturate(F({"y", "x"}));
  CHECK(s.form == F({"y", "x"}));
  CHECK(s.removed == P("1"));
  try {
    saturate(F({"0", "0"}));
    FAIL("expected ZeroForm");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroForm);
  }
}

TEST_CASE("gcd") {
  CHECK(gcd(P("x^2 - y^2"), P("x^2 + 2 x y + y^2")) == P("x + y"));
  CHECK(gcd(P("x^2*y + x*y^2 + x", 3), P("x*z + x*y*z", 3)) == P("x", 3));
  CHECK(gcd(P("x^2 + 1"), P("x - i")) == P("x - i"));
  CHECK(gcd(P("x^2 - 2", 2, 2), P("x - sqrt(2)", 2, 2)) == P("x - sqrt(2)", 2, 2));
  CHECK(gcd(P("x"), P("y")) == P("1"));
  CHECK(gcd(Polynomial(2), P("3 x")) == P("x"));
}

TEST_CASE("integrability_check examples") {
  CHECK(integrability_check(F({"y*z", "x*z", "x*y"})));
  CHECK(integrability_check(F({"y^2 - z*x", "z^2 - x*y", "x^2 - y*z"})));
  CHECK_FALSE(integrability_check(F({"y", "z", "x"})));
  CHECK(integrability_check(F({"y", "x^5"})));
}

TEST_CASE("to_log_form examples") {
  OneForm w = to_log_form(F({"2*y", "3*x"}), {0, 1});
  CHECK(w.coeff[0] == P("2"));
  CHECK(w.coeff[1] == P("3"));
  CHECK(w.log == std::vector<bool>{true, true});
  OneForm v = to_log_form(F({"y", "0"}), {1});
  CHECK(v.coeff[0] == P("1"));
  CHECK(v.coeff[1].is_zero());
  try {
    to_log_form(F({"1", "1"}), {0});
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDivisible);
    CHECK(e.detail() == "x");
  }
  OneForm back = to_plain_form(F({"x*(1 + y)", "0"}, {true, false}));
  CHECK(back == F({"1 + y", "0"}));
}

TEST_CASE("field_roots") {
  auto r = field_roots(P("x^2 - 5 x + 6"), 0, 0);
  REQUIRE(r.size() == 2);
  CHECK(r[0].value == FieldElement(2));
  CHECK(r[1].value == FieldElement(3));
  r = field_roots(P("(x - 1)^3 * (x + i)"), 0, 0);
  REQUIRE(r.size() == 2);
  CHECK(r[0].value == -FieldElement::imaginary_unit());
  CHECK(r[0].multiplicity == 1);
  CHECK(r[1].multiplicity == 3);
  r = field_roots(P("x^2 - 2", 2, 2), 0, 2);
  REQUIRE(r.size() == 2);
  r = field_roots(P("x^4 - 4", 2, 2), 0, 2);
  CHECK(r.size() == 4);
  r = field_roots(P("(x - 1/3 - 2*i*sqrt(3))^2 * (x + 7/5)", 2, 3), 0, 3);
  REQUIRE(r.size() == 2);
  try {
    field_roots(P("x^3 - 2"), 0, 0);
    FAIL("expected NonRationalSingularPoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonRationalSingularPoint);
  }
}

TEST_CASE("property: substitution is a ring homomorphism") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 60; ++k) {
    Polynomial p = random_poly(rng, 3, 3, 5);
    Polynomial q = random_poly(rng, 3, 3, 5);
    std::vector<Polynomial> sigma{random_poly(rng, 3, 2, 3), random_poly(rng, 3, 2, 3), random_poly(rng, 3, 2, 3)};
    CHECK((p + q).substitute(sigma) == p.substitute(sigma) + q.substitute(sigma));
    CHECK((p * q).substitute(sigma) == p.substitute(sigma) * q.substitute(sigma));
    // Independent check by numeric evaluation at a point.
    std::vector<std::complex<double>> pt{{0.3, 0.1}, {-0.7, 0.2}, {0.5, -0.4}};
    std::vector<std::complex<double>> img;
    for (const auto& s : sigma) img.push_back(s.evaluate_numeric(pt));
    CHECK(std::abs(p.substitute(sigma).evaluate_numeric(pt) - p.evaluate_numeric(img)) < 1e-9);
  }
}

TEST_CASE("property: gcd recovers planted common factors") {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 60; ++k) {
    int n = 2 + (k % 2);
    Polynomial g = random_poly(rng, n, 2, 3);
    Polynomial a = random_poly(rng, n, 2, 3);
    Polynomial b = random_poly(rng, n, 2, 3);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    Polynomial h = gcd(g * a, g * b);
    CHECK((g * a).exact_div(h).has_value());
    CHECK((g * b).exact_div(h).has_value());
    CHECK(h.exact_div(g.monic()).has_value());
  }
}

TEST_CASE("property: saturate is idempotent and factors the input") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 50; ++k) {
    Polynomial u = random_poly(rng, 3, 2, 3);
    if (u.is_zero()) continue;
    OneForm w({u * random_poly(rng, 3, 2, 4), u * random_poly(rng, 3, 2, 4), u * random_poly(rng, 3, 2, 4)});
    if (w.is_zero()) continue;
    Saturation s = saturate(w);
    for (int i = 0; i < 3; ++i) CHECK(s.removed * s.form.coeff[i] == w.coeff[i]);
    Saturation t = saturate(s.form);
    CHECK(t.form == s.form);
    CHECK(t.removed == P("1", 3));
  }
}

TEST_CASE("property: to_log_form round trips divisible forms") {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 50; ++k) {
    Polynomial a = random_poly(rng, 3, 2, 3);
    Polynomial b = random_poly(rng, 3, 2, 3);
    Polynomial c = random_poly(rng, 3, 2, 3);
    // x and y invariant: the dx coefficient carries y, the dy coefficient x, dz both.
    OneForm w({P("y", 3) * a, P("x", 3) * b, P("x*y", 3) * c});
    if (w.is_zero()) continue;
    OneForm l = to_log_form(w, {0, 1});
    CHECK(l.plain() == w);
    CHECK(saturate(to_plain_form(l)).form == saturate(w).form);
  }
}

TEST_CASE("property: integrability invariant under polynomial multiples") {
  std::mt19937_64 rng(25);
  const std::vector<OneForm> forms{F({"y*z", "x*z", "x*y"}), F({"y^2 - z*x", "z^2 - x*y", "x^2 - y*z"}),
                                   F({"y", "z", "x"}), F({"2*y*z", "3*x*z", "-5*x*y"})};
  for (int k = 0; k < 20; ++k) {
    Polynomial u = random_poly(rng, 3, 2, 3);
    if (u.is_zero()) continue;
    for (const auto& w : forms) {
      OneForm m({u * w.coeff[0], u * w.coeff[1], u * w.coeff[2]});
      CHECK(integrability_check(m) == integrability_check(w));
    }
  }
}
