#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "foliationlab/reduce2d.hpp"

using namespace fl;

namespace {

OneForm F(std::vector<std::string> c, long d = 0) { return parse_one_form(c, {}, 2, d); }

FieldElement q(long num, long den = 1) { return FieldElement::rational(num, den); }

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  int a = 0;
  while (a == 0) a = num(rng);
  Rational r(a, den(rng));
  r.canonicalize();
  return r;
}

// Logarithmic form prod L_i * sum lambda_i dL_i / L_i for lines L_i = a_i x + b_i y.
OneForm lines_form(const std::vector<std::pair<FieldElement, FieldElement>>& lines, const std::vector<FieldElement>& lam) {
  std::vector<Polynomial> c(2, Polynomial(2));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    Polynomial others = Polynomial::constant(2, lam[i]);
    for (std::size_t k = 0; k < lines.size(); ++k) {
      if (k != i) {
        others = others * (Polynomial::variable(2, 0) * lines[k].first + Polynomial::variable(2, 1) * lines[k].second);
      }
    }
    c[0] += others * lines[i].first;
    c[1] += others * lines[i].second;
  }
  return OneForm(c);
}

std::vector<std::pair<FieldElement, FieldElement>> distinct_lines(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> e(-3, 3);
  std::vector<std::pair<FieldElement, FieldElement>> out;
  while (static_cast<int>(out.size()) < n) {
    FieldElement a(e(rng)), b(e(rng));
    if (a.is_zero() && b.is_zero()) continue;
    bool fresh = true;
    for (const auto& [c, d] : out) fresh = fresh && !(a * d - b * c).is_zero();
    if (fresh) out.emplace_back(a, b);
  }
  return out;
}

OneForm linear_pullback(const OneForm& w, const std::array<std::array<FieldElement, 2>, 2>& m) {
  std::vector<Polynomial> img(2, Polynomial(2));
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) img[i] += Polynomial::variable(2, k) * m[i][k];
  }
  std::vector<Polynomial> out(2, Polynomial(2));
  for (int i = 0; i < 2; ++i) {
    Polynomial c = w.coeff[i].substitute(img);
    for (int k = 0; k < 2; ++k) out[k] += c * m[i][k];
  }
  return OneForm(out);
}

}  // namespace

TEST_CASE("cusp resolution") {
  ReductionTree t = reduce(F({"-3*x^2", "2*y"}));
  CHECK(t.complete);
  CHECK(t.blowups == 3);
  CHECK(t.depth == 3);
  REQUIRE(t.curves.size() == 3);
  CHECK(t.curves[0].self_intersection == -3);
  CHECK(t.curves[1].self_intersection == -2);
  CHECK(t.curves[2].self_intersection == -1);
  CHECK(verdict_generalized_curve(t).generalized_curve);
  CHECK(detect_nodal_separators(t).empty());
  auto audit = cs_sum_audit(t);
  REQUIRE(audit.size() == 3);
  for (const auto& rep : audit) {
    CHECK(rep.matches);
    CHECK(rep.sum == FieldElement(rep.self_intersection));
  }
  for (const auto* leaf : t.leaves()) CHECK(is_simple(leaf->classification.type));
}

TEST_CASE("already reduced and saddle-node roots") {
  ReductionTree corner = reduce(F({"2*y", "3*x"}));
  CHECK(corner.depth == 0);
  CHECK(corner.blowups == 0);
  CHECK(verdict_generalized_curve(corner).generalized_curve);
  CHECK(cs_sum_audit(corner).empty());

  ReductionTree sn = reduce(F({"y", "-x^2"}));
  CHECK(sn.depth == 0);
  auto v = verdict_generalized_curve(sn);
  CHECK_FALSE(v.generalized_curve);
  CHECK(v.saddle_nodes == std::vector<std::string>{"0"});
  CHECK_THROWS_AS(cs_sum_audit(sn), Error);
}

TEST_CASE("nodal separators") {
  ReductionTree irr = reduce(F({"-sqrt(2)*y", "x"}, 2));
  CHECK(detect_nodal_separators(irr) == std::vector<std::string>{"0"});
  ReductionTree rat = reduce(F({"-2*y", "x"}));
  CHECK(detect_nodal_separators(rat).empty());
  CHECK(verdict_generalized_curve(rat).generalized_curve);
  bool dicritical = false;
  for (const auto& c : rat.curves) dicritical = dicritical || c.dicritical;
  CHECK(dicritical);
  for (const auto& rep : cs_sum_audit(rat)) CHECK(rep.matches);
}

TEST_CASE("nodal separators are stable under linear coordinate changes") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> e(-3, 3);
  OneForm base = F({"-sqrt(2)*y + x^2*y", "x"}, 2);
  auto ref = detect_nodal_separators(reduce(base)).size();
  CHECK(ref == 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::array<std::array<FieldElement, 2>, 2> m{};
    do {
      for (auto& row : m) {
        for (auto& x : row) x = FieldElement(e(rng));
      }
    } while ((m[0][0] * m[1][1] - m[0][1] * m[1][0]).is_zero());
    CHECK(detect_nodal_separators(reduce(linear_pullback(base, m))).size() == ref);
  }
}

TEST_CASE("depth limit") {
  CHECK_THROWS_AS(reduce(F({"-3*x^2", "2*y"}), 2), Error);
  ReductionTree t = reduce(F({"-3*x^2", "2*y"}), 2, true);
  CHECK_FALSE(t.complete);
  try {
    verdict_generalized_curve(t);
    FAIL("incomplete tree accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompleteTree);
  }
}

TEST_CASE("Camacho-Sad sum after one blow-up") {
  CHECK(cs_sum_after_blowup(F({"2*y", "3*x"})) == q(-1));
  CHECK(cs_sum_after_blowup(F({"-3*x^2", "2*y"})) == q(-1));
  CHECK(cs_sum_after_blowup(F({"y", "-x^2"})) == q(-1));
  CHECK_THROWS_AS(cs_sum_after_blowup(F({"y", "-x"})), Error);
  auto idx = cs_indices_after_blowup(F({"2*y", "3*x"}));
  REQUIRE(idx.size() == 2);
  CHECK(idx[0] == std::pair<std::string, FieldElement>{"x(0,0)", q(-3, 5)});
  CHECK(idx[1] == std::pair<std::string, FieldElement>{"y(0,0)", q(-2, 5)});
}

TEST_CASE("residue formula for the index agrees with the residual vector") {
  CHECK(cs_index_by_residue(F({"5*y", "3*x"}), 0) == q(-3, 5));
  CHECK(cs_index_by_residue(F({"2*y", "5*x"}), 1) == q(-2, 5));
  CHECK(cs_index_by_residue(F({"1", "x"}), 0) == q(0));
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto lines = distinct_lines(rng, 3);
    std::vector<FieldElement> lam{FieldElement(random_rational(rng)), FieldElement(random_rational(rng)),
                                  FieldElement(random_rational(rng))};
    if ((lam[0] + lam[1] + lam[2]).is_zero()) continue;
    ReductionTree t = reduce(lines_form(lines, lam), 120);
    for (const auto* leaf : t.leaves()) {
      const auto& c = leaf->classification;
      if (c.residues.size() != 2) continue;
      for (const auto& [var, cid] : leaf->divisor) {
        if (t.curves[cid].dicritical) continue;
        int iv = c.residue_vars[0] == var ? 0 : 1;
        REQUIRE(c.residue_vars[iv] == var);
        CHECK(cs_index_by_residue(leaf->form, var) == camacho_sad_index(c.residues[1 - iv], c.residues[iv], Branch::V));
      }
    }
  }
}

TEST_CASE("sum rule on random non-dicritical germs with higher order terms") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> count(2, 4), coef(-2, 2), deg(0, 3);
  int done = 0;
  while (done < 60) {
    int n = count(rng);
    auto lines = distinct_lines(rng, n);
    std::vector<FieldElement> lam;
    FieldElement sum;
    for (int i = 0; i < n; ++i) {
      lam.emplace_back(random_rational(rng));
      sum += lam.back();
    }
    if (sum.is_zero()) continue;
    OneForm w = lines_form(lines, lam);
    // Terms of degree > n leave the tangent cone unchanged.
    for (int k = 0; k < 2; ++k) {
      int a = deg(rng);
      w.coeff[k] += Polynomial::monomial(2, {a, n + 1 - a > 0 ? n + 1 - a : 0, 0}, FieldElement(coef(rng)));
    }
    if (w.is_zero()) continue;
    CHECK(cs_sum_after_blowup(w) == q(-1));
    ++done;
  }
}

TEST_CASE("quasi-homogeneous curves and line arrangements reduce") {
  for (auto [p, qq] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {2, 7}}) {
    std::string dx = std::to_string(-qq) + "*x^" + std::to_string(qq - 1);
    std::string dy = std::to_string(p) + "*y^" + std::to_string(p - 1);
    ReductionTree t = reduce(F({dx, dy}), 20);
    INFO(p, " ", qq);
    CHECK(t.complete);
    CHECK(verdict_generalized_curve(t).generalized_curve);
    for (const auto& rep : cs_sum_audit(t)) CHECK(rep.matches);
    for (const auto* leaf : t.leaves()) {
      const auto& c = leaf->classification;
      if (is_simple(c.type)) CHECK_FALSE(nonresonant(c.residues).resonant);
      if (c.type == PointType::SeidenbergSimpleResonant) {
        CHECK(classify_ratio(c.residues[0], c.residues[1]) == RatioClass::NegativeRational);
      }
    }
  }
  std::mt19937 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    auto lines = distinct_lines(rng, 4);
    std::vector<FieldElement> lam{q(1), q(2), q(3), FieldElement(random_rational(rng))};
    if ((lam[0] + lam[1] + lam[2] + lam[3]).is_zero()) continue;
    ReductionTree t = reduce(lines_form(lines, lam), 120);
    CHECK(t.complete);
    for (const auto& rep : cs_sum_audit(t)) CHECK(rep.matches);
  }
}

TEST_CASE("singular points off the field abort with the factor") {
  try {
    reduce(F({"x", "2*y"}));
    FAIL("expected NonRationalSingularPoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonRationalSingularPoint);
  }
}

TEST_CASE("DOT export names every node") {
  ReductionTree t = reduce(F({"-3*x^2", "2*y"}));
  std::string dot = to_dot(t);
  CHECK(dot.rfind("digraph", 0) == 0);
  for (const auto& n : t.nodes) CHECK(dot.find(n.path) != std::string::npos);
}
