#include "foliationlab/reduce2d.hpp"

#include <algorithm>
#include <sstream>

namespace fl {

std::vector<const ReductionNode*> ReductionTree::leaves() const {
  std::vector<const ReductionNode*> out;
  for (const auto& n : nodes) {
    if (n.children.empty() && n.created < 0) out.push_back(&n);
  }
  return out;
}

namespace {

bool singular_at_origin(const OneForm& w) {
  return std::all_of(w.coeff.begin(), w.coeff.end(), [](const Polynomial& c) { return c.constant_term().is_zero(); });
}

std::vector<FieldElement> univariate(const Polynomial& p, int var, int len) {
  std::vector<FieldElement> out(len);
  for (const auto& [e, c] : p.terms()) {
    if (e[var] < len) out[e[var]] += c;
  }
  return out;
}

std::string point_label(const std::vector<FieldElement>& p) {
  return "(" + p[0].to_string() + "," + p[1].to_string() + ")";
}

void require_complete(const ReductionTree& tree) {
  if (!tree.complete) throw Error(ErrorCode::IncompleteTree, "reduction stopped at the depth limit");
}

}  // namespace

bool is_reduced(const PointClassification& c) {
  if (c.type == PointType::SaddleNode) return true;
  if (c.dimensional_type == 1 && c.residues.empty()) return true;
  return !c.residues.empty() && !c.resonant && c.type != PointType::NotPreSimple;
}

std::vector<FieldRoot> singular_points_on_line(const OneForm& omega, int var, long d) {
  OneForm w = omega.plain();
  Polynomial a = w.coeff[var].restrict(var, FieldElement());
  Polynomial b = w.coeff[1 - var].restrict(var, FieldElement());
  Polynomial g = gcd(a, b);
  if (g.is_zero()) throw Error(ErrorCode::ZeroForm, "the form vanishes along the line");
  if (g.is_constant()) return {};
  auto roots = field_roots(g, 1 - var, d);
  std::sort(roots.begin(), roots.end(),
            [](const FieldRoot& x, const FieldRoot& y) { return compare(x.value, y.value) < 0; });
  return roots;
}

FieldElement cs_index_by_residue(const OneForm& omega, int var) {
  OneForm w = omega.plain();
  const int other = 1 - var;
  if (!w.coeff[other].restrict(var, FieldElement()).is_zero()) {
    throw Error(ErrorCode::LineNotInvariant, std::string(variable_name(2, var)) + " = 0 is not invariant");
  }
  Polynomial a = w.coeff[var].restrict(var, FieldElement());
  if (a.is_zero()) throw Error(ErrorCode::ZeroForm, "the form vanishes along the line");
  int m = a.order_in(other);
  if (m == 0) return FieldElement();
  Polynomial b = w.coeff[other].derivative(var).restrict(var, FieldElement());
  // a(0, y) = y^m g(y); the residue is the y^(m-1) coefficient of b / g.
  std::vector<FieldElement> g = univariate(a.shift_exponent(other, -m), other, m);
  std::vector<FieldElement> bs = univariate(b, other, m);
  std::vector<FieldElement> quot(m);
  FieldElement g0inv = g[0].inverse();
  for (int k = 0; k < m; ++k) {
    FieldElement acc = bs[k];
    for (int i = 1; i <= k; ++i) acc -= g[i] * quot[k - i];
    quot[k] = acc * g0inv;
  }
  return -quot[m - 1];
}

ReductionTree reduce(const OneForm& omega, int max_depth, bool allow_incomplete, int truncation) {
  if (omega.n != 2) throw Error(ErrorCode::DimensionError, "reduce2d needs a planar form");
  ReductionTree tree;
  tree.root = saturate(omega).form;
  const long d = tree.root.field_d();
  ReductionNode root;
  root.path = "0";
  root.chart = "root";
  root.point = {FieldElement(), FieldElement()};
  root.form = tree.root;
  tree.nodes.push_back(root);

  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    LocalDivisor div;
    for (const auto& [var, cid] : tree.nodes[i].divisor) {
      (tree.curves[cid].dicritical ? div.dicritical : div.invariant).push_back(var);
    }
    tree.nodes[i].classification = classify_point(tree.nodes[i].form, div, truncation);
    tree.depth = std::max(tree.depth, tree.nodes[i].depth);
    if (is_reduced(tree.nodes[i].classification)) {
      tree.nodes[i].terminal = true;
      continue;
    }
    if (tree.nodes[i].depth >= max_depth) {
      tree.complete = false;
      if (!allow_incomplete) {
        throw Error(ErrorCode::DepthExceeded, "point " + tree.nodes[i].path + " unresolved at depth " +
                                                  std::to_string(max_depth));
      }
      continue;
    }

    const ReductionNode node = tree.nodes[i];
    ExceptionalCurve curve;
    curve.id = static_cast<int>(tree.curves.size());
    curve.name = "E" + std::to_string(curve.id + 1);
    curve.created_at = node.depth + 1;
    curve.dicritical = detect_dicritical(node.form, CenterSpec::origin(2));
    for (const auto& [var, cid] : node.divisor) tree.curves[cid].self_intersection -= 1;
    tree.curves.push_back(curve);
    tree.nodes[i].created = curve.id;
    ++tree.blowups;

    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    auto add_child = [&](const char* chart, std::vector<FieldElement> pt, const OneForm& form,
                         std::map<int, int> divisor) {
      ReductionNode child;
      child.id = static_cast<int>(tree.nodes.size());
      child.parent = static_cast<int>(i);
      child.depth = node.depth + 1;
      child.chart = chart;
      child.path = node.path + "/" + curve.name + "." + chart + point_label(pt);
      child.form = saturate(translate(form, pt)).form;
      child.point = std::move(pt);
      child.divisor = std::move(divisor);
      tree.nodes[i].children.push_back(child.id);
      tree.nodes.push_back(std::move(child));
    };

    Transformed cx = transform_form(node.form, {x, y * x}, 0);
    for (const auto& r : singular_points_on_line(cx.form, 0, d)) {
      std::map<int, int> div{{0, curve.id}};
      if (r.value.is_zero() && node.divisor.count(1)) div[1] = node.divisor.at(1);
      add_child("x", {FieldElement(), r.value}, cx.form, div);
    }
    Transformed cy = transform_form(node.form, {x * y, y}, 1);
    if (singular_at_origin(cy.form)) {
      std::map<int, int> div{{1, curve.id}};
      if (node.divisor.count(0)) div[0] = node.divisor.at(0);
      add_child("y", {FieldElement(), FieldElement()}, cy.form, div);
    }
  }
  return tree;
}

GeneralizedCurveVerdict verdict_generalized_curve(const ReductionTree& tree) {
  require_complete(tree);
  GeneralizedCurveVerdict out;
  for (const auto* leaf : tree.leaves()) {
    if (leaf->classification.type == PointType::SaddleNode) {
      out.generalized_curve = false;
      out.saddle_nodes.push_back(leaf->path);
    }
  }
  return out;
}

std::vector<std::string> detect_nodal_separators(const ReductionTree& tree) {
  require_complete(tree);
  std::vector<std::string> out;
  for (const auto* leaf : tree.leaves()) {
    const auto& c = leaf->classification;
    if (c.residues.size() != 2) continue;
    if (classify_ratio(c.residues[0], c.residues[1]) == RatioClass::NegativeIrrational) out.push_back(leaf->path);
  }
  return out;
}

std::vector<CsComponentReport> cs_sum_audit(const ReductionTree& tree) {
  require_complete(tree);
  auto leaves = tree.leaves();
  for (const auto* leaf : leaves) {
    if (leaf->classification.type == PointType::SaddleNode) {
      throw Error(ErrorCode::SaddleNodeUnsupported, "saddle-node at " + leaf->path);
    }
  }
  std::vector<CsComponentReport> out;
  for (const auto& curve : tree.curves) {
    if (curve.dicritical) continue;
    CsComponentReport rep;
    rep.curve = curve.name;
    rep.self_intersection = curve.self_intersection;
    for (const auto* leaf : leaves) {
      for (const auto& [var, cid] : leaf->divisor) {
        if (cid != curve.id) continue;
        FieldElement idx = cs_index_by_residue(leaf->form, var);
        rep.indices.emplace_back(leaf->path, idx);
        rep.sum += idx;
      }
    }
    rep.matches = rep.sum == FieldElement(curve.self_intersection);
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<std::pair<std::string, FieldElement>> cs_indices_after_blowup(const OneForm& omega) {
  OneForm w = saturate(omega).form;
  if (w.n != 2) throw Error(ErrorCode::DimensionError, "planar form expected");
  if (detect_dicritical(w, CenterSpec::origin(2))) {
    throw Error(ErrorCode::BadParameters, "the blow-up is dicritical, the exceptional line is not invariant");
  }
  const long d = w.field_d();
  Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  std::vector<std::pair<std::string, FieldElement>> out;
  Transformed cx = transform_form(w, {x, y * x}, 0);
  for (const auto& r : singular_points_on_line(cx.form, 0, d)) {
    std::vector<FieldElement> pt{FieldElement(), r.value};
    out.emplace_back("x" + point_label(pt), cs_index_by_residue(translate(cx.form, pt), 0));
  }
  Transformed cy = transform_form(w, {x * y, y}, 1);
  if (singular_at_origin(cy.form)) out.emplace_back("y(0,0)", cs_index_by_residue(cy.form, 1));
  return out;
}

FieldElement cs_sum_after_blowup(const OneForm& omega) {
  FieldElement sum;
  for (const auto& [label, idx] : cs_indices_after_blowup(omega)) sum += idx;
  return sum;
}

std::string to_dot(const ReductionTree& tree) {
  std::ostringstream os;
  os << "digraph reduction {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& n : tree.nodes) {
    os << "  n" << n.id << " [label=\"" << n.path << "\\n" << to_string(n.classification.type);
    if (!n.classification.residues.empty()) {
      os << "\\nresidues";
      for (const auto& r : n.classification.residues) os << " " << r.to_string();
    }
    if (n.created >= 0) os << "\\nblown up: " << tree.curves[n.created].name;
    os << "\"";
    if (n.classification.type == PointType::SaddleNode) os << ", color=red";
    os << "];\n";
    if (n.parent >= 0) os << "  n" << n.parent << " -> n" << n.id << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace fl
