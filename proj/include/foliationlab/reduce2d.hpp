#pragma once

#include <map>
#include <string>
#include <vector>

#include "foliationlab/classify.hpp"

namespace fl {

struct ExceptionalCurve {
  int id = 0;
  std::string name;  // "E1", "E2", ...
  int created_at = 0;
  int self_intersection = -1;
  bool dicritical = false;
};

struct ReductionNode {
  int id = 0;
  int parent = -1;
  int depth = 0;
  std::string path;                 // "0", "0/E1.x(0,0)", ...
  std::string chart;                // "root", "x" or "y": chart of the parent blow-up
  std::vector<FieldElement> point;  // coordinates in that chart before translation
  OneForm form;                     // saturated, centered at the point
  std::map<int, int> divisor;       // local variable -> exceptional curve id
  PointClassification classification;
  bool terminal = false;
  int created = -1;                 // curve created by blowing this node up
  std::vector<int> children;
};

struct ReductionTree {
  OneForm root;
  std::vector<ReductionNode> nodes;
  std::vector<ExceptionalCurve> curves;
  int blowups = 0;
  int depth = 0;
  bool complete = true;

  std::vector<const ReductionNode*> leaves() const;
};

/// Terminal points: nonsingular points, nonresonant points and saddle-nodes.
bool is_reduced(const PointClassification& c);

/// Blows up every non-terminal singular point until all leaves are terminal.
///
/// Raises DepthExceeded when a non-terminal point sits at max_depth, unless
/// allow_incomplete is set, in which case the tree is returned with complete = false.
ReductionTree reduce(const OneForm& omega, int max_depth = 12, bool allow_incomplete = false, int truncation = 12);

/// Singular points of a saturated planar form on the line {x_var = 0}, as values of the other coordinate.
std::vector<FieldRoot> singular_points_on_line(const OneForm& omega, int var, long d);

/// Camacho-Sad index of the invariant line {x_var = 0} at the origin, as -Res b(0,y)/a(0,y).
///
/// Writes the form as a dx_var + x_var b dy; valid at every singular point,
/// including saddle-nodes and degenerate points.
FieldElement cs_index_by_residue(const OneForm& omega, int var);

struct GeneralizedCurveVerdict {
  bool generalized_curve = true;
  std::vector<std::string> saddle_nodes;  // leaf paths
};
GeneralizedCurveVerdict verdict_generalized_curve(const ReductionTree& tree);

/// Leaves whose model parameter -alpha_u / alpha_v is a positive irrational.
std::vector<std::string> detect_nodal_separators(const ReductionTree& tree);

struct CsComponentReport {
  std::string curve;
  int self_intersection = 0;
  std::vector<std::pair<std::string, FieldElement>> indices;  // leaf path, index
  FieldElement sum;
  bool matches = false;
};
/// Per invariant exceptional curve, the sum of Camacho-Sad indices over its singular points.
std::vector<CsComponentReport> cs_sum_audit(const ReductionTree& tree);

/// Camacho-Sad indices of the exceptional line at its singular points after one point blow-up,
/// labelled by chart and point.
std::vector<std::pair<std::string, FieldElement>> cs_indices_after_blowup(const OneForm& omega);
FieldElement cs_sum_after_blowup(const OneForm& omega);

std::string to_dot(const ReductionTree& tree);

}  // namespace fl
