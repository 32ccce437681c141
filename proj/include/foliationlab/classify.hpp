#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "foliationlab/blowup.hpp"

namespace fl {

enum class SaddleNodalClass { ComplexSaddle, RealSaddle, Nodal };
const char* to_string(SaddleNodalClass c);
SaddleNodalClass classify_saddle_nodal(std::span<const FieldElement> lambda);

enum class PointType {
  NonSingularNormalCrossings,
  PreSimpleCHCorner,
  SimpleCHCorner,
  SimpleCHTrace,
  /// Non-resonant with fewer than tau - 1 invariant divisor components through the point.
  SimpleCHPoint,
  SeidenbergSimpleResonant,
  SaddleNode,
  NotPreSimple,
};
const char* to_string(PointType t);
bool is_simple(PointType t);
/// Pre-simple corners include the simple ones.
bool is_presimple_corner(PointType t);

/// Divisor components through the point, as chart variable indices.
struct LocalDivisor {
  std::vector<int> invariant;
  std::vector<int> dicritical;
};

struct PointClassification {
  PointType type = PointType::NotPreSimple;
  std::vector<FieldElement> residues;  // lambda_1..lambda_tau
  std::vector<int> residue_vars;       // chart variable of each residue, -1 when not a coordinate
  std::optional<SaddleNodalClass> saddle_nodal;
  std::optional<std::pair<FieldElement, FieldElement>> eigenvalues;  // 2D linear part
  bool resonant = false;
  std::vector<Integer> resonance_witness;
  int dimensional_type = 0;
  bool dimensional_type_exact = false;
  std::vector<int> eliminated;            // transverse variables removed by flow boxes
  bool dicritical_eliminated = false;     // a dicritical divisor variable was treated as transverse
  LocalDivisor divisor;
};

/// Classifies the germ at the chart origin; omega must be saturated.
PointClassification classify_point(const OneForm& omega, const LocalDivisor& divisor, int truncation = 12);

/// Straightens omega along x_j with the tangent field xi = p_s d/dx_j - p_j d/dx_s.
///
/// The pivot s != j is the first variable whose plain coefficient is a unit.
/// The result is the pulled-back form truncated at total degree N; its dx_j
/// coefficient vanishes to that order.
OneForm flow_box_eliminate(const OneForm& omega, int j, int truncation);

/// Minimal order at the origin of the plain saturated coefficients.
int multiplicity(const OneForm& omega);
int multiplicity(const OneForm& omega, const std::vector<FieldElement>& point);

struct MonomialProbe {
  FieldElement alpha;
  FieldElement beta;
  bool saddle_node_witness = false;
};
MonomialProbe monomial_probe(std::span<const FieldElement> lambda, std::span<const int> a, std::span<const int> b);

enum class Branch { U, V };  // {u = 0} or {v = 0}
/// Index of the branch for residues (alpha_u, alpha_v): -alpha_u / alpha_v along {v = 0}.
FieldElement camacho_sad_index(const FieldElement& alpha_u, const FieldElement& alpha_v, Branch branch);

/// Order in y of a(0, y) at y = t for eta = a dx + b dy with {x = 0} invariant.
int restricted_multiplicity(const OneForm& eta, const FieldElement& t = FieldElement());

struct LinePoint {
  std::vector<FieldElement> coords;  // homogeneous coordinates (X : Y : Z)
  int mu = 0;
};

struct DegreeIdentityReport {
  bool invariant = false;  // false means NoInvariantLine for the given line
  int degree = 0;
  int lhs = 0;  // d + 1
  int rhs = 0;  // sum of restricted multiplicities
  std::vector<LinePoint> points;
  bool holds = false;
};

/// Compares d + 1 with the restricted multiplicities along the line l0 X + l1 Y + l2 Z = 0.
/// Singular points are sought in Q(i, sqrt field_d); 0 takes the field of the inputs.
DegreeIdentityReport degree_identity_check(const PlaneFoliation& w, const std::array<FieldElement, 3>& line,
                                           long field_d = 0);

}  // namespace fl
