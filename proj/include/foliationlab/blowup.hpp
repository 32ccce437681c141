#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foliationlab/oneform.hpp"

namespace fl {

/// A blow-up center in the coordinates of one chart: a point, or the axis
/// where exactly two coordinates take prescribed values.
struct CenterSpec {
  enum class Kind { Point, Curve };
  Kind kind = Kind::Point;
  std::vector<std::optional<FieldElement>> coords;

  static CenterSpec origin(int n);
  static CenterSpec point(std::vector<FieldElement> c);
  /// Curve {x_a = ca, x_b = cb} in dimension 3.
  static CenterSpec curve(int a, const FieldElement& ca, int b, const FieldElement& cb);

  /// Variables fixed by the center.
  std::vector<int> center_vars() const;
  bool at_origin() const;
  std::string to_string() const;
};

/// Result of pulling a form back through one chart.
struct Transformed {
  OneForm form;  // saturated plain form
  int r = 0;     // exponent of the exceptional variable in the removed factor
};

/// Pulls back the plain form through `substitution` (old variable k becomes
/// substitution[k]) and saturates; r is measured along `exceptional_var`.
Transformed transform_form(const OneForm& omega, const std::vector<Polynomial>& substitution, int exceptional_var);

/// Minimal order of the plain coefficients along the center variables.
int order_along(const OneForm& omega, const std::vector<int>& center_vars);

/// Contraction test for a center through the origin.
///
/// Point centers use all variables; curve centers additionally require the
/// free-variable coefficient to vanish in the minimal order. The result is
/// cross-checked against the divisibility of the pulled-back form.
bool detect_dicritical(const OneForm& omega, const CenterSpec& center);

/// Translates coordinates so that `p` becomes the origin.
OneForm translate(const OneForm& omega, const std::vector<FieldElement>& p);

/// Homogeneous plane foliation carried by a dicritical exceptional plane.
struct PlaneFoliation {
  std::array<Polynomial, 3> w;  // A dX + B dY + C dZ, homogeneous, no common factor
  int degree = 0;               // d with coefficient degree d + 1
  int nu = 0;                   // multiplicity of the germ at the blown-up point
  std::string to_string() const;
};

/// Normalizes homogeneous coefficients: removes their common factor and
/// checks the Euler contraction X A + Y B + Z C = 0.
PlaneFoliation make_plane_foliation(std::array<Polynomial, 3> w);

/// Initial forms of a dicritical 3D germ at the origin.
PlaneFoliation restrict_to_exceptional(const OneForm& omega);

struct Component {
  int id = 0;
  std::string name;      // "E1", "E2", ... or "H:x" for initial divisor hyperplanes
  int created_at = 0;    // blow-up step, 0 for initial divisor components
  bool exceptional = false;
  bool compact = false;  // point centers only
  bool invariant = true;
  bool dicritical = false;
  bool curve_center = false;
  std::string center_chart;  // chart whose center produced the component
};

struct Chart {
  std::string label;   // "root" or "E<k>.<var>"
  std::string parent;  // empty for the root
  int step = 0;
  int exceptional_var = -1;
  int component = -1;  // component created by this chart's blow-up
  /// Center translation applied in the parent before blowing up.
  std::vector<FieldElement> translation;
  /// Old parent variables expressed in this chart's variables.
  std::vector<Polynomial> substitution;
  /// Identity of each hyperplane {x_i = 0}: component name, root "H:x", or empty when anonymous.
  std::vector<std::string> surfaces;
  OneForm form;  // saturated plain form
  int r = 0;
  bool blown_up = false;
};

struct ScriptStep {
  std::vector<std::string> chart_path;  // labels from the root, empty for the root chart
  CenterSpec center;
};

struct StepRecord {
  int step = 0;
  std::string chart;
  CenterSpec center;
  int component = -1;
  int order = 0;
  bool dicritical = false;
  std::vector<std::pair<std::string, int>> chart_r;  // r for every created chart
};

class BlowupAtlas {
 public:
  BlowupAtlas(const OneForm& omega, long d, const std::vector<int>& divisor_vars = {});

  /// Applies one scripted blow-up.
  void apply(const ScriptStep& step);

  int nvars() const { return n_; }
  long field_d() const { return d_; }
  const std::vector<Chart>& charts() const { return charts_; }
  const std::vector<Component>& components() const { return components_; }
  const std::vector<StepRecord>& steps() const { return steps_; }
  const Chart& chart(const std::string& label) const;
  const Component* component_by_name(const std::string& name) const;
  std::vector<const Chart*> leaves() const;

  /// Variables of a chart whose hyperplane is a divisor component.
  std::vector<int> divisor_vars(const Chart& c) const;
  /// Divisor variables of a chart whose component is invariant.
  std::vector<int> invariant_divisor_vars(const Chart& c) const;
  std::vector<int> dicritical_divisor_vars(const Chart& c) const;

 private:
  Chart& find_chart(const std::vector<std::string>& path);

  int n_;
  long d_;
  std::vector<Chart> charts_;
  std::vector<Component> components_;
  std::vector<StepRecord> steps_;
};

BlowupAtlas run_script(const OneForm& omega, const std::vector<ScriptStep>& script, long d,
                       const std::vector<int>& divisor_vars = {});

}  // namespace fl
