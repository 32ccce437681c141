#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "foliationlab/blowup.hpp"

namespace fl {

enum class CurveKind { STraceCurve, GenericallySimpleCorner };
enum class Provenance { FromAtlas, Ingested };

const char* to_string(CurveKind k);
const char* to_string(Provenance p);

struct GraphComponent {
  std::string id;
  bool compact = false;
  bool invariant = true;  // dicritical otherwise
};

struct GraphCurve {
  std::string id;
  bool compact = false;
  std::vector<std::string> components;
  bool generically_nodal = false;
  CurveKind kind = CurveKind::GenericallySimpleCorner;
  bool in_adapted_singular_locus = true;
};

struct GraphPoint {
  std::string id;
  std::vector<std::string> curves;
  std::vector<std::string> components;
  bool nodal = false;
  int dimensional_type = 2;
};

/// One-dimensional component of the fiber over the origin.
struct FiberComponent {
  std::string id;
  bool invariant = true;
  bool trace = false;  // made of simple trace points
  std::vector<std::string> points;
};

struct DivisorGraph {
  std::vector<GraphComponent> components;
  std::vector<GraphCurve> curves;
  std::vector<GraphPoint> points;
  std::optional<std::vector<FiberComponent>> fiber;
  Provenance provenance = Provenance::Ingested;

  const GraphComponent* component(const std::string& id) const;
  const GraphCurve* curve(const std::string& id) const;
  const GraphPoint* point(const std::string& id) const;
};

struct Violation {
  std::string rule;     // "NormalCrossings", "DicriticalSingularCurve", "TraceCornerDichotomy", "NodalPlacement", "CornerRule", "UnknownReference"
  std::string subject;  // offending id or ids
  std::string message;
};

/// Checks the type invariants and the corner rule at type-3 points.
std::vector<Violation> validate(const DivisorGraph& g);

struct NodalComponent {
  std::vector<std::string> curves;
  bool compact = false;
  bool meets_dicritical = false;
};

/// Connected components of the generically nodal curves that pass the point criterion.
std::vector<NodalComponent> nodal_components(const DivisorGraph& g);

enum class TraceLocus { STr, ITr };

struct SeparatrixComponent {
  std::string id;  // "PS:1", "PS:2", ...
  TraceLocus locus = TraceLocus::STr;
  std::vector<std::string> members;  // curve ids for STr, fiber component ids for ITr
  std::vector<std::string> points;
  bool closed_immersion = false;
};

std::vector<SeparatrixComponent> separatrix_components(const DivisorGraph& g);

/// Invariant components, compact dicritical components and partial separatrices.
std::vector<std::string> regular_components(const DivisorGraph& g);

struct Connectivity {
  bool connected = false;
  std::vector<std::string> chain;  // B_0 = A, ..., B_k = B
  std::vector<std::string> via;    // non-nodal curve shared by B_{i-1} and B_i
};
Connectivity nodally_free_connected(const DivisorGraph& g, const std::string& a, const std::string& b);

struct Theorem3Verdict {
  bool holds = true;
  std::vector<NodalComponent> violations;
};
Theorem3Verdict theorem3_verdict(const DivisorGraph& g);

struct Prop6Check {
  int item = 0;
  std::string name;
  bool passed = true;
  std::string detail;
};
struct Prop6Report {
  std::vector<Prop6Check> checks;
  std::vector<std::string> certificates;  // closed partial separatrices
  bool passed() const;
};
Prop6Report prop6_checks(const DivisorGraph& g);

std::vector<Violation> trace_incompatibility_check(const DivisorGraph& g);

/// Builds the graph of the leaf charts: coordinate-axis singular curves and singular chart origins.
DivisorGraph from_atlas(const BlowupAtlas& atlas, int truncation = 12);

nlohmann::json to_json(const DivisorGraph& g);
/// Raises SchemaError on malformed input.
DivisorGraph graph_from_json(const nlohmann::json& j);

std::string to_dot(const DivisorGraph& g);

/// Local model with nodal curves {x=y=0}, {x=z=0} through a nodal corner.
DivisorGraph nodal_corner_model();

}  // namespace fl
