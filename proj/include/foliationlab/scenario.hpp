#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "foliationlab/blowup.hpp"

namespace fl {

inline constexpr const char* kToolVersion = "0.1.0";

struct Scenario {
  std::string name;
  int dimension = 2;
  long field_d = 0;
  std::vector<std::string> coefficients;
  std::vector<bool> log;
  std::vector<int> divisor;
  std::vector<ScriptStep> script;
  std::vector<std::string> analyses;
  bool no_invariant_surface = false;
  nlohmann::json graph;              // ingested graph, null when absent
  nlohmann::json holonomy;           // array of parameter blocks
  nlohmann::json monomial_probes;    // array of {lambda, a, b}
  int expected_exit = 0;
  nlohmann::json source;             // the parsed document

  bool wants(const std::string& analysis) const;
};

/// Parses scenario text; syntax errors carry line and column.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::filesystem::path& path);

std::uint64_t fnv1a64(const std::string& bytes);

struct RunOptions {
  int truncation = 12;
  int max_depth = 12;
  bool dot = false;
  bool csv = false;
  std::string only;  // restricts to one analysis family when non-empty
};

struct RunResult {
  nlohmann::json report;
  int exit_code = 0;                              // 0 ok, 2 violations, 1 errors
  std::map<std::string, std::string> artifacts;  // file suffix -> contents
};

/// Runs the requested analyses in a fixed order.
RunResult run_scenario(const Scenario& s, const RunOptions& opts = {});

/// Canonical text of a report: two-space indented JSON with a trailing newline.
std::string report_text(const nlohmann::json& report);

struct CorpusEntry {
  std::string name;
  int exit_code = 0;
  int expected_exit = 0;
  bool golden_present = false;
  bool golden_match = false;
  bool ok() const { return exit_code == expected_exit && (!golden_present || golden_match); }
};

std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir);

/// Runs every scenario whose name or analyses match `filter` (empty matches all) and
/// compares reports to `dir/golden/<name>.json`; `update_golden` rewrites them instead.
std::vector<CorpusEntry> corpus_run(const std::filesystem::path& dir, const std::string& filter,
                                    const RunOptions& opts = {}, bool update_golden = false);

}  // namespace fl
