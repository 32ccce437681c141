#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "foliationlab/errors.hpp"
#include "foliationlab/scenario.hpp"

namespace {

namespace fs = std::filesystem;

struct Flags {
  std::string scenario;
  std::string out;
  bool dot = false;
  bool csv = false;
  int truncation = 12;
  int max_depth = 12;
};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw fl::Error(fl::ErrorCode::ParseError, "cannot write " + path.string());
  f << text;
}

int run_one(const Flags& flags, const std::string& only) {
  fl::Scenario s = fl::load_scenario(flags.scenario);
  fl::RunOptions opts{flags.truncation, flags.max_depth, flags.dot, flags.csv, only};
  fl::RunResult r = fl::run_scenario(s, opts);
  const std::string text = fl::report_text(r.report);
  if (flags.out.empty()) {
    std::cout << text;
    for (const auto& [suffix, content] : r.artifacts) {
      if (suffix.ends_with(".dot") || suffix.ends_with(".csv")) write_file(s.name + "." + suffix, content);
    }
  } else {
    fs::create_directories(flags.out);
    write_file(fs::path(flags.out) / (s.name + ".report.json"), text);
    for (const auto& [suffix, content] : r.artifacts) write_file(fs::path(flags.out) / (s.name + "." + suffix), content);
  }
  for (const auto& e : r.report["errors"]) {
    std::cerr << "error: " << e["analysis"].get<std::string>() << ": " << e["code"].get<std::string>() << ": "
              << e["detail"].get<std::string>() << "\n";
  }
  return r.exit_code;
}

void add_run_flags(CLI::App* cmd, Flags& flags) {
  cmd->add_option("scenario", flags.scenario, "Scenario JSON file")->required();
  cmd->add_option("--out", flags.out, "Directory for the report and artifacts");
  cmd->add_flag("--dot", flags.dot, "Emit DOT artifacts");
  cmd->add_flag("--csv", flags.csv, "Emit CSV artifacts");
  cmd->add_option("--truncation", flags.truncation, "Jet truncation order")->check(CLI::PositiveNumber);
  cmd->add_option("--max-depth", flags.max_depth, "Maximum reduction depth")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric experiments on codimension one foliations"};
  app.set_version_flag("--version", fl::kToolVersion);
  app.require_subcommand(1);

  Flags flags;
  std::string only;
  auto* analyze = app.add_subcommand("analyze", "Run every analysis the scenario requests");
  add_run_flags(analyze, flags);
  for (const char* name : {"reduce2d", "graph", "holonomy"}) {
    auto* cmd = app.add_subcommand(name, std::string("Run only the ") + name + " analysis");
    add_run_flags(cmd, flags);
    cmd->callback([&only, name] { only = name; });
  }

  auto* corpus = app.add_subcommand("corpus", "Bundled scenario corpus");
  corpus->require_subcommand(1);
  auto* corpus_run = corpus->add_subcommand("run", "Run the corpus and compare with golden reports");
  std::string filter;
  std::string corpus_dir = FOLIATIONLAB_CORPUS_DIR;
  bool update_golden = false;
  corpus_run->add_option("--filter", filter, "Scenario name substring or analysis name");
  corpus_run->add_option("--corpus", corpus_dir, "Corpus directory");
  corpus_run->add_flag("--update-golden", update_golden, "Rewrite the golden reports");
  corpus_run->add_option("--truncation", flags.truncation, "Jet truncation order")->check(CLI::PositiveNumber);
  corpus_run->add_option("--max-depth", flags.max_depth, "Maximum reduction depth")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (corpus_run->parsed()) {
      fl::RunOptions opts;
      opts.truncation = flags.truncation;
      opts.max_depth = flags.max_depth;
      auto entries = fl::corpus_run(corpus_dir, filter, opts, update_golden);
      bool ok = true;
      for (const auto& e : entries) {
        std::string golden = !e.golden_present ? "missing" : (e.golden_match ? "match" : "DIFF");
        std::cout << (e.ok() ? "ok   " : "FAIL ") << e.name << "  exit=" << e.exit_code
                  << " expected=" << e.expected_exit << " golden=" << golden << "\n";
        ok = ok && e.ok();
      }
      std::cout << entries.size() << " scenarios\n";
      return ok ? 0 : 1;
    }
    return run_one(flags, only);
  } catch (const fl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
