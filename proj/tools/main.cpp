#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "isoperiod/analysis.hpp"
#include "isoperiod/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitAnalysis = 3;

int fail(const char* kind, const std::string& message, int code) {
  isoperiod::Json err{{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
  return code;
}

int emit(const isoperiod::Artifact& art, const std::string& path) {
  if (path.empty()) {
    std::cout << art.text;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return fail("analysis", "cannot write output file: " + path, kExitAnalysis);
  out << art.text;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Period-function analysis of piecewise planar potential systems"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string format;
  long long order = -1;

  app.add_option("--config", config_path, "JSON analysis config")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--out", out_path, "Output file (default: stdout)");
  app.add_option("--format", format, "Override output format: json or csv");
  app.add_option("--order", order, "Override expansion order");

  for (const char* name :
       {"classify", "table", "expand", "diverge", "simulate", "verdict"})
    app.add_subcommand(name)->fallthrough();

  CLI11_PARSE(app, argc, argv);
  std::string sub = app.get_subcommands().front()->get_name();

  try {
    isoperiod::AnalysisConfig cfg = isoperiod::load_config(config_path);
    if (order >= 0) {
      if (order < 1 || order > 64)
        return fail("config", "order must be in [1, 64]", kExitConfig);
      cfg.order = std::size_t(order);
    }
    if (!format.empty()) {
      if (format != "json" && format != "csv")
        return fail("config", "format must be json or csv", kExitConfig);
      cfg.output_format = format;
    }
    if (!out_path.empty()) cfg.output_path = out_path;

    isoperiod::Artifact art = isoperiod::run_subcommand(cfg, sub);
    return emit(art, cfg.output_path);
  } catch (const isoperiod::ConfigError& e) {
    return fail("config", e.what(), kExitConfig);
  } catch (const isoperiod::Error& e) {
    return fail("analysis", e.what(), kExitAnalysis);
  } catch (const std::exception& e) {
    return fail("analysis", e.what(), kExitAnalysis);
  }
}
