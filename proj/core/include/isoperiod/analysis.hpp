#ifndef ISOPERIOD_ANALYSIS_HPP
#define ISOPERIOD_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isoperiod/json_io.hpp"
#include "isoperiod/quadrature.hpp"
#include "isoperiod/simulate.hpp"
#include "isoperiod/verdict.hpp"

namespace isoperiod {

inline constexpr const char* kToolVersion = "0.1.0";

struct EnergiesSpec {
  double min = 1e-4;
  double max = 0.5;
  std::size_t count = 20;
  bool log_scale = true;
};

struct AnalysisConfig {
  PiecewiseSystem system{Topology::VerticalSwitch,
                         Potential({{2, Rational(1)}}),
                         Potential({{2, Rational(1)}})};
  std::size_t order = kDefaultOrder;
  EnergiesSpec energies;
  std::vector<double> rho_grid;  // empty -> verdict default
  QuadTolerances quad_tol;
  SimOptions sim;
  std::string output_format = "json";  // "json" | "csv"
  std::string output_path;             // empty -> stdout
  std::optional<State> start;          // simulate start point
  std::uint64_t config_hash = 0;       // FNV-1a 64 of the config bytes
};

// FNV-1a 64-bit over the raw bytes.
std::uint64_t fnv1a64(const std::string& bytes);

// Validates and extracts the config; throws ConfigError naming the offending
// field.
AnalysisConfig parse_config(const Json& j, std::uint64_t hash = 0);

// Reads, hashes, parses. Throws ConfigError on I/O or validation failure.
AnalysisConfig load_config(const std::string& path);

// JSON serialization with all floats in fixed 17-significant-digit form, so
// identical inputs give byte-identical artifacts.
std::string dump_deterministic(const Json& j, int indent = 2);

struct Artifact {
  std::string text;
  bool is_json = true;
};

Json run_classify(const AnalysisConfig& cfg);
Json run_table_json(const AnalysisConfig& cfg);
Json run_expand(const AnalysisConfig& cfg);
Json run_diverge(const AnalysisConfig& cfg);
Json run_simulate(const AnalysisConfig& cfg);
Json run_verdict(const AnalysisConfig& cfg);

// Dispatches on subcommand name (classify, table, expand, diverge, simulate,
// verdict); honors output_format for table. Throws ConfigError for an unknown
// subcommand.
Artifact run_subcommand(const AnalysisConfig& cfg, const std::string& name);

}  // namespace isoperiod

#endif
