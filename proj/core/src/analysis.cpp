#include "isoperiod/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "isoperiod/errors.hpp"

namespace isoperiod {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::string hash_hex(std::uint64_t h) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

double positive_field(const Json& j, const char* owner, const char* name,
                      double fallback) {
  if (!j.contains(name)) return fallback;
  double v = j.at(name).get<double>();
  if (!(v > 0))
    throw ConfigError(std::string(owner) + "." + name + " must be positive");
  return v;
}

void embed_meta(Json& j, const AnalysisConfig& cfg) {
  j["tool_version"] = kToolVersion;
  j["config_hash"] = hash_hex(cfg.config_hash);
}

void dump_rec(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad(std::size_t(indent) * (depth + 1), ' ');
  const std::string close_pad(std::size_t(indent) * depth, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += Json(k).dump();
        out += ": ";
        dump_rec(v, out, indent, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        dump_rec(v, out, indent, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      // Keep the float/integer distinction in the artifact.
      if (out.find_first_of(".eE", out.size() - std::strlen(buf)) == std::string::npos)
        out += ".0";
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_deterministic(const Json& j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  out += "\n";
  return out;
}

AnalysisConfig parse_config(const Json& j, std::uint64_t hash) {
  AnalysisConfig cfg;
  cfg.config_hash = hash;
  if (!j.contains("system")) throw ConfigError("config: missing \"system\"");
  cfg.system = system_from_json(j.at("system"));

  if (j.contains("order")) {
    long long n = j.at("order").get<long long>();
    if (n < 1 || n > 64) throw ConfigError("config: order must be in [1, 64]");
    cfg.order = std::size_t(n);
  }

  if (j.contains("energies")) {
    const Json& e = j.at("energies");
    cfg.energies.min = positive_field(e, "energies", "min", cfg.energies.min);
    cfg.energies.max = positive_field(e, "energies", "max", cfg.energies.max);
    if (e.contains("count")) {
      long long c = e.at("count").get<long long>();
      if (c < 2) throw ConfigError("config: energies.count must be >= 2");
      cfg.energies.count = std::size_t(c);
    }
    if (cfg.energies.min >= cfg.energies.max)
      throw ConfigError("config: energies.min must be below energies.max");
    if (e.contains("scale")) {
      std::string s = e.at("scale").get<std::string>();
      if (s == "log")
        cfg.energies.log_scale = true;
      else if (s == "linear")
        cfg.energies.log_scale = false;
      else
        throw ConfigError("config: energies.scale must be \"log\" or \"linear\"");
    }
  }

  if (j.contains("rho_grid")) {
    for (const auto& r : j.at("rho_grid")) {
      double v = r.get<double>();
      if (!(v > 0)) throw ConfigError("config: rho_grid entries must be positive");
      cfg.rho_grid.push_back(v);
    }
  }

  if (j.contains("tolerances")) {
    const Json& t = j.at("tolerances");
    cfg.quad_tol.quadrature_abs =
        positive_field(t, "tolerances", "quadrature_abs", cfg.quad_tol.quadrature_abs);
    cfg.sim.rel_tol = positive_field(t, "tolerances", "ode_rel", cfg.sim.rel_tol);
    cfg.sim.abs_tol = positive_field(t, "tolerances", "ode_abs", cfg.sim.abs_tol);
    cfg.sim.event_tol = positive_field(t, "tolerances", "event", cfg.sim.event_tol);
  }

  if (j.contains("output")) {
    const Json& o = j.at("output");
    if (o.contains("format")) {
      cfg.output_format = o.at("format").get<std::string>();
      if (cfg.output_format != "json" && cfg.output_format != "csv")
        throw ConfigError("config: output.format must be \"json\" or \"csv\"");
    }
    if (o.contains("path")) cfg.output_path = o.at("path").get<std::string>();
  }

  if (j.contains("start")) {
    const Json& s = j.at("start");
    if (!s.is_array() || s.size() != 2)
      throw ConfigError("config: start must be a [x, y] pair");
    cfg.start = State{s[0].get<double>(), s[1].get<double>()};
  }
  return cfg;
}

AnalysisConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string bytes = buf.str();
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return parse_config(j, fnv1a64(bytes));
}

Json run_classify(const AnalysisConfig& cfg) {
  Json j = case_to_json(classify_system(cfg.system));
  embed_meta(j, cfg);
  return j;
}

namespace {

std::vector<double> config_grid(const AnalysisConfig& cfg) {
  return energy_grid(cfg.energies.min, cfg.energies.max, cfg.energies.count,
                     cfg.energies.log_scale);
}

}  // namespace

Json run_table_json(const AnalysisConfig& cfg) {
  PeriodTable t = period_table(cfg.system, config_grid(cfg), cfg.quad_tol);
  Json j = table_to_json(t);
  embed_meta(j, cfg);
  return j;
}

Json run_expand(const AnalysisConfig& cfg) {
  Json j = expansion_to_json(coupled_expansion(cfg.system, cfg.order));
  embed_meta(j, cfg);
  return j;
}

Json run_diverge(const AnalysisConfig& cfg) {
  CenterCase cc = classify_system(cfg.system);
  Potential flat = cc.flatter_side == Side::Left ? cfg.system.v_minus
                                                 : cfg.system.v_plus.mirrored();
  std::vector<double> grid = cfg.rho_grid;
  if (grid.empty()) grid = energy_grid(1e-3, 1e-1, 9, true);
  Json j = divergence_to_json(divergence_probe(flat, grid, cfg.quad_tol));
  j["case"] = cc.name();
  embed_meta(j, cfg);
  return j;
}

Json run_simulate(const AnalysisConfig& cfg) {
  State start;
  if (cfg.start) {
    start = *cfg.start;
  } else {
    // Default: the switching-line point of the energies.min level set.
    double h = cfg.energies.min;
    if (cfg.system.topology == Topology::VerticalSwitch)
      start = State{0.0, std::sqrt(2.0 * h)};
    else
      start = State{turning_point(cfg.system.v_plus, h, Side::Right, cfg.quad_tol),
                    0.0};
  }
  OrbitRun run = integrate_return(cfg.system, start, cfg.sim);
  Json j = orbit_to_json(run);
  j["start"] = {start[0], start[1]};
  embed_meta(j, cfg);
  return j;
}

Json run_verdict(const AnalysisConfig& cfg) {
  VerdictOptions opts;
  opts.rho_grid = cfg.rho_grid;
  opts.tol = cfg.quad_tol;
  Json j = verdict_to_json(verdict(cfg.system, cfg.order, opts));
  embed_meta(j, cfg);
  return j;
}

Artifact run_subcommand(const AnalysisConfig& cfg, const std::string& name) {
  if (name == "table" && cfg.output_format == "csv") {
    PeriodTable t = period_table(cfg.system, config_grid(cfg), cfg.quad_tol);
    std::string text = "# tool_version=" + std::string(kToolVersion) +
                       "\n# config_hash=" + hash_hex(cfg.config_hash) + "\n" +
                       period_table_csv(t);
    return Artifact{text, false};
  }
  Json j;
  if (name == "classify")
    j = run_classify(cfg);
  else if (name == "table")
    j = run_table_json(cfg);
  else if (name == "expand")
    j = run_expand(cfg);
  else if (name == "diverge")
    j = run_diverge(cfg);
  else if (name == "simulate")
    j = run_simulate(cfg);
  else if (name == "verdict")
    j = run_verdict(cfg);
  else
    throw ConfigError("unknown subcommand: " + name);
  return Artifact{dump_deterministic(j), true};
}

}  // namespace isoperiod
