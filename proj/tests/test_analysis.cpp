#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "isoperiod/analysis.hpp"
#include "isoperiod/errors.hpp"

using namespace isoperiod;

namespace {

Json base_config() {
  return Json::parse(R"({
    "system": {"topology": "vertical",
               "v_minus": {"coeffs": {"2": "1"}},
               "v_plus": {"coeffs": {"2": "1"}}},
    "order": 12,
    "energies": {"min": 1e-4, "max": 0.5, "count": 5, "scale": "log"}
  })");
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::string& args) {
  auto out = std::filesystem::temp_directory_path() / "cli_out.txt";
  auto err = std::filesystem::temp_directory_path() / "cli_err.txt";
  std::string cmd = std::string(ISOPERIOD_CLI_PATH) + " " + args + " > " +
                    out.string() + " 2> " + err.string();
  int rc = std::system(cmd.c_str());
  auto slurp = [](const std::filesystem::path& p) {
    std::ostringstream ss;
    ss << std::ifstream(p).rdbuf();
    return ss.str();
  };
  return CliResult{WEXITSTATUS(rc), slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("config validation names the offending field") {
  Json j = base_config();
  j.erase("system");
  CHECK_THROWS_WITH_AS(parse_config(j), doctest::Contains("system"), ConfigError);

  j = base_config();
  j["system"].erase("v_plus");
  CHECK_THROWS_WITH_AS(parse_config(j), doctest::Contains("v_plus"), ConfigError);

  j = base_config();
  j["energies"]["count"] = 1;
  CHECK_THROWS_WITH_AS(parse_config(j), doctest::Contains("count"), ConfigError);

  j = base_config();
  j["energies"]["min"] = -1.0;
  CHECK_THROWS_AS(parse_config(j), ConfigError);

  j = base_config();
  j["energies"]["scale"] = "cubic";
  CHECK_THROWS_AS(parse_config(j), ConfigError);

  j = base_config();
  j["tolerances"] = Json{{"ode_rel", 0.0}};
  CHECK_THROWS_WITH_AS(parse_config(j), doctest::Contains("ode_rel"), ConfigError);

  CHECK_NOTHROW(parse_config(base_config()));
}

TEST_CASE("system JSON round trip") {
  PiecewiseSystem sys{Topology::HorizontalMixed,
                      Potential({{1, rat(-3, 2)}, {3, rat(1, 7)}}),
                      Potential({{2, rat(5, 3)}})};
  sys.h_max = rat(1, 4);
  PiecewiseSystem back = system_from_json(system_to_json(sys));
  CHECK(back.topology == sys.topology);
  CHECK(back.v_minus.coeffs() == sys.v_minus.coeffs());
  CHECK(back.v_plus.coeffs() == sys.v_plus.coeffs());
  CHECK(back.h_max == sys.h_max);
}

TEST_CASE("deterministic dump format") {
  Json j{{"a", 0.1}, {"b", 2}, {"c", "text"}, {"d", Json::array({1.5, true})}};
  std::string s = dump_deterministic(j);
  CHECK(s == dump_deterministic(j));
  CHECK(s.find("0.10000000000000001") != std::string::npos);
  CHECK(s.find("\"c\": \"text\"") != std::string::npos);
}

TEST_CASE("artifacts are byte-identical across runs and carry metadata") {
  AnalysisConfig cfg = parse_config(base_config(), fnv1a64("fixed"));
  for (const char* sub : {"classify", "table", "expand", "verdict"}) {
    Artifact a = run_subcommand(cfg, sub);
    Artifact b = run_subcommand(cfg, sub);
    CHECK(a.text == b.text);
    CHECK(a.text.find("tool_version") != std::string::npos);
    CHECK(a.text.find("config_hash") != std::string::npos);
    if (a.is_json) CHECK_NOTHROW(Json::parse(a.text));
  }
  CHECK_THROWS_AS(run_subcommand(cfg, "frobnicate"), ConfigError);
}

TEST_CASE("run_simulate uses a derived start point") {
  AnalysisConfig cfg = parse_config(base_config());
  Json j = run_simulate(cfg);
  CHECK(j.at("closed").get<bool>());
  CHECK(j.at("return_time").get<double>() ==
        doctest::Approx(3.14159265358979 * std::sqrt(2.0)).epsilon(1e-8));
}

TEST_CASE("cli: classify fold-fold") {
  auto cfgp = write_temp("caseiv.json", R"({"system": {"topology": "vertical",
    "v_minus": {"coeffs": {"1": "-1"}}, "v_plus": {"coeffs": {"1": "1"}}}})");
  CliResult r = run_cli("--config " + cfgp.string() + " classify");
  CHECK(r.exit_code == 0);
  CHECK(Json::parse(r.out).at("case") == "iv");
}

TEST_CASE("cli: malformed config exits 2 and names the field") {
  auto cfgp = write_temp("missing.json", R"({"system": {"topology": "vertical",
    "v_minus": {"coeffs": {"2": "1"}}}})");
  CliResult r = run_cli("--config " + cfgp.string() + " verdict");
  CHECK(r.exit_code == 2);
  Json err = Json::parse(r.err);
  CHECK(err.at("error").at("kind") == "config");
  CHECK(err.at("error").at("message").get<std::string>().find("v_plus") !=
        std::string::npos);
}

TEST_CASE("cli: harmonic table CSV") {
  AnalysisConfig probe;  // only for the oracle below
  (void)probe;
  auto cfgp = write_temp("harmonic.json", dump_deterministic(base_config()));
  CliResult r = run_cli("--config " + cfgp.string() + " table --format csv");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("h,", 0) == 0) continue;
    std::istringstream fields(line);
    std::string h, t;
    std::getline(fields, h, ',');
    std::getline(fields, t, ',');
    CHECK(std::abs(std::stod(t) - 4.442882938158366) <= 1e-9);
    ++rows;
  }
  CHECK(rows == 5);
}

TEST_CASE("cli: analysis failure exits 3") {
  auto cfgp = write_temp("divergent.json", R"({"system": {"topology": "vertical",
    "v_minus": {"coeffs": {"4": "1"}}, "v_plus": {"coeffs": {"2": "1"}}}})");
  CliResult r = run_cli("--config " + cfgp.string() + " expand");
  CHECK(r.exit_code == 3);
  CHECK(Json::parse(r.err).at("error").at("kind") == "analysis");
}

TEST_CASE("cli: --out writes the artifact to a file") {
  auto cfgp = write_temp("harmonic2.json", dump_deterministic(base_config()));
  auto outp = std::filesystem::temp_directory_path() / "verdict_artifact.json";
  CliResult r =
      run_cli("--config " + cfgp.string() + " verdict --out " + outp.string());
  CHECK(r.exit_code == 0);
  std::ostringstream ss;
  ss << std::ifstream(outp).rdbuf();
  CHECK(Json::parse(ss.str()).at("verdict") == "isochronous_linear");
}
