#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spindeph/audit.hpp"
#include "spindeph/config.hpp"
#include "spindeph/report.hpp"
#include "spindeph/stochastic_sim.hpp"
#include "spindeph/sweep.hpp"

#include "json.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace spindeph;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "spindeph_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

// Runs the CLI with `args`, optionally prefixed by environment assignments.
Result run(const std::string& args, const std::string& env = "") {
  const auto out = scratch("stdout.txt");
  const auto err = scratch("stderr.txt");
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + SPINDEPH_CLI + "' " + args + " >'" +
                          out.string() + "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string data(const std::string& name) { return std::string(SPINDEPH_TESTDATA) + "/" + name; }

}  // namespace

TEST_CASE("constants") {
  const auto r = run("constants");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(registry_from_json(j) == Registry{});
  CHECK(j["species"][0]["gamma"]["value"].get<double>() == 1.76e11);
  CHECK(j["materials"][0]["debye_temperature"]["value"].get<double>() == 625.0);
}

TEST_CASE("channel report matches the library") {
  const auto r = run("channel --config " + data("hyperfine_b20.ini"));
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto lib = channel_report(load_channel_config(data("hyperfine_b20.ini")).front());
  CHECK(j == lib);
  const double td = j["td_s"]["value"].get<double>();
  CHECK(td > 0.5e-3);
  CHECK(td < 1.5e-3);

  const auto ph = nlohmann::json::parse(run("channel --channel phonon").out);
  CHECK(ph["rate_per_s"].get<double>() < 1e-20);
  CHECK(ph["insignificant"].get<bool>());

  const auto zero = run("channel --config " + data("paramagnetic_zero.ini"));
  REQUIRE(zero.code == 0);
  const auto zj = nlohmann::json::parse(zero.out);
  CHECK(zj["td_s"]["value"].is_null());
  CHECK(zj["td_s"]["infinite"].get<bool>());

  const auto all = nlohmann::json::parse(run("channel --config " + data("all_channels.ini")).out);
  CHECK(all.size() == 4);
  const auto picked = nlohmann::json::parse(run("channel --config " + data("all_channels.ini") + " --channel nuclear").out);
  CHECK(picked["channel"] == "nuclear");
}

TEST_CASE("channel profile CSV") {
  const auto r = run("channel --config " + data("hyperfine_b20.ini") + " --format csv --grid 1e-4:1e-2:5:log");
  REQUIRE(r.code == 0);
  const auto corr = *channel_to_correlation(load_channel_config(data("hyperfine_b20.ini")).front());
  std::ostringstream expected;
  write_csv(expected, make_profile(corr, Grid::parse("1e-4:1e-2:5:log").points()));
  CHECK(r.out == expected.str());
}

TEST_CASE("sweep matches the library") {
  const auto r = run("sweep --channel hyperfine --param field_temperature_ratio --grid 10:40:7:lin --serial");
  REQUIRE(r.code == 0);
  std::ostringstream expected;
  write_csv(expected, run_sweep({default_channel("hyperfine"), "field_temperature_ratio",
                                 Grid::parse("10:40:7:lin"), Convention::Static}));
  CHECK(r.out == expected.str());
  CHECK(run("sweep --channel hyperfine --param field_temperature_ratio --grid 10:40:7:lin --threads 3").out ==
        r.out);

  const auto t = run("sweep --channel nuclear --param spin_temperature --grid 0.6e-3:1e-3:5:lin");
  REQUIRE(t.code == 0);
  std::istringstream lines(t.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line.substr(line.rfind(',') + 1) == "polarized");
  std::string markers;
  while (std::getline(lines, line)) markers += line.substr(line.rfind(',') + 1);
  CHECK(markers == "11100");
}

TEST_CASE("montecarlo") {
  const auto csv1 = scratch("mc1.csv"), csv2 = scratch("mc2.csv"), csv3 = scratch("mc3.csv");
  const auto a = run("montecarlo --regime static --seed 7 --out " + csv1.string());
  REQUIRE(a.code == 0);
  const auto summary = nlohmann::json::parse(a.out);
  CHECK(summary["max_z"].get<double>() <= 4.0);
  CHECK(slurp(csv1).rfind("t,re_mean,im_mean,std_error,analytic_envelope,z\n", 0) == 0);

  REQUIRE(run("montecarlo --regime static --seed 7 --threads 3 --out " + csv2.string()).code == 0);
  CHECK(slurp(csv1) == slurp(csv2));
  // The environment seed is used without a flag and loses to it.
  REQUIRE(run("montecarlo --regime static --serial --out " + csv3.string(), "SEED=7").code == 0);
  CHECK(slurp(csv1) == slurp(csv3));
  REQUIRE(run("montecarlo --regime static --seed 7 --out " + csv3.string(), "SEED=8").code == 0);
  CHECK(slurp(csv1) == slurp(csv3));
  REQUIRE(run("montecarlo --regime static --out " + csv3.string(), "SEED=8").code == 0);
  CHECK(slurp(csv1) != slurp(csv3));

  const auto wrong = run("montecarlo --regime markovian --trajectories 2000 --tau-c-mismatch 10 --out " +
                         csv2.string());
  REQUIRE(wrong.code == 0);
  CHECK(nlohmann::json::parse(wrong.out)["max_z"].get<double>() > 10.0);

  // CSV on stdout, summary on stderr.
  const auto piped = run("montecarlo --regime static --seed 7");
  CHECK(piped.out == slurp(csv1));
  CHECK(nlohmann::json::parse(piped.err)["seed"].get<std::uint64_t>() == 7);
}

TEST_CASE("errors subcommand") {
  const auto r = run("errors --sigma 0.05 --n 10000 --seed 3");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j == to_json(ensemble_average_state({0.05, 0.05, 0.05, 3}, 10000)));
  CHECK(j["n"].get<int>() == 10000);
  CHECK(j["diag"].size() == 2);
}

TEST_CASE("audit") {
  const auto r = run("audit --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j == to_json(run_audit()));
  bool found = false;
  for (const auto& e : j)
    if (e["claim_id"] == "nuclear-bound") found = true;
  CHECK(found);
  const auto text = run("audit");
  CHECK(text.code == 0);
  CHECK(text.out.find("typo-suspected") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("channel").code == 2);
  CHECK(run("channel --channel laser").code == 2);
  CHECK(run("channel --config " + data("typo_key.ini")).code == 2);
  CHECK(run("channel --config /nonexistent.ini").code == 2);
  CHECK(run("channel --channel hyperfine --convention gaussian").code == 2);
  CHECK(run("sweep --channel hyperfine --param field --grid 1:2:1:lin").code == 2);
  CHECK(run("sweep --channel hyperfine --param feild --grid 1:2:3:lin").code == 2);
  CHECK(run("montecarlo --seed 1", "").code == 0);
  CHECK(run("montecarlo", "SEED=abc").code == 2);
  const auto rejected = run("montecarlo --regime markovian --steps 100");
  CHECK(rejected.code == 3);
  CHECK(rejected.err.find("20000") != std::string::npos);
}
