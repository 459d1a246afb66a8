// spindeph: command-line front end for the dephasing library.
//
//   spindeph constants
//   spindeph channel    --config FILE | --channel KIND [--convention C] [--format json|csv]
//   spindeph sweep      --config FILE | --channel KIND --param NAME --grid min:max:n:lin|log
//   spindeph montecarlo [--regime static|markovian] [--seed N] [--out FILE]
//   spindeph errors     --sigma S [--n N] [--seed N]
//   spindeph audit      [--format text|json]
//
// Exit codes: 0 success, 2 usage or config error, 3 Monte Carlo plan rejected.

#include "CLI11.hpp"

#include "spindeph/audit.hpp"
#include "spindeph/config.hpp"
#include "spindeph/report.hpp"
#include "spindeph/stochastic_sim.hpp"
#include "spindeph/sweep.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace spindeph;

constexpr int kUsageError = 2;
constexpr int kPlanRejected = 3;
constexpr std::uint64_t kDefaultSeed = 20240601;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes `text` to `path`, or stdout when path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
  if (!out) throw UsageError("write to '" + path + "' failed");
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw UsageError("SEED must be an unsigned integer");
    return v;
  }
  return kDefaultSeed;
}

Convention resolve_convention(const std::string& name) {
  const auto c = parse_convention(name);
  if (!c) throw UsageError("unknown convention '" + name + "'");
  return *c;
}

// Channels from --config, or a single default channel from --channel. With
// both, --channel picks the matching section of the config.
std::vector<Channel> resolve_channels(const std::string& config, const std::string& kind) {
  if (config.empty()) {
    if (kind.empty()) throw UsageError("need --config or --channel");
    return {default_channel(kind)};
  }
  auto channels = load_channel_config(config);
  if (kind.empty()) return channels;
  std::vector<Channel> picked;
  for (const auto& ch : channels)
    if (channel_kind(ch) == kind) picked.push_back(ch);
  if (picked.empty()) throw UsageError("config has no [" + kind + "] section");
  return picked;
}

ExecutionPolicy policy_for(int threads, bool serial) {
  return serial ? ExecutionPolicy::serial() : ExecutionPolicy::openmp(threads);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adiabatic dephasing of donor nuclear-spin qubits in silicon"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format;
  std::string config_path;
  std::string kind;
  std::string convention_name = "static";
  std::string grid_text;
  int threads = 0;
  bool serial = false;

  auto* constants = app.add_subcommand("constants", "Dump constants and material presets as JSON");
  constants->add_option("--out", out_path, "Output file (default stdout)");

  auto* channel = app.add_subcommand("channel", "Report variance, tau_c and T_d for channels");
  channel->add_option("--config", config_path, "Channel parameter file");
  channel->add_option("--channel", kind, "Channel kind")->check(CLI::IsMember({"hyperfine", "phonon", "paramagnetic", "nuclear"}));
  channel->add_option("--convention", convention_name, "static | markovian | unit-gamma");
  channel->add_option("--format", format, "json (report) or csv (Gamma(t) profile)")->check(CLI::IsMember({"json", "csv"}));
  channel->add_option("--grid", grid_text, "Profile times min:max:count:lin|log");
  channel->add_option("--out", out_path, "Output file (default stdout)");

  std::string param;
  auto* sweep = app.add_subcommand("sweep", "Sweep one channel parameter over a grid");
  sweep->add_option("--config", config_path, "Channel parameter file");
  sweep->add_option("--channel", kind, "Channel kind")->check(CLI::IsMember({"hyperfine", "phonon", "paramagnetic", "nuclear"}));
  sweep->add_option("--param", param, "Parameter to sweep")->required();
  sweep->add_option("--grid", grid_text, "min:max:count:lin|log")->required();
  sweep->add_option("--convention", convention_name, "static | markovian | unit-gamma");
  sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--out", out_path, "Output file (default stdout)");
  sweep->add_option("--threads", threads, "OpenMP threads (0 = default)");
  sweep->add_flag("--serial", serial, "Use the serial reference path");

  std::string regime = "static";
  std::optional<std::uint64_t> seed;
  std::optional<double> variance, tau_c, t_max, mismatch;
  std::optional<std::size_t> steps, trajectories, points;
  std::string summary_path;
  auto* mc = app.add_subcommand("montecarlo", "Ornstein-Uhlenbeck Monte Carlo against exp(-Gamma)");
  mc->add_option("--regime", regime, "Preset plan: static | markovian")->check(CLI::IsMember({"static", "markovian"}));
  mc->add_option("--variance", variance, "Frequency variance (rad^2/s^2)");
  mc->add_option("--tau-c", tau_c, "Correlation time (s)");
  mc->add_option("--t-max", t_max, "Simulated time (s)");
  mc->add_option("--steps", steps, "Time steps");
  mc->add_option("--trajectories", trajectories, "Number of trajectories");
  mc->add_option("--points", points, "Output grid points");
  mc->add_option("--seed", seed, "Master seed (overrides SEED)");
  mc->add_option("--tau-c-mismatch", mismatch, "Compare against an analytic tau_c scaled by this factor");
  mc->add_option("--threads", threads, "OpenMP threads (0 = default)");
  mc->add_flag("--serial", serial, "Use the serial reference path");
  mc->add_option("--out", out_path, "CSV output file (default stdout)");
  mc->add_option("--summary", summary_path, "Summary JSON file (default: stdout, or stderr when CSV goes to stdout)");

  double sigma = 0.05;
  std::size_t copies = 10000;
  auto* errors = app.add_subcommand("errors", "Ensemble-averaged state under random one-qubit errors");
  errors->add_option("--sigma", sigma, "Standard deviation of each error component");
  errors->add_option("--n", copies, "Register copies");
  errors->add_option("--seed", seed, "Master seed (overrides SEED)");
  errors->add_option("--threads", threads, "OpenMP threads (0 = default)");
  errors->add_flag("--serial", serial, "Use the serial reference path");
  errors->add_option("--out", out_path, "Output file (default stdout)");

  auto* audit = app.add_subcommand("audit", "Recompute the published estimates and compare");
  audit->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  audit->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (constants->parsed()) {
      emit(out_path, to_json(Registry{}).dump(2) + "\n");
    } else if (channel->parsed()) {
      const Convention conv = resolve_convention(convention_name);
      const auto channels = resolve_channels(config_path, kind);
      if (format == "csv") {
        if (channels.size() != 1) throw UsageError("csv profile needs exactly one channel");
        const auto corr = channel_to_correlation(channels.front());
        if (!corr) throw UsageError("the phonon channel has no Gamma(t) profile; use --format json");
        const Grid grid = Grid::parse(grid_text.empty() ? "1e-4:10:50:log" : grid_text);
        std::ostringstream os;
        write_csv(os, make_profile(*corr, grid.points()));
        emit(out_path, os.str());
      } else {
        nlohmann::json reports = nlohmann::json::array();
        for (const auto& ch : channels) reports.push_back(channel_report(ch, conv));
        emit(out_path, (reports.size() == 1 ? reports.front() : reports).dump(2) + "\n");
      }
    } else if (sweep->parsed()) {
      const auto channels = resolve_channels(config_path, kind);
      if (channels.size() != 1) throw UsageError("sweep needs exactly one channel; pick one with --channel");
      SweepSpec spec{channels.front(), param, Grid::parse(grid_text), resolve_convention(convention_name)};
      const SweepTable table = run_sweep(spec, policy_for(threads, serial));
      if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& row : table.rows) {
          nlohmann::json r;
          for (std::size_t c = 0; c < row.size(); ++c) r[table.header[c]] = row[c];
          j.push_back(r);
        }
        emit(out_path, j.dump(2) + "\n");
      } else {
        std::ostringstream os;
        write_csv(os, table);
        emit(out_path, os.str());
      }
    } else if (mc->parsed()) {
      const std::uint64_t s = resolve_seed(seed);
      SimulationPlan plan = regime == "markovian" ? markovian_regime_plan(s) : static_regime_plan(s);
      if (t_max) plan.t_max = *t_max;
      if (variance) plan.correlation.variance = *variance;
      if (tau_c) plan.correlation.tau_c = *tau_c;
      if (steps) plan.n_steps = *steps;
      if (trajectories) plan.n_trajectories = *trajectories;
      if (points) plan.n_output = *points;

      const EnsembleCoherence result = ensemble_coherence(plan, policy_for(threads, serial));
      ExponentialCorrelation reference = plan.correlation;
      if (mismatch) reference.tau_c *= *mismatch;
      const AnalyticComparison cmp = compare_to_analytic(result, reference);

      std::ostringstream os;
      write_csv(os, result, cmp);
      emit(out_path, os.str());
      const std::string summary = montecarlo_summary(plan, cmp, result).dump(2) + "\n";
      if (!summary_path.empty()) {
        emit(summary_path, summary);
      } else if (out_path.empty()) {
        std::cerr << summary;
      } else {
        std::cout << summary;
      }
    } else if (errors->parsed()) {
      const ErrorSampler sampler{sigma, sigma, sigma, resolve_seed(seed)};
      emit(out_path, to_json(ensemble_average_state(sampler, copies, policy_for(threads, serial))).dump(2) + "\n");
    } else if (audit->parsed()) {
      const auto entries = run_audit();
      if (format == "json") {
        emit(out_path, to_json(entries).dump(2) + "\n");
      } else {
        std::ostringstream os;
        write_text(os, entries);
        emit(out_path, os.str());
      }
    }
  } catch (const PlanRejected& e) {
    std::cerr << "plan rejected: " << e.what() << " (use --steps " << e.required_steps() << ")\n";
    return kPlanRejected;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return kUsageError;
  }
  return 0;
}
