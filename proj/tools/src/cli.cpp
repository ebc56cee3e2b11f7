// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/harness/cli.hpp"

#include "oscl/csv.hpp"
#include "oscl/error.hpp"
#include "oscl/harness/manifest.hpp"
#include "oscl/harness/scenario.hpp"
#include "oscl/harness/sweep.hpp"
#include "oscl/harness/topology_csv.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef OSCL_SIM_VERSION
#define OSCL_SIM_VERSION "0.0.0"
#endif

namespace oscl::harness {

std::string
versionString()
{
  return OSCL_SIM_VERSION;
}

namespace {

namespace fs = std::filesystem;
using WallClock = std::chrono::steady_clock;

/// Bad flags or configuration: exit code 2.
class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Runs `f`, reporting configuration errors from the library as usage errors.
template<typename F>
auto
validating(F&& f)
{
  try {
    return f();
  }
  catch (const Error& e) {
    if (e.code() == Errc::InvalidArgument || e.code() == Errc::DomainError) {
      throw UsageError(e.what());
    }
    throw;
  }
}

std::vector<std::uint32_t>
parseList(const std::string& text, std::string_view flag)
{
  std::vector<std::uint32_t> values;
  std::string_view rest = text;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    auto item = rest.substr(0, comma);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw UsageError(std::string(flag) + ": '" + std::string(item) +
                       "' is not a non-negative integer");
    }
    values.push_back(v);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (comma != std::string_view::npos && rest.empty()) {
      throw UsageError(std::string(flag) + ": trailing comma");
    }
  }
  return values;
}

std::string
joinList(const std::vector<std::uint32_t>& values)
{
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    s += (i ? "," : "") + std::to_string(values[i]);
  }
  return s;
}

/// Output directory plus the list of files written into it.
class OutputDir
{
public:
  explicit
  OutputDir(const std::string& path)
    : m_path(path)
  {
    if (path.empty()) {
      throw UsageError("--out must name a directory");
    }
    std::error_code ec;
    fs::create_directories(m_path, ec);
    if (ec) {
      throw std::runtime_error("cannot create " + m_path.string() + ": " + ec.message());
    }
  }

  template<typename Writer>
  void
  write(const std::string& name, Writer&& writer)
  {
    std::ofstream os(m_path / name, std::ios::binary | std::ios::trunc);
    if (!os) {
      throw std::runtime_error("cannot write " + (m_path / name).string());
    }
    writer(os);
    if (!os.flush()) {
      throw std::runtime_error("cannot write " + (m_path / name).string());
    }
    m_files.push_back(name);
  }

  const fs::path&
  path() const noexcept
  {
    return m_path;
  }

  const std::vector<std::string>&
  files() const noexcept
  {
    return m_files;
  }

private:
  fs::path m_path;
  std::vector<std::string> m_files;
};

std::uint64_t
relayedAt(const scl::MessageCounters& c, NodeId node)
{
  std::uint64_t sum = 0;
  for (std::size_t t = 0; t < scl::kMsgTypeCount; ++t) {
    const auto type = static_cast<scl::MsgType>(t);
    if (scl::isCounted(type)) {
      sum += c.get(node, type, scl::Role::Relayed);
    }
  }
  return sum;
}

double
secondsSince(WallClock::time_point start)
{
  return std::chrono::duration<double>(WallClock::now() - start).count();
}

void
finishManifest(RunManifest& m, const OutputDir& dir, WallClock::time_point start)
{
  m.version = versionString();
  m.outputs = dir.files();
  m.outputs.push_back("manifest.json");
  m.wallClockSeconds = secondsSince(start);
  writeManifest(dir.path(), m);
}

// topology -------------------------------------------------------------------

struct TopologyOptions
{
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::uint64_t seed = 1;
  std::uint64_t pairs = 0;
  std::uint64_t stride = 0;
  std::uint64_t window = 0;
  std::string comparison = "at-most-D";
  std::string out;
};

int
cmdTopology(const TopologyOptions& o, const std::vector<std::string>& argv, std::ostream& out,
            std::ostream& err)
{
  const auto start = WallClock::now();
  auto config = validating([&] {
    topo::ExperimentConfig c;
    c.nodes = o.n;
    c.maxHops = o.d;
    c.pairCount = o.pairs;
    c.seed = o.seed;
    c.comparison = topo::parsePathComparison(o.comparison);
    c.sampleStride = o.stride;
    c.saturationWindow = o.window;
    return c.resolved();
  });
  OutputDir dir(o.out);

  const auto stats = topo::runTopologyExperiment(config);
  dir.write("series.csv", [&] (std::ostream& os) {
    writeSeriesHeader(os);
    writeSeriesRows(os, config.nodes, config.maxHops, config.seed, stats);
  });
  dir.write("summary.csv", [&] (std::ostream& os) {
    writeSummaryHeader(os);
    writeSummaryRow(os, config.nodes, config.maxHops, config.seed, stats);
  });

  const double predicted = topo::predictedDegree(config.nodes, config.maxHops);
  out << "N=" << config.nodes << " D=" << config.maxHops << " seed=" << config.seed
      << " pairs=" << config.pairCount << " final_degree=" << csv::number(stats.finalDegree)
      << " predicted=" << csv::number(predicted)
      << " ratio=" << csv::number(stats.finalDegree / predicted)
      << " links=" << stats.linksCreated << " saturated=" << (stats.saturated ? "yes" : "no")
      << '\n';

  RunManifest m;
  m.command = "topology";
  m.argv = argv;
  m.replayArgv = {"topology", "--n", std::to_string(config.nodes), "--d",
                  std::to_string(config.maxHops), "--seed", std::to_string(config.seed),
                  "--pairs", std::to_string(config.pairCount), "--stride",
                  std::to_string(config.sampleStride), "--window",
                  std::to_string(config.saturationWindow), "--comparison",
                  std::string(topo::toString(config.comparison))};
  m.config = {{"N", config.nodes},
              {"D", config.maxHops},
              {"pairs", config.pairCount},
              {"stride", config.sampleStride},
              {"window", config.saturationWindow},
              {"comparison", topo::toString(config.comparison)}};
  m.seed = config.seed;
  if (!stats.saturated) {
    m.warnings.push_back("not saturated: a link was created within the final " +
                         std::to_string(config.saturationWindow) + " pairs");
    err << "warning: " << m.warnings.back() << '\n';
  }
  finishManifest(m, dir, start);
  return kExitOk;
}

// sweep ----------------------------------------------------------------------

struct SweepOptions
{
  std::string n;
  std::string d;
  std::uint32_t seeds = 3;
  std::uint64_t seed = 1;
  double pairsFactor = topo::kDefaultPairsFactor;
  double budget = 300.0;
  bool noBudget = false;
  unsigned jobs = 1;
  std::string comparison = "at-most-D";
  std::string out;
};

int
cmdSweep(const SweepOptions& o, const std::vector<std::string>& argv, std::ostream& out,
         std::ostream& err)
{
  const auto start = WallClock::now();
  SweepConfig config;
  config.nodeCounts = parseList(o.n, "--n");
  config.maxHops = parseList(o.d, "--d");
  config.seeds = o.seeds;
  config.baseSeed = o.seed;
  config.pairsFactor = o.pairsFactor;
  config.jobs = o.jobs;
  config.comparison = validating([&] { return topo::parsePathComparison(o.comparison); });
  config.budgetSeconds = o.budget;
  if (const char* env = std::getenv(kBudgetEnv); env != nullptr && !o.noBudget) {
    std::string_view text = env;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
      throw UsageError(std::string(kBudgetEnv) + ": '" + env + "' is not a number");
    }
    config.budgetSeconds = v;
  }
  if (o.noBudget) {
    config.budgetSeconds = std::numeric_limits<double>::infinity();
  }
  validating([&] {
    config.validate();
    return 0;
  });
  OutputDir dir(o.out);

  const auto result = runSweep(config);
  dir.write("summary.csv", [&] (std::ostream& os) { writeSweepSummaryCsv(os, result); });
  dir.write("series.csv", [&] (std::ostream& os) { writeSweepSeriesCsv(os, result); });
  dir.write("fit.csv", [&] (std::ostream& os) { writeFitCsv(os, result); });
  dir.write("spread.csv", [&] (std::ostream& os) { writeSpreadCsv(os, result); });

  RunManifest m;
  if (!result.skippedNodeCounts.empty()) {
    m.warnings.push_back("time budget exhausted; skipped N = " + joinList(result.skippedNodeCounts));
  }
  for (const auto& fit : result.fits) {
    out << "D=" << fit.maxHops << " spread=" << csv::number(fit.spread)
        << " monotone_in_N=" << (fit.monotoneInN ? "yes" : "no")
        << " saturated=" << (fit.allSaturated() ? "yes" : "no") << '\n';
    for (const auto& row : fit.rows) {
      if (!row.saturated) {
        m.warnings.push_back("not saturated: N=" + std::to_string(row.nodes) +
                             " D=" + std::to_string(row.maxHops));
      }
    }
  }
  for (const auto& w : m.warnings) {
    err << "warning: " << w << '\n';
  }

  m.command = "sweep";
  m.argv = argv;
  const bool ranAny = !result.executedNodeCounts.empty();
  m.replayArgv = {"sweep", "--n", joinList(ranAny ? result.executedNodeCounts : config.nodeCounts),
                  "--d", joinList(config.maxHops), "--seeds", std::to_string(config.seeds),
                  "--seed", std::to_string(config.baseSeed), "--pairs-factor",
                  csv::number(config.pairsFactor), "--comparison",
                  std::string(topo::toString(config.comparison))};
  if (ranAny) {
    m.replayArgv.push_back("--no-budget");
  }
  else {
    m.replayArgv.insert(m.replayArgv.end(), {"--time-budget", "0"});
  }
  m.config = {{"N", config.nodeCounts},
              {"D", config.maxHops},
              {"seeds", config.seedList()},
              {"pairs_factor", config.pairsFactor},
              {"comparison", topo::toString(config.comparison)},
              {"time_budget_seconds", std::isfinite(config.budgetSeconds)
                                        ? nlohmann::ordered_json(config.budgetSeconds)
                                        : nlohmann::ordered_json(nullptr)},
              {"jobs", config.jobs},
              {"executed_N", result.executedNodeCounts},
              {"skipped_N", result.skippedNodeCounts}};
  m.seed = config.baseSeed;
  finishManifest(m, dir, start);
  return kExitOk;
}

// scenario -------------------------------------------------------------------

struct ScenarioOptions
{
  std::string name;
  std::string oscl = "on";
  std::uint32_t appends = 5;
  std::uint32_t d = 3;
  std::uint64_t seed = 1;
  std::uint64_t probes = 100;
  std::string topology;
  std::string out;
};

int
cmdScenario(const ScenarioOptions& o, const std::vector<std::string>& argv, std::ostream& out,
            std::ostream& err)
{
  const auto start = WallClock::now();
  ScenarioTopology topology;
  std::string topologyPath;
  if (o.name == "usecase1") {
    topology = usecase1Topology();
  }
  else if (o.name == "usecase2") {
    topology = usecase2Topology();
  }
  else {
    if (o.topology.empty()) {
      throw UsageError("scenario custom needs --topology <file>");
    }
    topologyPath = fs::absolute(o.topology).lexically_normal().string();
    topology = validating([&] { return loadTopology(topologyPath); });
  }
  if (!o.topology.empty() && o.name != "custom") {
    throw UsageError("--topology is only accepted by scenario custom");
  }

  ScenarioConfig config;
  config.oscl = o.oscl == "on";
  config.appends = o.appends;
  config.seed = o.seed;
  config.probes = o.probes;
  config.policy.maxPathHops = o.d;
  validating([&] {
    if (config.appends < 1) {
      throw Error(Errc::InvalidArgument, "appends must be >= 1 (got 0)");
    }
    if (config.probes < 1) {
      throw Error(Errc::InvalidArgument, "probes must be >= 1 (got 0)");
    }
    config.policy.validate();
    return 0;
  });
  OutputDir dir(o.out);

  auto run = validating([&] { return runScenario(topology, config); });
  const auto& sys = *run.system;
  const auto labeler = sys.labeler();
  dir.write("messages.csv", [&] (std::ostream& os) { sys.log().writeCsv(os, labeler); });
  dir.write("counters.csv", [&] (std::ostream& os) { sys.counters().writeCsv(os, labeler); });
  dir.write("ndn_trace.csv", [&] (std::ostream& os) {
    if (run.overlay) {
      run.overlay->trace().writeCsv(os);
    }
    else {
      ndn::EmissionTrace{}.writeCsv(os);
    }
  });

  using scl::MsgType;
  using scl::Role;
  const auto& c = sys.counters();
  std::string path = "-";
  if (run.discovery.path) {
    path.clear();
    for (auto id : *run.discovery.path) {
      path += (path.empty() ? "" : ">") + sys.label(id);
    }
  }
  out << "scenario=" << o.name << " oscl=" << o.oscl << " appends=" << o.appends << '\n'
      << "discovery=" << scl::toString(run.discovery.method) << " path=" << path << '\n';
  if (run.link) {
    out << "link=" << overlay::toString(*run.link)
        << " links_created=" << run.linksCreatedByPolicy << '\n';
  }
  out << "nscl_relayed_notify=" << c.get(run.nscl, MsgType::Notify, Role::Relayed) << '\n'
      << "nscl_relayed_total=" << relayedAt(c, run.nscl) << '\n'
      << "subscriber_received_data=" << c.get(run.subscriber, MsgType::Data, Role::Received)
      << '\n'
      << "subscriber_received_notify=" << c.get(run.subscriber, MsgType::Notify, Role::Received)
      << '\n'
      << "notifications_delivered=" << run.notificationsDelivered << '\n'
      << "originated=" << c.total(Role::Originated) << " received=" << c.total(Role::Received)
      << " dropped=" << c.total(Role::Dropped) << '\n';

  RunManifest m;
  m.command = "scenario";
  m.argv = argv;
  m.replayArgv = {"scenario", o.name, "--oscl", o.oscl, "--appends", std::to_string(o.appends),
                  "--d", std::to_string(o.d), "--seed", std::to_string(o.seed), "--probes",
                  std::to_string(o.probes)};
  if (!topologyPath.empty()) {
    m.replayArgv.insert(m.replayArgv.end(), {"--topology", topologyPath});
  }
  m.config = {{"scenario", o.name},
              {"oscl", o.oscl},
              {"appends", o.appends},
              {"D", o.d},
              {"probes", o.probes},
              {"topology", topologyPath.empty() ? nlohmann::ordered_json(nullptr)
                                                : nlohmann::ordered_json(topologyPath)}};
  m.seed = o.seed;
  if (run.notificationsDelivered != o.appends) {
    m.warnings.push_back("delivered " + std::to_string(run.notificationsDelivered) + " of " +
                         std::to_string(o.appends) + " notifications");
    err << "warning: " << m.warnings.back() << '\n';
  }
  finishManifest(m, dir, start);
  return kExitOk;
}

// replay ---------------------------------------------------------------------

struct ReplayOptions
{
  std::string manifest;
  std::string out;
};

int
cmdReplay(const ReplayOptions& o, std::ostream& out, std::ostream& err)
{
  auto manifest = validating([&] { return readManifest(o.manifest); });
  if (manifest.replayArgv.empty() || manifest.replayArgv.front() == "replay") {
    throw UsageError("manifest " + o.manifest + " has no replayable command");
  }
  auto target = o.out.empty() ? (fs::path(o.manifest).parent_path() / "replay").string() : o.out;
  auto args = manifest.replayArgv;
  args.insert(args.end(), {"--out", target});
  return runCli(args, out, err);
}

} // namespace

int
runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Overlay service capability layer simulator", "oscl-sim"};
  app.set_version_flag("--version", versionString());
  app.require_subcommand(1);

  TopologyOptions topoOpts;
  auto* topoCmd = app.add_subcommand("topology", "One link-formation experiment");
  topoCmd->add_option("--n", topoOpts.n, "Node count N")->required();
  topoCmd->add_option("--d", topoOpts.d, "Maximum path length D")->required();
  topoCmd->add_option("--seed", topoOpts.seed, "Random seed")->capture_default_str();
  topoCmd->add_option("--pairs", topoOpts.pairs, "Pair count (0: 50 N ln N)");
  topoCmd->add_option("--stride", topoOpts.stride, "Series sampling stride (0: N)");
  topoCmd->add_option("--window", topoOpts.window, "Saturation window (0: 10 N)");
  topoCmd->add_option("--comparison", topoOpts.comparison, "at-most-D or strictly-less-D")
    ->capture_default_str();
  topoCmd->add_option("--out", topoOpts.out, "Output directory")->required();

  SweepOptions sweepOpts;
  auto* sweepCmd = app.add_subcommand("sweep", "Degree scaling sweep over N and D");
  sweepCmd->add_option("--n", sweepOpts.n, "Comma-separated node counts")->required();
  sweepCmd->add_option("--d", sweepOpts.d, "Comma-separated path bounds")->required();
  sweepCmd->add_option("--seeds", sweepOpts.seeds, "Seeds per (N, D)")->capture_default_str();
  sweepCmd->add_option("--seed", sweepOpts.seed, "First seed")->capture_default_str();
  sweepCmd->add_option("--pairs-factor", sweepOpts.pairsFactor, "Pairs = factor N ln N")
    ->capture_default_str();
  sweepCmd->add_option("--time-budget", sweepOpts.budget,
                       std::string("Seconds; overridden by ") + kBudgetEnv)
    ->capture_default_str();
  sweepCmd->add_flag("--no-budget", sweepOpts.noBudget, "Run every N regardless of time");
  sweepCmd->add_option("--jobs", sweepOpts.jobs, "Concurrent experiments")->capture_default_str();
  sweepCmd->add_option("--comparison", sweepOpts.comparison, "at-most-D or strictly-less-D")
    ->capture_default_str();
  sweepCmd->add_option("--out", sweepOpts.out, "Output directory")->required();

  ScenarioOptions scenOpts;
  auto* scenCmd = app.add_subcommand("scenario", "Run a use case with the overlay on or off");
  scenCmd->add_option("name", scenOpts.name, "usecase1, usecase2 or custom")
    ->required()
    ->check(CLI::IsMember({"usecase1", "usecase2", "custom"}));
  scenCmd->add_option("--oscl", scenOpts.oscl, "on or off")
    ->check(CLI::IsMember({"on", "off"}))
    ->capture_default_str();
  scenCmd->add_option("--appends", scenOpts.appends, "Content instances to append")
    ->capture_default_str();
  scenCmd->add_option("--d", scenOpts.d, "Maximum acceptable path length")->capture_default_str();
  scenCmd->add_option("--seed", scenOpts.seed, "Random seed")->capture_default_str();
  scenCmd->add_option("--probes", scenOpts.probes, "Probes per path measurement")
    ->capture_default_str();
  scenCmd->add_option("--topology", scenOpts.topology, "Topology file (custom only)");
  scenCmd->add_option("--out", scenOpts.out, "Output directory")->required();

  ReplayOptions replayOpts;
  auto* replayCmd = app.add_subcommand("replay", "Re-run a command from its manifest");
  replayCmd->add_option("manifest", replayOpts.manifest, "manifest.json")->required();
  replayCmd->add_option("--out", replayOpts.out, "Output directory (default: <dir>/replay)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  }
  catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  }
  catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (topoCmd->parsed()) {
      return cmdTopology(topoOpts, args, out, err);
    }
    if (sweepCmd->parsed()) {
      return cmdSweep(sweepOpts, args, out, err);
    }
    if (scenCmd->parsed()) {
      return cmdScenario(scenOpts, args, out, err);
    }
    return cmdReplay(replayOpts, out, err);
  }
  catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

} // namespace oscl::harness
