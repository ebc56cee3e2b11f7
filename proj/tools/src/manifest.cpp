// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "oscl/harness/manifest.hpp"

#include "oscl/error.hpp"

#include <fstream>

namespace oscl::harness {

nlohmann::ordered_json
toJson(const RunManifest& m)
{
  nlohmann::ordered_json j;
  j["command"] = m.command;
  j["argv"] = m.argv;
  j["replay_argv"] = m.replayArgv;
  j["config"] = m.config;
  j["seed"] = m.seed;
  j["version"] = m.version;
  j["outputs"] = m.outputs;
  j["warnings"] = m.warnings;
  j["wall_clock_seconds"] = m.wallClockSeconds;
  return j;
}

RunManifest
manifestFromJson(const nlohmann::json& j)
{
  RunManifest m;
  try {
    m.command = j.at("command").get<std::string>();
    m.argv = j.at("argv").get<std::vector<std::string>>();
    m.replayArgv = j.at("replay_argv").get<std::vector<std::string>>();
    m.config = j.at("config");
    m.seed = j.at("seed").get<std::uint64_t>();
    m.version = j.at("version").get<std::string>();
    m.outputs = j.at("outputs").get<std::vector<std::string>>();
    m.warnings = j.value("warnings", std::vector<std::string>{});
    m.wallClockSeconds = j.at("wall_clock_seconds").get<double>();
  }
  catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed manifest: ") + e.what());
  }
  return m;
}

void
writeManifest(const std::filesystem::path& dir, const RunManifest& manifest)
{
  const auto target = dir / "manifest.json";
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) {
      throw std::runtime_error("cannot write " + tmp.string());
    }
    os << toJson(manifest).dump(2) << '\n';
    if (!os.flush()) {
      throw std::runtime_error("cannot write " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, target);
}

RunManifest
readManifest(const std::filesystem::path& file)
{
  std::ifstream is(file);
  if (!is) {
    throw Error(Errc::InvalidArgument, "cannot open manifest " + file.string());
  }
  nlohmann::json j;
  try {
    is >> j;
  }
  catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidArgument, "manifest " + file.string() + " is not JSON: " + e.what());
  }
  return manifestFromJson(j);
}

} // namespace oscl::harness
