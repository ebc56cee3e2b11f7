// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_HARNESS_MANIFEST_HPP
#define OSCL_HARNESS_MANIFEST_HPP

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace oscl::harness {

/// Everything needed to reproduce one command invocation.
struct RunManifest
{
  std::string command;
  std::vector<std::string> argv;
  /// Arguments (without --out) that reproduce the outputs exactly.
  std::vector<std::string> replayArgv;
  nlohmann::ordered_json config;
  std::uint64_t seed = 0;
  std::string version;
  std::vector<std::string> outputs;
  std::vector<std::string> warnings;
  double wallClockSeconds = 0.0;
};

nlohmann::ordered_json
toJson(const RunManifest& manifest);

/// Throws Error(InvalidArgument) on missing or mistyped fields.
RunManifest
manifestFromJson(const nlohmann::json& j);

/// Writes `dir`/manifest.json through a temporary file and a rename.
void
writeManifest(const std::filesystem::path& dir, const RunManifest& manifest);

RunManifest
readManifest(const std::filesystem::path& file);

} // namespace oscl::harness

#endif // OSCL_HARNESS_MANIFEST_HPP
