// Copyright 2026 The oscl-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCL_HARNESS_CLI_HPP
#define OSCL_HARNESS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace oscl::harness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable that overrides `sweep --time-budget`.
inline constexpr const char* kBudgetEnv = "OSCL_SIM_BUDGET_SECS";

/**
 * Runs one command line (without the program name):
 *   topology | sweep | scenario {usecase1|usecase2|custom} | replay <manifest>
 * Returns 2 on flag or validation errors, 1 on runtime failures, 0 otherwise.
 */
int
runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string
versionString();

} // namespace oscl::harness

#endif // OSCL_HARNESS_CLI_HPP
