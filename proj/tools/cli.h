/**
 * @file cli.h
 * Command-line entry point, separated from main() so tests can drive it
 * with captured streams.
 */
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace melscore {

/// Runs the command line given argv-style arguments (excluding the program
/// name). Returns the process exit code: 0 on success, 1 on validation,
/// parse, or usage errors, 2 when --strict is set and an experiment claim
/// diverges.
int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace melscore
