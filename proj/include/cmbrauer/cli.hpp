#pragma once

// Command-line front end. Every subcommand prints one JSON envelope
//   {"command", "inputs", "result", "provenance", "conditional"}
// with sorted keys and all integers written as decimal strings.

#include <ostream>
#include <string>
#include <vector>

namespace cmbrauer::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitUnknownCommand = 64;
inline constexpr int kExitInternal = 70;

const std::vector<std::string>& subcommands();

/// Runs one invocation; args excludes the program name. The envelope (or an
/// error payload) goes to out, usage text to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmbrauer::cli
