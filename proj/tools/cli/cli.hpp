#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "idealmv/ideal.hpp"

namespace idealmv::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Replaceable internals, so tests can drive failure paths.
struct Hooks {
  /// Fast ideal operations that --oracle compares against explicit sets.
  FastIdealOp fast = fast_op;
};

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics and usage text to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

}  // namespace idealmv::cli
