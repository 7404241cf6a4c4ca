#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "corrsim/run.hpp"

namespace corrsim {

/// A verify run fails when the compiled product deviates from the oracle by
/// more than this.
inline constexpr double kVerifyTolerance = 1e-9;

/// Command-line driver behind the corrsim binary. Returns the process exit
/// code: 0 success, 1 parse or validation failure, 2 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// Core of the verify subcommand with an injectable compiler; the mutation
/// test drives this with a deliberately corrupted compiler.
int run_verify(const Circuit& circuit, const CompileFn& compiler,
               std::ostream& out);

}  // namespace corrsim
