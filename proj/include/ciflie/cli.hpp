#pragma once

#include <ostream>
#include <span>
#include <string>

namespace ciflie {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitLoad = 2, kExitProperty = 3 };

struct CliOptions {
  bool color = false;  // ANSI colors in text reports
};

/// The ciflie command line. `args` excludes the program name.
///
///   validate FILE
///   check {subspace|ideal|graded|homogeneous|direct-sum|anti-hom} FILE --name N [--with M]
///   compute {sum|scalar|bracket|image|preimage|intersection} FILE --left A [--right B]
///           [--alpha K] [--map PHI] [--oracle] [--format text|json] [--out PATH]
///   verify THEOREM_ID FILE [--trials N] [--seed S] [--space NAME] [--chain-length L] [--format text|json]
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err, const CliOptions& opts = {});

}  // namespace ciflie
