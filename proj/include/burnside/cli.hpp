#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace burnside {

/// Command-line driver. args excludes the program name, e.g.
/// {"qn", "--p", "3", "--m", "3", "--n", "2"}.
/// Exit codes: 0 success / all checks passed, 1 verification mismatch,
/// 2 invalid arguments.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

inline int run_cli(const std::vector<std::string>& args) {
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace burnside
