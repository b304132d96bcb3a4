#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace centlab::cli {

/// Runs the full command line (without the program name). Exit codes:
/// 0 success, 1 violation found under --fail-on-violation, 2 usage or input
/// errors. Never throws on bad input.
int run_cli(const std::vector<std::string> &args, std::ostream &out = std::cout,
            std::ostream &err = std::cerr);

} // namespace centlab::cli
