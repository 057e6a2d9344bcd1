#pragma once
#include <iostream>
#include <string>
#include <vector>

namespace dpsq {

// Full command-line driver, separated from main() so tests can run
// subcommands in-process.  `in` backs the "-" input path.
// Exit codes: 0 success / property true; 1 property false (witness printed);
// 2 input error; 3 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, std::istream* in = nullptr);

} // namespace dpsq
