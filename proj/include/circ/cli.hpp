#pragma once

#include <string>
#include <vector>

namespace circ {

/// Command-line front-end over the library. Exit codes: 0 success,
/// 1 verification failure, 2 usage or format error, 3 numerical-contract
/// violation (an internal cross-check disagreed).
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);  // without the program name

}  // namespace circ
