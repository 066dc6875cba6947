#pragma once

#include <string>
#include <vector>

namespace caylab {

// Exit codes: 0 success / all checks agree, 1 an audit found a violation,
// 2 invalid input.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

}  // namespace caylab
