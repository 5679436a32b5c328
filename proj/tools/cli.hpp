#pragma once

#include <string>
#include <vector>

namespace galmine {

// Runs one CLI invocation (args without the program name).
// Exit codes: 0 success, 1 input/config/usage error, 2 resource-guard abort.
int run_cli(const std::vector<std::string>& args);

}  // namespace galmine
