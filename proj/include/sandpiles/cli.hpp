#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sandpiles {

// Whole CLI as a library function so tests can drive it in-process.
// `args` excludes the program name. Exit codes: 0 success, 1 a verification
// run found failures, 2 usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace sandpiles
