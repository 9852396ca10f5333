#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pairflip::cli {

// Runs one invocation (argv without the program name). Exit status: 0 on
// success, 1 on usage/parse errors, 2 on domain errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pairflip::cli
