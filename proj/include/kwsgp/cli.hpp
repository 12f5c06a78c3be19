#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kwsgp {

// Runs one CLI invocation. args excludes the program name. Returns the
// process exit code: 0 success / all checks pass, 1 a verified statement
// failed on some member, 2 invalid input or cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace kwsgp
