#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace annular {

// Full command-line surface. args excludes the program name. Returns the
// process exit code: 0 success, 1 usage/parse/arity/cap errors, and for
// `verify` the ledger status code (0 all hold, 2 only documented failures,
// 1 anything unexplained or a fuzz counterexample).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace annular
