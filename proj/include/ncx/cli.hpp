#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncx::cli {

// Dispatches one invocation.  `args` excludes the program name.  Returns 0 on
// success, 1 on structured domain errors (name printed on `err`), 2 on usage
// errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ncx::cli
