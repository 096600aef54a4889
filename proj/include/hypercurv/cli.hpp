#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypercurv {

// Runs the `hypercurv` command line (arguments without the program name).
// Returns 0 on success, 1 on a domain error (one line on `err`), 2 on a
// usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypercurv
