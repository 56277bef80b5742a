#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treescope {

/// Entry point of the `treescope` binary. Exit codes: 0 success, 1 domain
/// error (bad input, invalid decomposition, failed check), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace treescope
