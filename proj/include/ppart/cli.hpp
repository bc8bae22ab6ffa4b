#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ppart {

// Runs one CLI invocation; `args` excludes the program name. Results go to
// `out`, diagnostics to `err`. Returns 0 when the computation ran (whatever
// the mathematical verdict), 2 on a usage error, 3 when a verifier rejects
// an object the tool itself constructed.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ppart
