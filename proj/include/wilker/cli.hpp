// Command-line front end: prove, dump, scan, limits.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wilker {

/// Exit status: 0 proven / all rows hold, 2 inconclusive / undecided,
/// 3 refuted / a row fails, 1 usage or domain error. Data goes to `out`
/// (or --out), diagnostics to `err`. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wilker
