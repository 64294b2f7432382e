#pragma once

// Command-line front end: parses one command, dispatches into the library,
// and renders reports deterministically as json, csv, or an aligned table.

#include <iosfwd>
#include <string>
#include <vector>

namespace qsd::cli {

// Runs one command. args is the argument list without the program name.
// Data goes to out, diagnostics to err. Returns the process exit code:
// 0 feasible/pass, 1 infeasible/rejected/not-SRG, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsd::cli
