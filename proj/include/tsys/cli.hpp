#pragma once

// Command-line frontend over the JSON formats. Output is byte-stable for a fixed
// seed: object keys are sorted and rationals print as "p" or "p/q".

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace tsys::cli {

// Exit codes: 0 success, 2 precondition violation (error object on stdout),
// 1 internal failure (message on stderr).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Full subcommand names, e.g. "det" or "cong closure".
std::vector<std::string> subcommands();
// Library operations reached from each subcommand.
const std::map<std::string, std::vector<std::string>>& coverage();

}  // namespace tsys::cli
