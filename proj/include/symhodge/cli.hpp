#ifndef SYMHODGE_CLI_HPP
#define SYMHODGE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "symhodge/symprod.hpp"

namespace symhodge {

/// True when every result carries the same polynomial; `sym --method all`
/// fails the run when this does not hold.
bool results_agree(const std::vector<SymResult>& results);

/// Runs the command line given by args (without the program name), writing
/// to the supplied streams. Returns the process exit code: 0 on success,
/// 1 on domain errors (bad presentation content, non-subgroup input,
/// integrality or agreement failures), 2 on usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace symhodge

#endif
