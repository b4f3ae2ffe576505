#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polyred {

/// Runs one subcommand. JSON goes to out, a short summary to err. Returns
/// 0 on success, 1 on domain errors (out receives {"error": ...}) and 2 on
/// usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyred
