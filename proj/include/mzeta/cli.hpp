#ifndef MZETA_CLI_HPP
#define MZETA_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mzeta {

/// Command dispatch shared by the mzeta binary and in-process callers.
/// `args` excludes the program name. Returns the process exit code:
/// 0 success, 1 domain error or failed check, 2 parse/schema/usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mzeta

#endif
