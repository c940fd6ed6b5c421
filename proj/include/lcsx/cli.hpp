#ifndef LCSX_CLI_HPP
#define LCSX_CLI_HPP

#include <string>
#include <vector>

namespace lcsx::cli {

/// Parses and executes one CLI invocation (gen | approx | exact | compare |
/// bench). Returns 0 on success, 1 on I/O, parse or operational errors,
/// 2 on validation failure.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace lcsx::cli

#endif
