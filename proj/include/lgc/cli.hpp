#ifndef LGC_CLI_HPP
#define LGC_CLI_HPP

namespace lgc::cli {

// Exit codes: 0 success, 1 validation failure, 2 numerical/tolerance
// failure, 3 I/O failure.
int run(int argc, const char* const* argv);

} // namespace lgc::cli

#endif
