#ifndef QCYC_TOOLS_CLI_HPP
#define QCYC_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace qcyc::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct RunConfig {
    std::uint64_t cap = std::uint64_t{1} << 20;
    std::uint64_t dlog_bound = std::uint64_t{1} << 24;
    std::string format = "text";  // text | doc
    std::uint64_t seed = 0;
};

/// Runs one command line (argv[0] is the program name). Output goes to `out`, diagnostics to
/// `err`; the return value is the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcyc::cli

#endif  // QCYC_TOOLS_CLI_HPP
