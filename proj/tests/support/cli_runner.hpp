#pragma once

// Runs the command-line binary as a subprocess and captures stdout plus the
// exit code. The binary path is injected by the build as TRISTAB_CLI_PATH.

#include <cstdio>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace tristab::testing {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

/// Runs `<cli> <args>`. stderr is merged into the captured output when
/// merge_stderr is set (default), so singular-factor messages are visible.
inline CliResult run_cli(const std::string& args, bool merge_stderr = true) {
    std::string command = std::string(TRISTAB_CLI_PATH) + " " + args;
    if (merge_stderr) command += " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        throw std::runtime_error("popen failed for: " + command);
    }
    CliResult result;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, n);
    }
    const int status = pclose(pipe);
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    return result;
}

} // namespace tristab::testing
