#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace testutil {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // captured stdout
};

/// Run a shell command, capture stdout, and report the exit code. Diagnostics
/// on stderr are discarded; the tests only assert on stdout and status.
inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (pipe == nullptr) {
        return result;
    }
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    return result;
}

}  // namespace testutil
