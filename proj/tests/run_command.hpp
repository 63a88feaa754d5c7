#ifndef WIDTHONE_TESTS_RUN_COMMAND_HPP
#define WIDTHONE_TESTS_RUN_COMMAND_HPP

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

struct CommandResult {
    int exit_code = -1;
    std::string stdout_text;
};

/// Runs a shell command, captures stdout, and returns the exit status.
/// Callers route stderr themselves (append 2>/dev/null to silence it).
inline CommandResult run_command(const std::string& cmd) {
    CommandResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed: " + cmd);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.stdout_text.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

#endif
