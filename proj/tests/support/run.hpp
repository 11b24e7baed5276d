#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace partgen::testing {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs a shell command, capturing stdout; stderr is discarded.
inline RunResult run(const std::string& command)
{
    RunResult result;
    FILE* pipe = ::popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe)
        return result;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.out.append(buf.data(), got);
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace partgen::testing
