#ifndef FSCHUR_TESTS_RUN_CLI_HPP
#define FSCHUR_TESTS_RUN_CLI_HPP

// Small popen-based runner for the command line binary under test.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

struct CliResult {
    int exit_code = -1;
    std::string out;
};

inline std::string shell_quote(const std::string& arg) {
    std::string quoted = "'";
    for (char c : arg) {
        if (c == '\'')
            quoted += "'\\''";
        else
            quoted += c;
    }
    quoted += "'";
    return quoted;
}

inline CliResult run_cli(const std::string& binary,
                         const std::vector<std::string>& args,
                         bool merge_stderr = false) {
    std::string command = shell_quote(binary);
    for (const auto& arg : args)
        command += " " + shell_quote(arg);
    command += merge_stderr ? " 2>&1" : " 2>/dev/null";

    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return result;
    std::array<char, 4096> buffer{};
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    int status = pclose(pipe);
    if (WIFEXITED(status))
        result.exit_code = WEXITSTATUS(status);
    return result;
}

inline const char* cli_binary_from_env() { return std::getenv("FSCHUR_BIN"); }

#endif
