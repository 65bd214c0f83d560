// Minimal subprocess helper for CLI tests: run a shell command, optionally
// feed stdin, capture stdout and the exit code.

#ifndef SAMPCARD_TESTS_PROC_HPP
#define SAMPCARD_TESTS_PROC_HPP

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace testproc {

struct Result {
    int exit_code = -1;
    std::string out;
};

// Runs `command` under /bin/sh with `input` piped to stdin and stdout captured.
inline Result run(const std::string& command, const std::string& input = {}) {
    int in_pipe[2];
    if (pipe(in_pipe) != 0) throw std::runtime_error("pipe failed");

    const std::string out_path = "/tmp/sampcard_test_out." + std::to_string(getpid()) + ".tmp";
    const std::string full = command + " > " + out_path;

    const pid_t pid = fork();
    if (pid < 0) throw std::runtime_error("fork failed");
    if (pid == 0) {
        dup2(in_pipe[0], STDIN_FILENO);
        close(in_pipe[0]);
        close(in_pipe[1]);
        execl("/bin/sh", "sh", "-c", full.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }
    close(in_pipe[0]);
    std::size_t written = 0;
    while (written < input.size()) {
        const ssize_t w = write(in_pipe[1], input.data() + written, input.size() - written);
        if (w <= 0) break;
        written += static_cast<std::size_t>(w);
    }
    close(in_pipe[1]);

    int status = 0;
    waitpid(pid, &status, 0);

    Result result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (std::FILE* f = std::fopen(out_path.c_str(), "rb")) {
        std::array<char, 4096> buf;
        std::size_t got;
        while ((got = std::fread(buf.data(), 1, buf.size(), f)) > 0) {
            result.out.append(buf.data(), got);
        }
        std::fclose(f);
        std::remove(out_path.c_str());
    }
    return result;
}

// Path of a built binary, passed in by ctest through the environment.
inline std::string binary_path(const char* env_name) {
    const char* p = std::getenv(env_name);
    if (!p) throw std::runtime_error(std::string("environment variable not set: ") + env_name);
    return p;
}

}  // namespace testproc

#endif
