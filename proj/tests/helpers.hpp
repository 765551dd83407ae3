#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace testutil {

/// Scratch directory removed on destruction.
struct TempDir {
    std::filesystem::path path;

    TempDir() {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("pglab-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    f << content;
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string shell_quote(const std::string& s) {
    std::string r = "'";
    for (char c : s) {
        if (c == '\'')
            r += "'\\''";
        else
            r += c;
    }
    return r + "'";
}

/// Runs the pglab binary with the given arguments, capturing stdout/stderr.
/// `env_prefix` may hold VAR=value assignments, e.g. "PGLAB_THREADS=1".
inline CliResult run_cli(const std::vector<std::string>& args,
                         const std::string& env_prefix = "") {
    TempDir capture;
    std::string out_path = capture.file("out"), err_path = capture.file("err");
    std::string cmd;
    if (!env_prefix.empty()) cmd += env_prefix + " ";
    cmd += shell_quote(PGLAB_BIN);
    for (const std::string& a : args) cmd += " " + shell_quote(a);
    cmd += " > " + shell_quote(out_path) + " 2> " + shell_quote(err_path);
    int rc = std::system(cmd.c_str());
    CliResult res;
    res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    res.out = read_file(out_path);
    res.err = read_file(err_path);
    return res;
}

} // namespace testutil
