/*
 * Helpers for driving the sfc3d binary from tests: temp workspaces, process
 * spawning and small CSV parsing utilities.
 */

#ifndef SFC3D_TESTS_CLI_HELPERS_HPP
#define SFC3D_TESTS_CLI_HELPERS_HPP

#include <cstdlib>
#include <unistd.h>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef SFC3D_CLI_PATH
#error "SFC3D_CLI_PATH must name the sfc3d binary"
#endif

namespace sfc3d_test {

namespace fs = std::filesystem;

class TempDir {
  public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() /
                ("sfc3d_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    fs::path operator/(const std::string& name) const { return path_ / name; }

  private:
    fs::path path_;
};

/// Runs the CLI with the given argument string; returns the exit code.
inline int run_cli(const std::string& args, const std::string& stderr_file = "/dev/null") {
    const std::string cmd =
        std::string(SFC3D_CLI_PATH) + " " + args + " 2>" + stderr_file;
    const int rc = std::system(cmd.c_str());
    return rc < 0 ? rc : WEXITSTATUS(rc);
}

inline std::vector<std::string> read_lines(const fs::path& p) {
    std::ifstream is(p);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

inline std::string read_file(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

/// Data rows of a CSV file (comment lines and the header skipped).
inline std::vector<std::vector<std::string>> csv_rows(const fs::path& p) {
    std::vector<std::vector<std::string>> rows;
    bool header_seen = false;
    for (const auto& line : read_lines(p)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        rows.push_back(split_csv(line));
    }
    return rows;
}

inline std::string csv_header(const fs::path& p) {
    for (const auto& line : read_lines(p))
        if (!line.empty() && line[0] != '#') return line;
    return "";
}

}  // namespace sfc3d_test

#endif  // SFC3D_TESTS_CLI_HELPERS_HPP
