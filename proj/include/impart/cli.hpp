#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace impart::cli {

struct RunReport {
    std::string command;
    std::string instance;
    std::optional<std::string> verdict;
    std::optional<long long> value;
    std::optional<std::vector<int>> witness;  // original vertex ids
    std::map<std::string, std::string> trace;
    long long wall_time_ms = 0;

    std::string to_text() const;
    std::string to_json() const;  // versioned with a top-level "schema": 1
};

// Exit status: 0 success, 2 usage error, 3 input error, 4 ceiling exceeded.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace impart::cli
