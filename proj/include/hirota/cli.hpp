#pragma once
// Command-line configuration, dispatch and report emission.

#include "hirota/verify.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hirota::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kNumericalAbort = 3 };

struct Config {
    std::string command;
    std::string equation;  // name or "all"; empty resolves per command
    double h = 0.5;
    std::optional<double> k;  // empty resolves per command
    double l = 0.2;
    double dt = 1e-3;
    int M = 256;
    double t_end = 2.0;
    int stride = 100;
    std::string study = "h";
    std::string protocol = "semidiscrete-exact";
    std::string boundary = "exact-tau";
    std::vector<double> levels;  // empty resolves per study
    std::uint64_t seed = kDefaultSeed;
    int pairs = 100;
    std::string format = "json";
    std::string out;  // empty: $HIROTA_OUT_DIR/<command>.<format>, else stdout
    std::string csv;  // simulate: trajectory CSV path
    bool print_config = false;

    nlohmann::json to_json() const;
};

const std::vector<std::string>& commands();

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class HelpRequested : public UsageError {
public:
    using UsageError::UsageError;
};

// Parses argv (without the program name). Throws UsageError.
Config parse_config(const std::vector<std::string>& args);

// Fills command-dependent defaults and range-checks. Throws UsageError.
void resolve(Config& c);

// Runs a resolved config and writes the report. Returns an exit code.
int run_command(const Config& c, std::ostream& out, std::ostream& err);

// parse + resolve + run, mapping errors to exit codes.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// {version, command, config, reports, pass}
nlohmann::json envelope(const Config& c, const std::vector<Report>& reports);

}  // namespace hirota::cli
