// Command-line front end: spectrum, schedule, evolve, sweep, optimality.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace adiabatic::cli {

/// Every flag of every subcommand. Fields a subcommand does not read keep
/// their defaults and are still echoed, so any output file fully describes
/// the run that produced it.
struct RunConfig {
    std::string command;
    std::uint64_t n = 64;
    std::uint64_t marked = 0;
    std::optional<std::uint64_t> seed;
    double eps = 0.1;
    std::string schedule = "local";
    std::optional<double> time;
    int samples = 0;  // 0: subcommand default
    bool with_linear = false;
    std::string method = "rk4";
    double step = 0.01;
    double tol = 1e-10;
    int trajectory_samples = 101;
    double target = 0.9;
    double search_tol = 1e-3;
    std::string engine = "auto";
    std::uint64_t full_max = 1024;
    double eps_dist = 0.5;
    std::vector<std::uint64_t> ns{16, 32, 64, 128, 256, 512};
    unsigned jobs = 1;
    std::vector<std::string> formats;
    std::string out = ".";
};

nlohmann::json to_json(const RunConfig& cfg);

/// Environment variables named ADIABATIC_<FLAG> (upper case, '-' -> '_')
/// supply values for flags absent from the command line.
inline constexpr const char* kEnvPrefix = "ADIABATIC_";

/// Parses and runs one subcommand. Returns the process exit status;
/// diagnostics go to `err`, progress lines to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adiabatic::cli
