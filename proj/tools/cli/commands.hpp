#pragma once

#include "report.hpp"

#include <ostream>
#include <string>

namespace uniflip::cli {

enum class Command { Types, Subsystems, ZClasses, PPoly, Verify };

struct RunConfig {
    Command command = Command::Types;
    std::string which;  ///< verify: theorem112, independence, degrees or selftest
    std::string type;
    std::string orbit;
    std::string family;
    Format format = Format::Table;
    std::string data_dir;
    std::size_t guard_extra = 0;
    unsigned jobs = 1;
};

/// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kCheckFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kUnsupportedHypothesis = 3;
inline constexpr int kDataIntegrity = 4;

/// Builds the report for one command. Throws uniflip::Error.
Report build_report(const RunConfig& cfg);

/// Runs a command, writing the report to `out` and diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace uniflip::cli
