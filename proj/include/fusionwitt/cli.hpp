#pragma once

#include "fusionwitt/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fusionwitt::cli {

enum ExitStatus : int
{
    exit_ok = 0,
    exit_validation = 1,
    exit_usage = 2,
};

struct Options
{
    double tolerance = 1e-12;
    std::string format = "text";
    bool force = false;
    bool odd = false;
    std::size_t element_cap = 0;  // 0: take from the environment or the built-in default
    int order_cap = 0;
    std::size_t closure_cap = 0;
    std::uint64_t scan_cap = 0;
};

/// Verbs: validate, analyze, witt-class, witt-order, witt-subgroup, classify, scan.
struct Command
{
    std::string verb;
    std::vector<std::string> inputs;
    Options options;
};

struct RunResult
{
    Report report;
    int status = exit_ok;
    std::string error;
};

/// Applies FUSIONWITT_ELEMENT_CAP, FUSIONWITT_ORDER_CAP, FUSIONWITT_CLOSURE_CAP
/// and FUSIONWITT_SCAN_CAP to options left at zero.
Options resolve_caps(Options options);

RunResult run(Command const& command);

/// Full command-line entry point.
int main_entry(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

} // namespace fusionwitt::cli
