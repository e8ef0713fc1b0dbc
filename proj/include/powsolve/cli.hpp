#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace powsolve::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParseFailure = 2,
    kNotApplicable = 3,
    kVerificationFailure = 4,
};

struct Options {
    std::string command;
    std::string source;
    std::string inputKind = "expr";
    std::string format = "text";
    unsigned precision = 64;
    bool verify = true;
    std::uint64_t seed = 0x5eedULL;
    std::string batch;
};

struct Outcome {
    int code = kOk;
    std::string out;
    std::string err;
};

/// Runs one subcommand on one input text. Never throws.
Outcome execute(const Options& options, const std::string& text);

/// Full command line without the program name, e.g. {"solve", "--format", "json", "x^3-1"}.
int runCommand(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace powsolve::cli
