#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crideal::cli {

enum ExitCode { kAnswered = 0, kError = 1, kInconclusive = 2 };

// Runs one command line (without the program name). The JSON report goes to
// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct GoldenScenario {
    std::string name;
    std::vector<std::string> args;
};

const std::vector<GoldenScenario>& golden_scenarios();

}  // namespace crideal::cli
