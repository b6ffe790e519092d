#ifndef ZOLO_CLI_COMMANDS_HPP
#define ZOLO_CLI_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zolo/cli/config.hpp"
#include "zolo/fieldmap.hpp"

namespace zolo::cli {

enum ExitCode : int { kSuccess = 0, kValidationFailure = 2, kNumericalFailure = 3 };

enum class FieldMode { kRatio, kSign };
enum class LevelStep { kUnit, kThird };

struct FieldRequest {
    std::optional<BoundingBox> box; // default: samples padded 20%
    int nx = 400;
    int ny = 300;
    FieldMode mode = FieldMode::kRatio;
    bool svg = false;
    LevelStep levels = LevelStep::kUnit;
};

// Each command writes its document to `out` and diagnostics to `log`. `verbose` adds the
// per-step Lawson errors to `log`. They throw ValidationError / NumericalError; run() maps
// those to exit codes.
void cmd_solve(const RunConfig &config, std::ostream &out, std::ostream &log, bool verbose = false);
void cmd_sweep(const RunConfig &config, const std::vector<int> &degrees, bool json, std::ostream &out);
void cmd_field(const RunConfig &config, const FieldRequest &request, std::ostream &out, std::ostream &log);

// "8..20" (inclusive range) or "8,12,16". Throws ValidationError(kConfig).
std::vector<int> parse_degrees(const std::string &text);

// Whole command line, argv[0] excluded. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace zolo::cli

#endif // ZOLO_CLI_COMMANDS_HPP
