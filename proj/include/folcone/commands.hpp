#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "folcone/plot.hpp"
#include "folcone/report.hpp"

namespace folcone {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitVerification = 2 };

using Path = std::filesystem::path;

Report cmd_loops(const Path& presentation);
Report cmd_cone(const Path& presentation);
Report cmd_fan(const Path& fan);
Report cmd_faces(const Path& fan);
Report cmd_ball(const Path& fan, const Path& ball);
/// `query` is a vector literal such as "1,0" or a class-query file.
Report cmd_member(const Path& fan, const std::string& query);
Report cmd_transfer(const Path& map, const Path& fan);
Report cmd_branch(const Path& branched, const std::optional<Path>& presentation);

struct PlotRequest {
  std::optional<std::string> slice;
  std::optional<Path> ball;
};
/// SVG text; throws VerificationError if the fan does not verify.
std::string cmd_plot(const Path& fan, const PlotRequest& request);

}  // namespace folcone
