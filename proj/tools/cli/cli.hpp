#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace entriv::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// Runs one command line (program name excluded). The report goes to `out`
// unless --out is given; diagnostics go to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Markdown rendering of a report object.
std::string render_markdown(const nlohmann::json& report);

} // namespace entriv::cli
