#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace matchlat {

inline constexpr const char* kToolName = "matchlat";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "matchlat-report/1";

/// Runs one command line (without the program name). The JSON report goes to
/// `out` unless --output names a file; usage errors go to `err`.
/// Returns 0 on success or pass, 1 on a failed property or falsified theorem,
/// 2 on usage or precondition errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matchlat
