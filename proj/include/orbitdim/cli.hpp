// Command-line front end.
//
// Exit codes: 0 success, 1 a reported check failed, 2 parse or validation
// error, 3 picture incompatible with the state kind, 4 evolution leakage.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace orbitdim::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalidInput = 2, kPictureMismatch = 3, kLeakage = 4 };

inline constexpr std::string_view kReportSchema = "orbitdim.report/1";

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t hash = 0xcbf29ce484222325ULL);

}  // namespace orbitdim::cli
