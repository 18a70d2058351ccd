#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace holord::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPropertyFailure = 2;

inline constexpr int kDefaultDegree = 4;
/// Overrides the default truncation degree when set.
inline constexpr const char* kDegreeEnv = "HOLORD_DEGREE";

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holord::cli
