#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuskit::cli {

inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kHypothesisFailure = 2;
inline constexpr int kUsage = 64;
inline constexpr int kSizeLimit = 65;

/// Run one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuskit::cli
