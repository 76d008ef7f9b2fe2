#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

namespace equi::cli {

enum ExitCode : int {
  kOk = 0,        ///< success, or the design is equitable
  kNegative = 1,  ///< checked and found not equitable
  kUsage = 2,     ///< bad flags or out-of-range parameters
  kIoError = 3,   ///< unreadable, unwritable or unparseable file
};

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Writes via a sibling temporary file and rename. Throws std::runtime_error.
void write_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace equi::cli
