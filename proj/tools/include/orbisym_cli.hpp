#pragma once

#include <iosfwd>

namespace orbisym::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kInputError = 2,
  kResourceLimit = 3,
};

/// Entry point of the orbisym command, with injectable streams for testing.
/// The catalog directory comes from $ORBISYM_CATALOG (default ./catalog);
/// the compiled-in catalog is used when the default directory is absent.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orbisym::cli
