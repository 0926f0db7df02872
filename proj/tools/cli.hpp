#pragma once

#include <ostream>

namespace thetaratio::cli {

/// Runs one command line. Data goes to out, diagnostics to err.
/// Returns 0 on success, 2 on usage errors, 1 on any other failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thetaratio::cli
