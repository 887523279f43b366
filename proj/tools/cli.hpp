#pragma once

#include <iosfwd>

namespace isokit::cli {

/// Runs one command line. Exit codes: 0 success, 1 solver failure or failed
/// check, 2 invalid flags.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isokit::cli
