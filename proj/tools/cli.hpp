#pragma once

#include <iosfwd>

namespace cxp::cli {

/// Runs one command line. Exit codes: 0 success, 1 bad input, 2 a validation check failed.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cxp::cli
