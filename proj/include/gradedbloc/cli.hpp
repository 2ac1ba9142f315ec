#pragma once

#include <ostream>

namespace gradedbloc::cli {

/// Exit codes: 0 success, 1 validation failure, 2 malformed input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gradedbloc::cli
