#pragma once

#include <iosfwd>

namespace cobord::cli {

/// Exit codes: 0 success, 1 verification failure or collision, 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cobord::cli
