#pragma once

#include <iosfwd>

namespace gk::cli {

// Exit status: 0 ok, 1 verification failure, 2 schema or usage error, 3 internal invariant breach.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gk::cli
