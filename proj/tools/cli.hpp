#pragma once

#include <iosfwd>

namespace kuniv::cli {

// Exit codes: 0 success, 1 internal error, 2 usage or input error, 3 capacity.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kuniv::cli
