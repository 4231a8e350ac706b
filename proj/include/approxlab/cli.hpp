#pragma once

#include <iostream>

namespace approxlab::cli {

/// Dispatches the full command-line surface. Exit codes:
///   0 checks satisfied / generation complete
///   1 a verified law was violated
///   2 usage or input error
///   3 element budget exceeded
int run(int argc, const char* const* argv, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

} // namespace approxlab::cli
