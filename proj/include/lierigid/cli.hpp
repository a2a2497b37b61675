#pragma once

#include <ostream>

namespace lierigid {

/// Exit codes: 0 success, 1 domain error or failed check, 2 usage error.
int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lierigid
