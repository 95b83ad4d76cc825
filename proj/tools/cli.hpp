#pragma once

#include <iosfwd>

namespace brouwerlab {

/// Entry point of the brouwerlab binary. Exit codes: 0 all checks pass,
/// 1 a check failed, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace brouwerlab
