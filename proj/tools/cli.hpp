#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qabacus::cli {

/// Exit codes: 0 success / all checks pass, 1 a verification failed,
/// 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qabacus::cli
