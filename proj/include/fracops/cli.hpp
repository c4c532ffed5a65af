#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracops::cli {

/// Subcommand dispatch. Exit codes: 0 success, 1 relation check failed,
/// 2 usage error, 3 evaluation error (zero denominators, undefined checks,
/// I/O failures).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace fracops::cli
