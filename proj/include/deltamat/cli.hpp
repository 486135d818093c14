#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deltamat {

/// Exit codes: 0 success / predicate true, 1 predicate false or violations
/// found, 2 malformed input or usage, 3 internal consistency failure.
/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace deltamat
