#pragma once

#include <string>
#include <string_view>

#include "deltamat/core.hpp"

namespace deltamat {

/// {"elements": [...labels...], "feasible": [[...], ...]}. Labels may be JSON
/// strings or integers. Throws InputError naming the offending token.
SetSystem parse_set_system(std::string_view text);

/// Single-line JSON, feasible sets in ascending mask order, members in
/// ground-set order, newline-terminated. parse_set_system inverts it exactly.
std::string serialize_set_system(const SetSystem& s);

}  // namespace deltamat
