#pragma once

#include <string>

namespace awcd {

// Shortest decimal string that round-trips to the same double;
// infinities serialize as "inf" / "-inf", NaN as "nan".
std::string format_double(double v);

std::string format_bool01(bool v);

}  // namespace awcd
