#pragma once

#include <string>

namespace evfusion {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace evfusion
