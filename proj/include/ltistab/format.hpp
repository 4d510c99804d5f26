#pragma once

#include <string>

namespace ltistab {

/// Fixed 17-significant-digit scientific rendering ("%.16e"), the only float
/// format this project emits. Non-finite values become "inf", "-inf", "nan".
std::string format_double(double v);

}  // namespace ltistab
