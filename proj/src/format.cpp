#include "ltistab/format.hpp"

#include <cmath>
#include <cstdio>

namespace ltistab {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

}  // namespace ltistab
