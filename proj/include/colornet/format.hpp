#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace colornet {

/// Fixed-point rendering; negative zero prints as zero.
inline std::string fixed(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    std::string s(buf);
    if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

} // namespace colornet
