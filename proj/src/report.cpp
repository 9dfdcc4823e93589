#include "posetlab/report.hpp"

#include <cstdio>

namespace posetlab {

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace posetlab
