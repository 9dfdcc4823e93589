#pragma once

#include <string>

namespace posetlab {

// 12 significant digits, the repo-wide convention for reals in reports.
std::string format_real(double v);

} // namespace posetlab
