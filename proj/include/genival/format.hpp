#pragma once

#include <string>

#include "genival/a4.hpp"
#include "genival/core.hpp"

namespace genival {

/// 12 significant digits; the fixed width keeps golden outputs stable.
std::string format_real(double v);

/// "[a,b]" for positive classes, "dual[a,b]" for negative classes
/// (rendered from the canonical interval), "a" for points.
std::string to_string(const gelement& x);
std::string to_string(const interval& x);
/// "(x1, x2, x3, x4)"
std::string to_string(const a4& x);

} // namespace genival
