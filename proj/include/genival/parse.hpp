#pragma once

#include <string_view>

#include "genival/a4.hpp"
#include "genival/core.hpp"

namespace genival {

/// "[a,b]" -> positive class, "dual[a,b]" -> negative class, a number -> point,
/// "(p,q)" -> raw coordinates. Surrounding whitespace is ignored.
/// Throws parse_error, or error(errc::malformed_interval) for "[a,b]" with a > b.
gelement parse_gelement(std::string_view text);

/// "(x1, x2, x3, x4)"
a4 parse_a4(std::string_view text);

/// Expressions over elements with + and - (the completed-space difference),
/// * (the bullet product), scalar action "k · X" (or "k . X"), unary minus and
/// parentheses. * and · bind tighter than + and -; both levels associate left.
gelement eval_expr(std::string_view text);

} // namespace genival
