#include "genival/format.hpp"

#include <cstdio>

namespace genival {

std::string format_real(double v)
{
    if (v == 0) {
        v = 0; // drop the sign of -0
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string to_string(const interval& x)
{
    return "[" + format_real(x.lo()) + "," + format_real(x.hi()) + "]";
}

std::string to_string(const gelement& x)
{
    const canonical_form c = to_canonical(x);
    if (const auto* v = std::get_if<double>(&c.value)) {
        return format_real(*v);
    }
    const std::string body = to_string(std::get<interval>(c.value));
    return c.sign.kind == sign_kind::negative ? "dual" + body : body;
}

std::string to_string(const a4& x)
{
    return "(" + format_real(x[0]) + ", " + format_real(x[1]) + ", " + format_real(x[2]) + ", "
         + format_real(x[3]) + ")";
}

} // namespace genival
