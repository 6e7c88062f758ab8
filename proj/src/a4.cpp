#include "genival/a4.hpp"

#include <cmath>
#include <vector>

#include "genival/error.hpp"
#include "genival/format.hpp"

namespace genival {

double discriminant(const a4& a) noexcept
{
    return (a[0] * a[0] - a[3] * a[3]) * (a[1] * a[1] - a[2] * a[2]);
}

bool is_invertible(const a4& a, double tol) noexcept { return std::abs(discriminant(a)) > tol; }

a4 inverse(const a4& a, double tol)
{
    if (!is_invertible(a, tol)) {
        throw error(errc::not_invertible, "element " + to_string(a) + " is not invertible");
    }
    // Each ideal solves its own 2x2 system [[u, v], [v, u]].
    const double d1 = a[0] * a[0] - a[3] * a[3];
    const double d2 = a[1] * a[1] - a[2] * a[2];
    return {a[0] / d1, a[1] / d2, -a[2] / d2, -a[3] / d1};
}

ideal ideal_member(const a4& a) noexcept
{
    const bool has_i1 = a[0] != 0 || a[3] != 0;
    const bool has_i2 = a[1] != 0 || a[2] != 0;
    if (has_i1 && has_i2) {
        return ideal::neither;
    }
    if (has_i1) {
        return ideal::i1;
    }
    return has_i2 ? ideal::i2 : ideal::zero;
}

namespace {

enum class shape { s12, s23, s34 };

std::vector<shape> shapes_of(const a4& a)
{
    for (double v : a.x) {
        if (v < 0 || std::isnan(v)) {
            return {};
        }
    }
    std::vector<shape> out;
    if (a[2] == 0 && a[3] == 0) {
        out.push_back(shape::s12);
    }
    if (a[0] == 0 && a[3] == 0) {
        out.push_back(shape::s23);
    }
    if (a[0] == 0 && a[1] == 0) {
        out.push_back(shape::s34);
    }
    return out;
}

bool rule_fires(shape sa, shape sb, const a4& a, const a4& b)
{
    if (sa == shape::s12 && sb == shape::s12) {
        return b[0] <= a[0] && a[1] <= b[1];
    }
    if (sa == shape::s12 && sb == shape::s23) {
        return a[1] <= b[1];
    }
    if (sa == shape::s23 && sb == shape::s23) {
        return a[2] <= b[2] && a[1] <= b[1];
    }
    if (sa == shape::s34 && sb == shape::s23) {
        return a[2] <= b[2];
    }
    if (sa == shape::s34 && sb == shape::s34) {
        return a[2] <= b[2] && b[3] <= a[3];
    }
    return false;
}

} // namespace

a4_order a4_leq(const a4& a, const a4& b)
{
    const auto sa = shapes_of(a);
    const auto sb = shapes_of(b);
    if (sa.empty() || sb.empty()) {
        throw error(errc::bad_shape, "a4_leq needs canonical image shapes, got " + to_string(a)
                                         + " and " + to_string(b));
    }
    for (shape x : sa) {
        for (shape y : sb) {
            if (rule_fires(x, y, a, b)) {
                return a4_order::less_eq;
            }
        }
    }
    return a4_order::incomparable;
}

} // namespace genival
