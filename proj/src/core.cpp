#include "genival/core.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "genival/error.hpp"
#include "genival/format.hpp"

namespace genival {

interval::interval(double lo, double hi) : lo_(lo), hi_(hi)
{
    if (!(lo <= hi)) {
        throw error(errc::malformed_interval,
                    "malformed interval [" + format_real(lo) + "," + format_real(hi) + "]");
    }
}

interval operator+(const interval& x, const interval& y)
{
    return interval(x.lo() + y.lo(), x.hi() + y.hi());
}

interval operator-(const interval& x, const interval& y)
{
    return interval(x.lo() - y.hi(), x.hi() - y.lo());
}

interval mul_classical(const interval& x, const interval& y)
{
    const double a = x.lo() * y.lo();
    const double b = x.lo() * y.hi();
    const double c = x.hi() * y.lo();
    const double d = x.hi() * y.hi();
    return interval(std::min({a, b, c, d}), std::max({a, b, c, d}));
}

double length(const gelement& x) noexcept { return std::abs(x.q() - x.p()); }

double center(const gelement& x) noexcept { return (x.p() + x.q()) / 2; }

double norm(const gelement& x) noexcept { return length(x) + std::abs(center(x)); }

sign_class sign(const gelement& x, double tol) noexcept
{
    const double d = x.q() - x.p();
    if (std::abs(d) <= tol) {
        return {sign_kind::point, x.p()};
    }
    return {d > 0 ? sign_kind::positive : sign_kind::negative, 0};
}

ordering compare(const gelement& x, const gelement& y, double tol) noexcept
{
    const sign_class s = sign(x - y, tol);
    switch (s.kind) {
    case sign_kind::positive:
        return ordering::greater_eq;
    case sign_kind::negative:
        return ordering::less_eq;
    case sign_kind::point:
        break;
    }
    return std::abs(s.value) <= tol ? ordering::equal : ordering::incomparable;
}

basis_coords basis_decompose(const gelement& x) noexcept { return {x.q() - x.p(), x.p()}; }

gelement basis_reconstruct(const basis_coords& c) noexcept
{
    return c.u * basis_x1 + c.v * basis_x2;
}

canonical_form to_canonical(const gelement& x, double tol)
{
    const sign_class s = sign(x, tol);
    switch (s.kind) {
    case sign_kind::positive:
        return {s, interval(x.p(), x.q())};
    case sign_kind::negative:
        return {s, interval(-x.p(), -x.q())};
    case sign_kind::point:
        break;
    }
    return {s, x.p()};
}

gelement from_canonical(const canonical_form& c)
{
    if (const auto* v = std::get_if<double>(&c.value)) {
        return gelement::point(*v);
    }
    const interval& a = std::get<interval>(c.value);
    return c.sign.kind == sign_kind::negative ? gelement::from_negative(a)
                                              : gelement::from_proper(a);
}

interval canonical_interval(const gelement& x)
{
    if (x.p() <= x.q()) {
        return interval(x.p(), x.q());
    }
    return interval(-x.p(), -x.q());
}

std::ostream& operator<<(std::ostream& os, const interval& x) { return os << to_string(x); }

std::ostream& operator<<(std::ostream& os, const gelement& x) { return os << to_string(x); }

} // namespace genival
