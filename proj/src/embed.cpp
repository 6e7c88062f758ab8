#include "genival/embed.hpp"

namespace genival {

a4 phi(const interval& x) noexcept
{
    const double x1 = x.lo();
    const double x2 = x.hi();
    if (x1 >= 0) {
        return {x1, x2, 0, 0};
    }
    if (x2 >= 0) {
        return {0, x2, -x1, 0};
    }
    return {0, 0, -x1, -x2};
}

a4 phi_bar(const gelement& x) noexcept
{
    if (x.p() <= x.q()) {
        return phi(interval(x.p(), x.q()));
    }
    return -phi(interval(-x.p(), -x.q()));
}

gelement bullet(const gelement& x, const gelement& y) noexcept
{
    return reduce_mod_r(phi_bar(x) * phi_bar(y));
}

gelement g_pow(const gelement& x, unsigned n) noexcept
{
    gelement acc = gelement::point(1);
    for (unsigned i = 0; i < n; ++i) {
        acc = bullet(x, acc);
    }
    return acc;
}

interval mul_envelope(const interval& x, const interval& y)
{
    if (straddles_zero(x) && straddles_zero(y)) {
        return interval(x.lo() * y.hi() + x.hi() * y.lo(), x.hi() * y.hi() + x.lo() * y.lo());
    }
    return mul_classical(x, y);
}

} // namespace genival
