#include "genival/division.hpp"

#include <algorithm>
#include <cmath>

#include "genival/embed.hpp"
#include "genival/error.hpp"
#include "genival/format.hpp"

namespace genival {

std::string_view to_string(division_kind k) noexcept
{
    switch (k) {
    case division_kind::exact_invertible:
        return "exact-invertible";
    case division_kind::exact_straddle:
        return "exact-straddle";
    case division_kind::euclidean:
        return "euclidean";
    case division_kind::euclidean_straddle:
        return "euclidean-straddle";
    }
    return "?";
}

gelement g_inverse(const gelement& x, double inv_tol)
{
    const a4 image = phi_bar(x);
    if (!is_invertible(image, inv_tol)) {
        throw error(errc::not_invertible, to_string(x) + " is not invertible");
    }
    return reduce_mod_r(inverse(image, inv_tol));
}

namespace {

// Positive class or point, as its canonical interval.
interval require_proper(const gelement& g, errc code, std::string_view what)
{
    if (g.p() > g.q()) {
        throw error(code, std::string(what) + " must be a positive class, got " + to_string(g));
    }
    return interval(g.p(), g.q());
}

struct straddle_parts {
    double left;  // magnitude of the negative endpoint
    double right; // positive endpoint
};

straddle_parts require_straddle(const gelement& g, errc code, std::string_view what)
{
    const interval k = require_proper(g, code, what);
    if (!(k.lo() < 0 && k.hi() > 0)) {
        throw error(code, std::string(what) + " must strictly straddle zero, got " + to_string(g));
    }
    return {-k.lo(), k.hi()};
}

} // namespace

invertible_quotient divide_invertible(const gelement& y, const gelement& x)
{
    const interval xi = require_proper(x, errc::divisor_not_positive, "divisor");
    if (!(xi.lo() > 0)) {
        throw error(errc::divisor_not_positive,
                    "divisor needs a positive left endpoint, got " + to_string(x));
    }
    const interval yi = require_proper(y, errc::divisor_not_positive, "dividend");
    if (yi.lo() < 0) {
        throw error(errc::divisor_not_positive,
                    "dividend needs a nonnegative left endpoint, got " + to_string(y));
    }
    // The A4 route: phi(y) * phi(x)^-1 = (y1/x1, y2/x2, 0, 0).
    const gelement z = reduce_mod_r(phi(yi) * inverse(phi(xi)));
    return {z, yi.hi() * xi.lo() >= xi.hi() * yi.lo()};
}

gelement divide_straddle(const gelement& y, const gelement& x, double tol)
{
    const auto [x1, x2] = require_straddle(x, errc::unsupported, "divisor");
    const auto [y1, y2] = require_straddle(y, errc::unsupported, "dividend");
    if (std::abs(x1 - x2) <= tol) {
        throw error(errc::centered_divisor, "divisor " + to_string(x) + " is centered at zero");
    }
    const double d = x1 * x1 - x2 * x2;
    const double z2 = (x1 * y1 - x2 * y2) / d;
    const double z3 = (x1 * y2 - x2 * y1) / d;
    if (z2 < 0 || z3 < 0) {
        throw error(errc::ratio_condition_failed,
                    to_string(y) + " is not exactly divisible by " + to_string(x));
    }
    return {-z3, z2};
}

division_result euclid_div(const gelement& y, const gelement& x, double tol)
{
    const interval xi = require_proper(x, errc::unsupported, "divisor");
    const interval yi = require_proper(y, errc::unsupported, "dividend");
    if (xi.lo() < 0 || yi.lo() < 0) {
        throw error(errc::unsupported, "euclidean division needs nonnegative endpoints");
    }
    const double x1 = xi.lo(), x2 = xi.hi(), y1 = yi.lo(), y2 = yi.hi();
    if (std::abs(x2 - x1) <= tol) {
        throw error(errc::point_divisor_degenerate,
                    "divisor " + to_string(x) + " has zero length");
    }
    // x1/x2 < y1/y2 without dividing.
    if (!(x1 * y2 < y1 * x2)) {
        throw error(errc::condition_failed,
                    to_string(y) + " is exactly divisible by " + to_string(x));
    }
    const double z = (y2 - y1) / (x2 - x1);
    const double r = (x2 * y1 - x1 * y2) / (x2 - x1);
    return {gelement::point(z), gelement::point(r), division_kind::euclidean};
}

division_result euclid_div_straddle(const gelement& y, const gelement& x, double tol)
{
    const auto [x1, x2] = require_straddle(x, errc::unsupported, "divisor");
    const auto [y1, y2] = require_straddle(y, errc::unsupported, "dividend");
    if (std::abs(x1 - x2) <= tol) {
        throw error(errc::centered_divisor, "divisor " + to_string(x) + " is centered at zero");
    }
    // With u = y1 - r1, v = y2 - r2 the quotient stays in the cone iff
    // 1/rho <= u/v <= rho, rho = max(x1,x2)/min(x1,x2). Maximizing u + v over
    // the box [0,y1] x [0,y2] lands on the cone edge next to (y1, y2).
    const double rho = std::max(x1, x2) / std::min(x1, x2);
    double u = y1;
    double v = y2;
    if (y1 > rho * y2) {
        u = rho * y2;
    } else if (y2 > rho * y1) {
        v = rho * y1;
    } else {
        throw error(errc::condition_failed,
                    to_string(y) + " is exactly divisible by " + to_string(x));
    }
    const double d = x1 * x1 - x2 * x2;
    const double z2 = std::max(0.0, (x1 * u - x2 * v) / d);
    const double z3 = std::max(0.0, (x1 * v - x2 * u) / d);
    return {gelement(-z3, z2), gelement(-(y1 - u), y2 - v), division_kind::euclidean_straddle};
}

double reconstruction_error(const gelement& y, const gelement& x, const division_result& r) noexcept
{
    const gelement back = bullet(x, r.quotient) + r.remainder;
    const double scale = std::max(1.0, norm(y));
    return norm(back - y) / scale;
}

division_result div_auto(const gelement& y, const gelement& x, const division_options& opts)
{
    if (x.p() == 0 && x.q() == 0) {
        throw error(errc::division_by_zero_point, "division by the zero point");
    }
    if (x.p() > x.q() || y.p() > y.q()) {
        throw error(errc::unsupported, "division of negative classes is not supported");
    }
    const interval xi(x.p(), x.q());
    const interval yi(y.p(), y.q());

    auto checked = [&](division_result r) {
        if (reconstruction_error(y, x, r) > opts.check_tol) {
            throw error(errc::unsupported,
                        "no division of " + to_string(y) + " by " + to_string(x) + " applies");
        }
        return r;
    };

    const a4 image = phi(xi);
    if (is_invertible(image, opts.inv_tol)) {
        const gelement z = reduce_mod_r(phi(yi) * inverse(image, opts.inv_tol));
        const division_result exact{z, {}, division_kind::exact_invertible};
        if (reconstruction_error(y, x, exact) <= opts.check_tol) {
            return exact;
        }
        if (xi.lo() >= 0 && yi.lo() >= 0) {
            return checked(euclid_div(y, x, opts.tol));
        }
        return checked(exact);
    }
    if (straddles_zero(xi) && straddles_zero(yi)) {
        try {
            return checked({divide_straddle(y, x, opts.tol), {}, division_kind::exact_straddle});
        } catch (const error& e) {
            if (e.code() != errc::ratio_condition_failed) {
                throw;
            }
        }
        return checked(euclid_div_straddle(y, x, opts.tol));
    }
    throw error(errc::unsupported,
                "no division of " + to_string(y) + " by " + to_string(x) + " applies");
}

} // namespace genival
