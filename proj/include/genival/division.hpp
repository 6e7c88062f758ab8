#pragma once

#include <string_view>

#include "genival/core.hpp"

namespace genival {

enum class division_kind { exact_invertible, exact_straddle, euclidean, euclidean_straddle };

std::string_view to_string(division_kind k) noexcept;

/// dividend = bullet(divisor, quotient) + remainder
struct division_result {
    gelement quotient;
    gelement remainder;
    division_kind kind;
};

/// reduce_mod_r(inverse(phi_bar(x))). Throws not_invertible when the
/// discriminant of phi_bar(x) vanishes, which is the case for every interval
/// touching or straddling zero.
gelement g_inverse(const gelement& x, double inv_tol = 0);

struct invertible_quotient {
    gelement quotient;
    /// y2/y1 >= x2/x1: the quotient is a proper (positive) class and
    /// bullet(x, quotient) reproduces y.
    bool ratio_condition_held;
};

/// Quotient (y1/x1, y2/x2) of two positive classes with x1 > 0, y1 >= 0.
/// Throws divisor_not_positive otherwise.
invertible_quotient divide_invertible(const gelement& y, const gelement& x);

/// Exact division of y = [-y1, y2] by x = [-x1, x2] (all of x1, x2, y1, y2 > 0)
/// by solving the 2x2 system on the (e2, e3) components.
/// Throws centered_divisor if x1 == x2 (within tol), ratio_condition_failed if
/// the solution leaves the straddling cone.
gelement divide_straddle(const gelement& y, const gelement& x, double tol = 1e-12);

/// Euclidean division in the nonnegative positive classes: point quotient and
/// point remainder of minimal center. Requires x1 < x2 and x1/x2 < y1/y2.
division_result euclid_div(const gelement& y, const gelement& x, double tol = 1e-12);

/// Euclidean division of straddling classes when exact division fails: the
/// remainder [-r1, r2] has minimal length r1 + r2 among all remainders that
/// keep the quotient inside the straddling cone. Throws condition_failed if
/// y is exactly divisible and centered_divisor if x1 == x2.
division_result euclid_div_straddle(const gelement& y, const gelement& x, double tol = 1e-12);

struct division_options {
    double inv_tol = 0;
    double tol = 1e-12;
    /// Relative tolerance of the reconstruction check applied to every result.
    double check_tol = 1e-9;
};

/// Picks exact or Euclidean division from the shapes of x and y.
division_result div_auto(const gelement& y, const gelement& x, const division_options& opts = {});

/// Relative reconstruction residual of a division result.
double reconstruction_error(const gelement& y, const gelement& x, const division_result& r) noexcept;

} // namespace genival
