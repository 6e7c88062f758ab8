#pragma once

#include <compare>
#include <iosfwd>
#include <variant>

namespace genival {

/// A classical closed interval [lo, hi] with lo <= hi.
class interval {
public:
    /// Throws error(errc::malformed_interval) when lo > hi.
    interval(double lo, double hi);

    static interval point(double v) { return interval(v, v); }

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double length() const noexcept { return hi_ - lo_; }
    double center() const noexcept { return (hi_ + lo_) / 2; }

    bool contains(const interval& other) const noexcept
    {
        return lo_ <= other.lo_ && other.hi_ <= hi_;
    }

    friend bool operator==(const interval&, const interval&) = default;

private:
    double lo_;
    double hi_;
};

interval operator+(const interval& x, const interval& y);
interval operator-(const interval& x, const interval& y);

// min/max over the four endpoint products.
interval mul_classical(const interval& x, const interval& y);

enum class sign_kind { positive, negative, point };

struct sign_class {
    sign_kind kind;
    double value = 0; // only meaningful for sign_kind::point

    friend bool operator==(const sign_class&, const sign_class&) = default;
};

/// Element of the completed interval space, stored in the directed chart (p, q).
///
/// Every real pair is a valid element. p < q is the positive class ([p,q], 0),
/// p > q is the negative class (0, [-p,-q]) and p == q is the real point p.
/// Addition and scaling are componentwise in this chart.
class gelement {
public:
    constexpr gelement() = default;
    constexpr gelement(double p, double q) noexcept : p_(p), q_(q) {}

    static constexpr gelement point(double v) noexcept { return {v, v}; }
    static gelement from_proper(const interval& a) noexcept { return {a.lo(), a.hi()}; }
    static gelement from_negative(const interval& a) noexcept { return {-a.lo(), -a.hi()}; }
    /// The class of the formal difference (x, y).
    static gelement from_pair(const interval& x, const interval& y) noexcept
    {
        return {x.lo() - y.lo(), x.hi() - y.hi()};
    }

    constexpr double p() const noexcept { return p_; }
    constexpr double q() const noexcept { return q_; }

    friend constexpr bool operator==(const gelement&, const gelement&) = default;

private:
    double p_ = 0;
    double q_ = 0;
};

constexpr gelement operator+(const gelement& x, const gelement& y) noexcept
{
    return {x.p() + y.p(), x.q() + y.q()};
}
constexpr gelement operator-(const gelement& x) noexcept { return {-x.p(), -x.q()}; }
constexpr gelement operator-(const gelement& x, const gelement& y) noexcept { return x + (-y); }
constexpr gelement operator*(double alpha, const gelement& x) noexcept
{
    return {alpha * x.p(), alpha * x.q()};
}

// The named forms mirror the operators; the CLI and tests use both.
inline gelement g_add(const gelement& x, const gelement& y) noexcept { return x + y; }
inline gelement g_neg(const gelement& x) noexcept { return -x; }
inline gelement g_sub(const gelement& x, const gelement& y) noexcept { return x - y; }
inline gelement g_scale(double alpha, const gelement& x) noexcept { return alpha * x; }

double length(const gelement& x) noexcept;
double center(const gelement& x) noexcept;
/// l(X) + |c(X)|
double norm(const gelement& x) noexcept;

/// tol widens the point band: |q - p| <= tol counts as a point.
sign_class sign(const gelement& x, double tol = 0) noexcept;

enum class ordering { greater_eq, less_eq, equal, incomparable };

/// Compares through the sign of x - y. A nonzero point difference is incomparable.
ordering compare(const gelement& x, const gelement& y, double tol = 0) noexcept;

constexpr gelement dual(const gelement& x) noexcept { return {x.q(), x.p()}; }

/// Coordinates in the basis X1 = ([0,1],0), X2 = ([1,1],0).
struct basis_coords {
    double u; // coefficient of X1
    double v; // coefficient of X2
};

inline constexpr gelement basis_x1{0, 1};
inline constexpr gelement basis_x2{1, 1};

basis_coords basis_decompose(const gelement& x) noexcept;
gelement basis_reconstruct(const basis_coords& c) noexcept;

struct canonical_form {
    sign_class sign;
    std::variant<interval, double> value;
};

canonical_form to_canonical(const gelement& x, double tol = 0);
gelement from_canonical(const canonical_form& c);

/// The underlying interval A of (A,0) or (0,A); a point becomes [v,v].
interval canonical_interval(const gelement& x);

std::ostream& operator<<(std::ostream& os, const interval& x);
std::ostream& operator<<(std::ostream& os, const gelement& x);

} // namespace genival
