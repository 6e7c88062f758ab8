#pragma once

#include <array>

namespace genival {

/// Element of the 4-dimensional commutative associative algebra that
/// linearizes interval multiplication. Basis e1..e4, unit e1 + e2,
/// ideals I1 = span{e1, e4} and I2 = span{e2, e3}.
struct a4 {
    std::array<double, 4> x{};

    constexpr a4() = default;
    constexpr a4(double x1, double x2, double x3, double x4) noexcept : x{x1, x2, x3, x4} {}

    constexpr double operator[](std::size_t i) const noexcept { return x[i]; }
    constexpr double& operator[](std::size_t i) noexcept { return x[i]; }

    friend constexpr bool operator==(const a4&, const a4&) = default;
};

inline constexpr a4 e1{1, 0, 0, 0};
inline constexpr a4 e2{0, 1, 0, 0};
inline constexpr a4 e3{0, 0, 1, 0};
inline constexpr a4 e4{0, 0, 0, 1};

constexpr a4 operator+(const a4& a, const a4& b) noexcept
{
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
constexpr a4 operator-(const a4& a) noexcept { return {-a[0], -a[1], -a[2], -a[3]}; }
constexpr a4 operator-(const a4& a, const a4& b) noexcept { return a + (-b); }
constexpr a4 operator*(double alpha, const a4& a) noexcept
{
    return {alpha * a[0], alpha * a[1], alpha * a[2], alpha * a[3]};
}

constexpr a4 operator*(const a4& a, const a4& b) noexcept
{
    return {a[0] * b[0] + a[3] * b[3], a[1] * b[1] + a[2] * b[2], a[2] * b[1] + a[1] * b[2],
            a[3] * b[0] + a[0] * b[3]};
}

inline a4 a4_add(const a4& a, const a4& b) noexcept { return a + b; }
inline a4 a4_scale(double alpha, const a4& a) noexcept { return alpha * a; }
inline a4 a4_mul(const a4& a, const a4& b) noexcept { return a * b; }

constexpr a4 a4_unit() noexcept { return {1, 1, 0, 0}; }

/// (x1^2 - x4^2)(x2^2 - x3^2)
double discriminant(const a4& a) noexcept;

/// |discriminant| > tol; tol = 0 is an exact nonzero test.
bool is_invertible(const a4& a, double tol = 0) noexcept;

/// Throws error(errc::not_invertible) when the discriminant vanishes (within tol).
a4 inverse(const a4& a, double tol = 0);

enum class ideal { i1, i2, neither, zero };

ideal ideal_member(const a4& a) noexcept;

/// Single generators of the two nontrivial ideals.
inline constexpr a4 i1_generator = e4;
inline constexpr a4 i2_generator = e3;

enum class a4_order { less_eq, incomparable };

/// Partial order on the canonical image shapes (x1,x2,0,0), (0,x2,x3,0),
/// (0,0,x3,x4) with nonnegative entries. Shape pairs the order does not
/// relate are incomparable. Throws error(errc::bad_shape) for arguments
/// outside these shapes.
a4_order a4_leq(const a4& a, const a4& b);

} // namespace genival
