#pragma once

#include "genival/a4.hpp"
#include "genival/core.hpp"

namespace genival {

/// Embedding of classical intervals:
///   [x1,x2] with x1,x2 >= 0   -> (x1, x2, 0, 0)
///   [x1,x2] with x1 <= 0 <= x2 -> (0, x2, -x1, 0)
///   [x1,x2] with x1,x2 <= 0   -> (0, 0, -x1, -x2)
/// The cases overlap at zero endpoints and agree there.
a4 phi(const interval& x) noexcept;

/// Extension to the completed space: positive classes and points go through
/// phi, a negative class (0,K) maps to -phi(K).
a4 phi_bar(const gelement& x) noexcept;

/// Projection of A4 modulo the relation (t,s,t,s) ~ 0 back to the completed
/// space; the class of (x1,x2,x3,x4) is (x1 - x3, x2 - x4).
constexpr gelement reduce_mod_r(const a4& a) noexcept { return {a[0] - a[2], a[1] - a[3]}; }

/// The product induced by multiplying phi_bar images in A4 and projecting back.
/// Only representatives chosen by phi_bar are multiplied: the A4 product does
/// not respect the relation in general.
gelement bullet(const gelement& x, const gelement& y) noexcept;

/// Iterated bullet; n = 0 gives the point 1.
gelement g_pow(const gelement& x, unsigned n) noexcept;

/// Classical product unless both factors strictly straddle zero, in which case
/// [x1 y2 + x2 y1, x2 y2 + x1 y1], which contains the classical product.
interval mul_envelope(const interval& x, const interval& y);

/// x1 < 0 < x2.
inline bool straddles_zero(const interval& x) noexcept { return x.lo() < 0 && 0 < x.hi(); }

} // namespace genival
