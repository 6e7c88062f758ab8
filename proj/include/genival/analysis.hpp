#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "genival/core.hpp"

namespace genival {

using gfunction = std::function<gelement(const gelement&)>;

/// 2x2 real matrix acting on (p, q) coordinates.
struct linear_map2 {
    double a11 = 0, a12 = 0;
    double a21 = 0, a22 = 0;

    gelement operator()(const gelement& h) const noexcept
    {
        return {a11 * h.p() + a12 * h.q(), a21 * h.p() + a22 * h.q()};
    }

    friend bool operator==(const linear_map2&, const linear_map2&) = default;
};

/// Vertices of the norm ball of radius eps around x0: offsets (-e,-e),
/// (e/2,-e/2), (e,e), (-e/2,e/2) in (p,q) coordinates.
std::array<gelement, 4> ball_vertices(const gelement& x0, double eps);

/// ||x - x0|| < eps
bool ball_contains(const gelement& x0, double eps, const gelement& x) noexcept;

/// Interval square on the canonical interval (the sign of the class is ignored).
gelement q2(const gelement& x) noexcept;

struct q2_comparison {
    gelement q2_value;
    gelement bullet_square;
    /// canonical interval of q2 contained in that of the bullet square
    bool included;
    bool equal;
};

q2_comparison q2_vs_square(const gelement& x);

/// sum_i coeffs[i] * x^i with x^0 the point 1.
gelement poly_eval(std::span<const double> coeffs, const gelement& x) noexcept;

/// Draws a point of the open norm ball of radius r around x0, uniformly in the
/// (length, center) diamond. When x0 has a sign, samples of the opposite sign
/// are rejected.
class ball_sampler {
public:
    explicit ball_sampler(std::uint64_t seed);

    gelement inside(const gelement& x0, double r);
    /// Offset h with ||h|| in [r/2, r].
    gelement shell_offset(double r);

private:
    std::mt19937_64 engine_;
    std::uniform_real_distribution<double> unit_{-1.0, 1.0};
};

struct continuity_options {
    int samples = 10000;
    std::uint64_t seed = 1;
    int bisection_steps = 40;
};

/// True when every sampled x with ||x - x0|| < eta has ||f(x) - f(x0)|| < eps.
bool continuity_holds(const gfunction& f, const gelement& x0, double eps, double eta,
                      const continuity_options& opts = {});

/// Largest tested eta in [eps 2^-20, eps] passing continuity_holds. eta = eps
/// is tried first. Throws error(errc::probe_failure) if even eps 2^-20 fails.
double continuity_probe(const gfunction& f, const gelement& x0, double eps,
                        const continuity_options& opts = {});

/// Matrix of h -> 2 bullet(x0, h) on the cone of positive-class offsets
/// 0 <= h.p <= h.q. Requires x0 to be a positive class or point.
linear_map2 candidate_differential_q2(const gelement& x0);

enum class probe_verdict { vanishes_linearly, bounded_away, diverges };

std::string_view to_string(probe_verdict v) noexcept;

/// Restriction of the offsets h = x - x0 used by a probe.
enum class probe_region {
    full,
    /// 0 < h.p <= h.q
    lengthening,
    /// h.p < 0 < h.q and h.q < -h.p
    left_dominant,
};

std::string_view to_string(probe_region r) noexcept;

struct probe_options {
    int samples = 4000;
    std::uint64_t seed = 1;
    probe_region region = probe_region::full;
    /// VanishesLinearly when the least-squares fit ratio ~ C r leaves a relative residual below this.
    double linear_fit_tolerance = 0.1;
    /// Diverges when the ratio grows at least this much per decade of shrinking radius.
    double divergence_growth = 10;
};

struct probe_report {
    std::vector<double> radii;
    std::vector<double> ratios;
    probe_region region;
    probe_verdict verdict;
};

/// ratio(r) = max over sampled x with ||x - x0|| in [r/2, r] of
/// ||f(x) - f(x0) - L(x - x0)|| / ||x - x0||.
/// Radii must be positive and strictly decreasing.
probe_report differentiability_probe(const gfunction& f, const gelement& x0, const gfunction& L,
                                     std::span<const double> radii, const probe_options& opts = {});

/// One "radius ratio region" line per radius, with a header.
void write_probe_table(std::ostream& os, const probe_report& report);

} // namespace genival
