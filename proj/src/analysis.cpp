#include "genival/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "genival/embed.hpp"
#include "genival/error.hpp"
#include "genival/format.hpp"

namespace genival {

std::array<gelement, 4> ball_vertices(const gelement& x0, double eps)
{
    return {x0 + gelement(-eps, -eps), x0 + gelement(eps / 2, -eps / 2),
            x0 + gelement(eps, eps), x0 + gelement(-eps / 2, eps / 2)};
}

bool ball_contains(const gelement& x0, double eps, const gelement& x) noexcept
{
    return norm(x - x0) < eps;
}

gelement q2(const gelement& x) noexcept
{
    const interval k = canonical_interval(x);
    const double a = k.lo();
    const double b = k.hi();
    if (a >= 0) {
        return {a * a, b * b};
    }
    if (b <= 0) {
        return {b * b, a * a};
    }
    return {0, std::max(a * a, b * b)};
}

q2_comparison q2_vs_square(const gelement& x)
{
    const gelement q = q2(x);
    const gelement sq = bullet(x, x);
    const interval qi = canonical_interval(q);
    const interval si = canonical_interval(sq);
    return {q, sq, si.contains(qi), q == sq};
}

gelement poly_eval(std::span<const double> coeffs, const gelement& x) noexcept
{
    gelement sum;
    gelement power = gelement::point(1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0) {
            power = bullet(x, power);
        }
        sum = sum + coeffs[i] * power;
    }
    return sum;
}

ball_sampler::ball_sampler(std::uint64_t seed) : engine_(seed) {}

namespace {

// (u, v) = (change of length coordinate, change of center) -> offset in (p,q).
gelement offset_from_diamond(double u, double v) noexcept { return {v - u / 2, v + u / 2}; }

bool opposite_sign(const gelement& x0, const gelement& x) noexcept
{
    const sign_kind s0 = sign(x0).kind;
    const sign_kind s = sign(x).kind;
    return (s0 == sign_kind::positive && s == sign_kind::negative)
        || (s0 == sign_kind::negative && s == sign_kind::positive);
}

} // namespace

gelement ball_sampler::inside(const gelement& x0, double r)
{
    for (;;) {
        // Uniform in the square max(|s|,|t|) < 1, rotated onto |u| + |v| < 1.
        const double s = unit_(engine_);
        const double t = unit_(engine_);
        const gelement x = x0 + r * offset_from_diamond((s + t) / 2, (s - t) / 2);
        if (!opposite_sign(x0, x)) {
            return x;
        }
    }
}

gelement ball_sampler::shell_offset(double r)
{
    const double along = unit_(engine_);
    const double side = unit_(engine_);
    const double pick = unit_(engine_);
    const double magnitude = r * (0.75 + 0.25 * unit_(engine_));
    // Point on the boundary max(|s|,|t|) = 1 of the square.
    double s = along;
    double t = side < 0 ? -1.0 : 1.0;
    if (pick < 0) {
        std::swap(s, t);
    }
    return magnitude * offset_from_diamond((s + t) / 2, (s - t) / 2);
}

bool continuity_holds(const gfunction& f, const gelement& x0, double eps, double eta,
                      const continuity_options& opts)
{
    const gelement f0 = f(x0);
    auto within = [&](const gelement& x) { return norm(f(x) - f0) < eps; };

    // The extreme points of the (closed) ball, pulled just inside.
    for (const gelement& v : ball_vertices(x0, eta * (1 - 1e-9))) {
        if (!opposite_sign(x0, v) && !within(v)) {
            return false;
        }
    }
    ball_sampler sampler(opts.seed);
    for (int i = 0; i < opts.samples; ++i) {
        if (!within(sampler.inside(x0, eta))) {
            return false;
        }
    }
    return true;
}

double continuity_probe(const gfunction& f, const gelement& x0, double eps,
                        const continuity_options& opts)
{
    if (continuity_holds(f, x0, eps, eps, opts)) {
        return eps;
    }
    const double smallest = std::ldexp(eps, -20);
    double hi = eps;
    double lo = eps / 2;
    while (!continuity_holds(f, x0, eps, lo, opts)) {
        if (lo <= smallest) {
            throw error(errc::probe_failure,
                        "no eta >= eps 2^-20 keeps f within eps of f(x0)");
        }
        hi = lo;
        lo /= 2;
    }
    for (int i = 0; i < opts.bisection_steps; ++i) {
        const double mid = (lo + hi) / 2;
        if (continuity_holds(f, x0, eps, mid, opts)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

linear_map2 candidate_differential_q2(const gelement& x0)
{
    if (x0.p() > x0.q()) {
        throw error(errc::unsupported, "candidate differential needs a positive class, got "
                                           + to_string(x0));
    }
    const gelement col2 = bullet(x0, basis_x1);
    const gelement col1 = bullet(x0, basis_x2) - col2;
    return {2 * col1.p(), 2 * col2.p(), 2 * col1.q(), 2 * col2.q()};
}

std::string_view to_string(probe_verdict v) noexcept
{
    switch (v) {
    case probe_verdict::vanishes_linearly:
        return "vanishes-linearly";
    case probe_verdict::bounded_away:
        return "bounded-away";
    case probe_verdict::diverges:
        return "diverges";
    }
    return "?";
}

std::string_view to_string(probe_region r) noexcept
{
    switch (r) {
    case probe_region::full:
        return "full";
    case probe_region::lengthening:
        return "lengthening";
    case probe_region::left_dominant:
        return "left-dominant";
    }
    return "?";
}

namespace {

bool in_region(probe_region region, const gelement& h) noexcept
{
    switch (region) {
    case probe_region::full:
        return true;
    case probe_region::lengthening:
        return 0 < h.p() && h.p() <= h.q();
    case probe_region::left_dominant:
        return h.p() < 0 && 0 < h.q() && h.q() < -h.p();
    }
    return false;
}

probe_verdict classify(std::span<const double> radii, std::span<const double> ratios,
                       const probe_options& opts)
{
    const double largest = *std::max_element(ratios.begin(), ratios.end());
    if (largest <= 1e-12) {
        return probe_verdict::vanishes_linearly;
    }
    const std::size_t n = radii.size();
    if (n >= 2 && ratios.front() > 0) {
        const double decades = std::log10(radii.front() / radii.back());
        if (ratios.back() / ratios.front() >= std::pow(opts.divergence_growth, decades)) {
            return probe_verdict::diverges;
        }
    }
    // Least squares fit ratio ~ C r through the origin.
    double rr = 0, rq = 0, qq = 0;
    for (std::size_t i = 0; i < n; ++i) {
        rr += radii[i] * radii[i];
        rq += radii[i] * ratios[i];
        qq += ratios[i] * ratios[i];
    }
    const double c = rq / rr;
    double residual = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = ratios[i] - c * radii[i];
        residual += d * d;
    }
    if (c > 0 && std::sqrt(residual / qq) < opts.linear_fit_tolerance) {
        return probe_verdict::vanishes_linearly;
    }
    return probe_verdict::bounded_away;
}

} // namespace

probe_report differentiability_probe(const gfunction& f, const gelement& x0, const gfunction& L,
                                     std::span<const double> radii, const probe_options& opts)
{
    if (radii.empty()) {
        throw error(errc::unsupported, "differentiability probe needs at least one radius");
    }
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0) || (i > 0 && !(radii[i] < radii[i - 1]))) {
            throw error(errc::unsupported, "probe radii must be positive and strictly decreasing");
        }
    }
    const gelement f0 = f(x0);
    probe_report report{{radii.begin(), radii.end()}, {}, opts.region, {}};
    for (double r : radii) {
        // Same seed per radius: the offsets at different radii are rescaled copies.
        ball_sampler sampler(opts.seed);
        double worst = 0;
        int accepted = 0;
        for (long attempt = 0; accepted < opts.samples && attempt < 64L * opts.samples; ++attempt) {
            const gelement h = sampler.shell_offset(r);
            const gelement x = x0 + h;
            if (!in_region(opts.region, h) || opposite_sign(x0, x)) {
                continue;
            }
            ++accepted;
            const double ratio = norm(f(x) - f0 - L(h)) / norm(h);
            worst = std::max(worst, ratio);
        }
        if (accepted == 0) {
            throw error(errc::probe_failure, "no samples fall in the probe region");
        }
        report.ratios.push_back(worst);
    }
    report.verdict = classify(report.radii, report.ratios, opts);
    return report;
}

void write_probe_table(std::ostream& os, const probe_report& report)
{
    os << "radius ratio region\n";
    for (std::size_t i = 0; i < report.radii.size(); ++i) {
        os << format_real(report.radii[i]) << ' ' << format_real(report.ratios[i]) << ' '
           << to_string(report.region) << '\n';
    }
}

} // namespace genival
