// One line per criterion: "PASS <n> <name>: <detail>" or "FAIL ...".
// --only N runs a single criterion; the exit status is nonzero if any ran criterion fails.

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "genival/a4.hpp"
#include "genival/analysis.hpp"
#include "genival/core.hpp"
#include "genival/division.hpp"
#include "genival/embed.hpp"
#include "genival/error.hpp"
#include "genival/format.hpp"
#include "genival/lp.hpp"
#include "../support/lp_oracle.hpp"
#include "../support/testing.hpp"

using namespace genival;
using genival::testing::close;

namespace {

struct verdict {
    bool pass;
    std::string detail;
};

std::string num(double v) { return format_real(v); }

verdict table_fidelity()
{
    const a4 zero{};
    const a4 basis[4] = {e1, e2, e3, e4};
    const a4 table[4][4] = {
        {e1, zero, zero, e4},
        {zero, e2, e3, zero},
        {zero, e3, e2, zero},
        {e4, zero, zero, e1},
    };
    int mismatches = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            mismatches += !(a4_mul(basis[i], basis[j]) == table[i][j]);
        }
    }
    return {mismatches == 0, std::to_string(16 - mismatches) + "/16 basis products match"};
}

verdict inverse_formula()
{
    genival::testing::rng r(1001);
    int tested = 0, violations = 0;
    while (tested < 10000) {
        const a4 x = r.algebra();
        if (!is_invertible(x)) {
            continue;
        }
        ++tested;
        const a4 y = inverse(x);
        const a4 p = a4_mul(x, y);
        // relative to the size of the two products summed in each coordinate
        const double scale[4] = {
            std::abs(x[0] * y[0]) + std::abs(x[3] * y[3]),
            std::abs(x[1] * y[1]) + std::abs(x[2] * y[2]),
            std::abs(x[2] * y[1]) + std::abs(x[1] * y[2]),
            std::abs(x[3] * y[0]) + std::abs(x[0] * y[3]),
        };
        for (std::size_t i = 0; i < 4; ++i) {
            if (std::abs(p[i] - a4_unit()[i]) > 1e-12 * std::max(1.0, scale[i])) {
                ++violations;
                break;
            }
        }
    }
    const std::string rendered = to_string(inverse(phi_bar({1, 2})));
    const gelement g = g_inverse({1, 2});
    const bool example = rendered == "(1, 0.5, 0, 0)" && g == gelement(1, 0.5);
    return {violations == 0 && example, std::to_string(violations) + " violations in " + std::to_string(tested)
                                            + "; inverse of phi_bar([1,2]) = " + rendered + ", g_inverse = "
                                            + "(" + num(g.p()) + "," + num(g.q()) + ")"};
}

verdict product_dichotomy()
{
    genival::testing::rng r(1002);
    int equal_bad = 0, incl_bad = 0, equal_n = 0, incl_n = 0;
    for (int i = 0; i < 10000; ++i) {
        const interval x = r.proper(), y = r.proper();
        const interval oracle = mul_classical(x, y);
        const gelement b = bullet(gelement::from_proper(x), gelement::from_proper(y));
        if (straddles_zero(x) && straddles_zero(y)) {
            ++incl_n;
            const interval env(x.lo() * y.hi() + x.hi() * y.lo(), x.hi() * y.hi() + x.lo() * y.lo());
            incl_bad += !(env.contains(oracle) && b == gelement::from_proper(env) && mul_envelope(x, y) == env);
        } else {
            ++equal_n;
            equal_bad += !close(b, gelement::from_proper(oracle), 1e-12);
        }
    }
    return {equal_bad == 0 && incl_bad == 0,
            "equality branch " + std::to_string(equal_bad) + "/" + std::to_string(equal_n)
                + " violations, inclusion branch " + std::to_string(incl_bad) + "/" + std::to_string(incl_n)};
}

verdict straddle_example()
{
    const division_result d = div_auto({-2, 3}, {-4, 2});
    const bool ok = d.kind == division_kind::exact_straddle && close(d.quotient, {-8.0 / 12, 2.0 / 12}, 1e-12);
    return {ok, "kind " + std::string(to_string(d.kind)) + ", quotient " + to_string(d.quotient)};
}

verdict euclid_example()
{
    const division_result d = euclid_div({1, 3}, {1, 4});
    const gelement back = bullet({1, 4}, d.quotient) + d.remainder;
    const bool values = close(d.quotient, gelement::point(2.0 / 3), 1e-12)
                     && close(d.remainder, gelement::point(1.0 / 3), 1e-12) && close(back, {1, 3}, 1e-12);
    // grid over point remainders r: y - r must equal x * z for a nonnegative class z
    double smallest = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 1000; ++k) {
        const double r = k * 1e-3;
        const double z1 = (1 - r) / 1, z2 = (3 - r) / 4;
        if (z1 >= -1e-12 && z1 <= z2 + 1e-12) {
            smallest = r;
            break;
        }
    }
    const bool minimal = smallest >= center(d.remainder) - 1e-3;
    return {values && minimal, "Z = " + to_string(d.quotient) + ", R = " + to_string(d.remainder)
                                   + ", reconstruction " + to_string(back) + ", smallest grid remainder "
                                   + num(smallest)};
}

verdict norm_and_vector_laws()
{
    genival::testing::rng r(1006);
    int norm_bad = 0, vec_bad = 0;
    for (int i = 0; i < 10000; ++i) {
        const gelement x = r.element(), y = r.element();
        const double l = r.uniform(-5, 5);
        norm_bad += !(norm(x) > 0 && norm(gelement()) == 0);
        norm_bad += !close(norm(l * x), std::abs(l) * norm(x), 1e-12);
        norm_bad += !(norm(x + y) <= (norm(x) + norm(y)) * (1 + 1e-12));
    }
    for (int i = 0; i < 10000; ++i) {
        const double a = r.uniform(-5, 5), b = r.uniform(-5, 5);
        const gelement x = r.element(), y = r.element();
        vec_bad += !close((a + b) * x, a * x + b * x, 1e-12);
        vec_bad += !close(a * (x + y), a * x + a * y, 1e-12);
        vec_bad += !close((a * b) * x, a * (b * x), 1e-12);
        vec_bad += !(a * g_neg(x) == g_neg(a * x));
        vec_bad += !((-a) * x == g_neg(a * x));
    }
    return {norm_bad == 0 && vec_bad == 0,
            std::to_string(norm_bad) + " norm and " + std::to_string(vec_bad) + " vector-space violations"};
}

gelement shaped(genival::testing::rng& r, int shape)
{
    const double a = r.uniform(0, 5), b = r.uniform(0, 5);
    switch (shape) {
    case 0: return {std::min(a, b), std::max(a, b)};
    case 1: return {-a, b};
    default: return {-std::max(a, b), -std::min(a, b)};
    }
}

verdict monotony()
{
    genival::testing::rng r(1007);
    int tested = 0, violations = 0;
    while (tested < 10000) {
        const gelement x1 = shaped(r, r.integer(0, 2)), x2 = shaped(r, r.integer(0, 2)), z = shaped(r, r.integer(0, 2));
        if (a4_leq(phi_bar(x1), phi_bar(x2)) != a4_order::less_eq) {
            continue;
        }
        ++tested;
        violations += a4_leq(phi_bar(bullet(x1, z)), phi_bar(bullet(x2, z))) != a4_order::less_eq;
    }
    return {violations == 0, std::to_string(violations) + " violations in " + std::to_string(tested) + " triples"};
}

verdict submultiplicativity()
{
    genival::testing::rng r(1008);
    int sub_bad = 0, incl_bad = 0;
    for (int i = 0; i < 10000; ++i) {
        const gelement x = r.positive_class(), y = r.positive_class();
        sub_bad += !(norm(bullet(x, y)) <= norm(x) * norm(y) + 1e-9);
        const interval a = r.proper();
        const interval b(a.lo() - r.uniform(0, 5), a.hi() + r.uniform(0, 5));
        incl_bad += !(norm(gelement::from_proper(a)) <= norm(gelement::from_proper(b)) + 1e-9);
    }
    return {sub_bad == 0 && incl_bad == 0, std::to_string(sub_bad) + " submultiplicativity and "
                                               + std::to_string(incl_bad) + " inclusion violations"};
}

verdict continuity()
{
    continuity_options opts;
    opts.samples = 10000;
    const bool q2_ok = continuity_holds(q2, {1, 2}, 0.5, 1.0 / 16, opts);
    const double eta = continuity_probe(q2, {1, 2}, 0.5, opts);
    const gfunction identity = [](const gelement& x) { return x; };
    const double id_eta = continuity_probe(identity, {1, 2}, 0.5, opts);
    return {q2_ok && eta >= 1.0 / 16 && id_eta == 0.5,
            std::string("q2 accepts eta = 1/16: ") + (q2_ok ? "yes" : "no") + " (largest found " + num(eta)
                + "), identity eta = " + num(id_eta)};
}

verdict non_differentiability()
{
    const gelement x0{1, 2};
    const gfunction l = [x0](const gelement& h) { return 2 * bullet(x0, h); };
    const std::vector<double> radii{1e-1, 1e-2, 1e-3, 1e-4};
    const probe_report full = differentiability_probe(q2, x0, l, radii);
    probe_options first;
    first.region = probe_region::lengthening;
    const probe_report region = differentiability_probe(q2, x0, l, radii, first);
    const double at_1e3 = full.ratios[2];
    const bool ok = full.verdict == probe_verdict::diverges && at_1e3 > 10
                 && region.verdict == probe_verdict::vanishes_linearly;
    std::string ratios;
    for (double q : full.ratios) {
        ratios += (ratios.empty() ? "" : ",") + num(q);
    }
    return {ok, "full region " + std::string(to_string(full.verdict)) + " (ratios " + ratios + ", at 1e-3 "
                    + num(at_1e3) + "); first region " + std::string(to_string(region.verdict))};
}

lp::problem random_lp(genival::testing::rng& r, bool points)
{
    const int n = r.integer(1, 5), p = r.integer(1, 5);
    lp::problem pb;
    pb.c.resize(n);
    for (double& c : pb.c) {
        c = r.integer(-2, 8);
    }
    for (int i = 0; i < p; ++i) {
        std::vector<double> row(n);
        for (double& v : row) {
            v = r.integer(-3, 6);
        }
        pb.a.push_back(row);
        const double lo = r.integer(0, 20);
        pb.b.push_back(points ? gelement::point(lo) : gelement(lo, lo + r.uniform(0, 10)));
    }
    return pb;
}

verdict interval_simplex()
{
    genival::testing::rng r(1011);
    int point_bad = 0;
    for (int i = 0; i < 50; ++i) {
        const lp::problem pb = random_lp(r, true);
        std::vector<double> b;
        for (const gelement& g : pb.b) {
            b.push_back(g.p());
        }
        const auto oracle = genival::testing::classical_simplex(pb.a, b, pb.c);
        const lp::outcome o = lp::solve(pb);
        if (!oracle.bounded) {
            point_bad += !std::holds_alternative<lp::unbounded>(o);
        } else {
            const auto* opt = std::get_if<lp::optimal>(&o);
            point_bad += !(opt && close(opt->objective.p(), oracle.value, 1e-9) && length(opt->objective) == 0);
        }
    }
    int pivots = 0, positivity_bad = 0, errors = 0;
    for (int i = 0; i < 1000; ++i) {
        lp::solve_options opts;
        opts.on_pivot = [&](const lp::pivot&, const lp::tableau& t) {
            ++pivots;
            for (const gelement& g : t.rhs) {
                positivity_bad += !lp::rhs_admissible(g, 1e-9 * std::max(1.0, norm(g)));
            }
        };
        try {
            lp::solve(random_lp(r, false), opts);
        } catch (const error&) {
            ++errors;
        }
    }
    const lp::outcome hand = lp::solve(lp::problem{{{1}}, {{2, 3}}, {3}});
    const auto* h = std::get_if<lp::optimal>(&hand);
    const bool hand_ok = h && h->objective == gelement(6, 9);
    return {point_bad == 0 && positivity_bad == 0 && errors == 0 && hand_ok,
            std::to_string(point_bad) + "/50 point LPs disagree with the classical oracle; "
                + std::to_string(positivity_bad) + " positivity violations over " + std::to_string(pivots)
                + " pivots (" + std::to_string(errors) + " errors); hand example objective "
                + (h ? to_string(h->objective) : std::string("none"))};
}

verdict subdistributivity()
{
    const gelement x{-1, 2}, y{3, 4}, z{-1, 1};
    const gelement lhs = bullet(x + y, z), rhs = bullet(x, z) + bullet(y, z);
    const bool example = lhs == gelement(-6, 6) && rhs == gelement(-7, 7) && rhs.p() < lhs.p() && lhs.q() < rhs.q();
    genival::testing::rng r(1012);
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
        const gelement a = gelement::from_proper(r.proper()), b = gelement::from_proper(r.proper()),
                       c = gelement::from_proper(r.proper());
        const gelement left = bullet(a + b, c), right = bullet(a, c) + bullet(b, c);
        violations += !(left.p() >= right.p() - 1e-12 * std::max(1.0, std::abs(right.p()))
                        && left.q() <= right.q() + 1e-12 * std::max(1.0, std::abs(right.q())));
    }
    return {example && violations == 0, "(x+y)*z = " + to_string(lhs) + ", x*z + y*z = " + to_string(rhs) + "; "
                                            + std::to_string(violations) + " inclusion violations in 10000"};
}

struct criterion {
    const char* name;
    std::function<verdict()> run;
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance checks"};
    int only = 0;
    app.add_option("--only", only, "Run a single criterion (1-12)")->check(CLI::Range(1, 12));
    CLI11_PARSE(app, argc, argv);

    const std::vector<criterion> criteria{
        {"algebra multiplication table", table_fidelity},
        {"inverse formula", inverse_formula},
        {"product dichotomy", product_dichotomy},
        {"straddle division example", straddle_example},
        {"euclidean division example", euclid_example},
        {"norm axioms and vector-space laws", norm_and_vector_laws},
        {"monotony of the product", monotony},
        {"submultiplicativity and inclusion monotonicity", submultiplicativity},
        {"continuity of q2", continuity},
        {"non-differentiability of q2", non_differentiability},
        {"interval simplex", interval_simplex},
        {"subdistributivity", subdistributivity},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<int>(i + 1) != only) {
            continue;
        }
        verdict v;
        try {
            v = criteria[i].run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failures += !v.pass;
        std::cout << (v.pass ? "PASS " : "FAIL ") << i + 1 << ' ' << criteria[i].name << ": " << v.detail << '\n';
    }
    return failures == 0 ? 0 : 1;
}
