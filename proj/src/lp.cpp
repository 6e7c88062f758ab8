#include "genival/lp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "genival/error.hpp"
#include "genival/format.hpp"

namespace genival::lp {

bool rhs_admissible(const gelement& b, double tol) noexcept
{
    const double len = b.q() - b.p();
    if (len > tol) {
        return true;
    }
    // point (or a class within tol of one)
    return len >= -tol && b.p() >= -tol;
}

tableau make_tableau(const problem& pb)
{
    const std::size_t p = pb.a.size();
    const std::size_t n = pb.c.size();
    if (pb.b.size() != p) {
        throw error(errc::inconsistent_dimensions, "A has " + std::to_string(p)
                                                       + " rows but B has "
                                                       + std::to_string(pb.b.size()) + " entries");
    }
    for (const auto& row : pb.a) {
        if (row.size() != n) {
            throw error(errc::inconsistent_dimensions,
                        "every row of A needs " + std::to_string(n) + " coefficients");
        }
    }
    for (std::size_t i = 0; i < p; ++i) {
        if (!rhs_admissible(pb.b[i])) {
            throw error(errc::negative_rhs, "right-hand side " + std::to_string(i) + " = "
                                                + to_string(pb.b[i]) + " is not >= 0");
        }
    }

    tableau t;
    t.n_original = n;
    t.rhs = pb.b;
    if (pb.form == constraint_form::inequality) {
        t.coeffs.assign(p, std::vector<double>(n + p, 0.0));
        for (std::size_t i = 0; i < p; ++i) {
            std::copy(pb.a[i].begin(), pb.a[i].end(), t.coeffs[i].begin());
            t.coeffs[i][n + i] = 1;
            t.basis.push_back(n + i);
        }
        t.reduced_costs = pb.c;
        t.reduced_costs.resize(n + p, 0.0);
        return t;
    }

    if (pb.basis.size() != p) {
        throw error(errc::invalid_basis, "equality form needs one basis column per row");
    }
    for (std::size_t i = 0; i < p; ++i) {
        const std::size_t col = pb.basis[i];
        if (col >= n) {
            throw error(errc::invalid_basis, "basis column out of range");
        }
        for (std::size_t r = 0; r < p; ++r) {
            if (pb.a[r][col] != (r == i ? 1.0 : 0.0)) {
                throw error(errc::invalid_basis, "basis column " + std::to_string(col)
                                                     + " is not a unit vector for row "
                                                     + std::to_string(i));
            }
        }
    }
    t.coeffs = pb.a;
    t.basis = pb.basis;
    t.reduced_costs = pb.c;
    // Price out the basic columns.
    for (std::size_t i = 0; i < p; ++i) {
        const double cb = pb.c[pb.basis[i]];
        for (std::size_t j = 0; j < n; ++j) {
            t.reduced_costs[j] -= cb * t.coeffs[i][j];
        }
        t.objective = t.objective + cb * t.rhs[i];
    }
    return t;
}

pivot_choice choose_pivot(const tableau& t, double tol)
{
    std::size_t col = 0;
    double best = tol;
    bool found = false;
    for (std::size_t j = 0; j < t.reduced_costs.size(); ++j) {
        if (t.reduced_costs[j] > best) {
            best = t.reduced_costs[j];
            col = j;
            found = true;
        }
    }
    if (!found) {
        return no_positive_cost{};
    }

    std::optional<std::size_t> row;
    double best_len = 0;
    double best_mid = 0;
    for (std::size_t i = 0; i < t.coeffs.size(); ++i) {
        const double a = t.coeffs[i][col];
        if (!(a > tol)) {
            continue;
        }
        const double len = length(t.rhs[i]) / a;
        const double mid = center(t.rhs[i]) / a;
        if (!row || len < best_len || (len == best_len && mid < best_mid)) {
            row = i;
            best_len = len;
            best_mid = mid;
        }
    }
    if (!row) {
        return unbounded_column{col};
    }
    return pivot{*row, col};
}

void pivot_step(tableau& t, std::size_t row, std::size_t col, double tol)
{
    const double pivot_value = t.coeffs[row][col];
    if (!(pivot_value > 0)) {
        throw error(errc::unsupported, "pivot entry must be positive");
    }
    const std::vector<double> pivot_row = t.coeffs[row];
    const gelement pivot_rhs = t.rhs[row];

    for (std::size_t j = 0; j < t.coeffs.size(); ++j) {
        if (j == row) {
            continue;
        }
        const double a_jk = t.coeffs[j][col];
        if (a_jk == 0) {
            continue;
        }
        for (std::size_t c = 0; c < pivot_row.size(); ++c) {
            t.coeffs[j][c] = (pivot_value * t.coeffs[j][c] - a_jk * pivot_row[c]) / pivot_value;
        }
        t.coeffs[j][col] = 0;
        t.rhs[j] = (1 / pivot_value) * (pivot_value * t.rhs[j] - a_jk * pivot_rhs);
        if (!rhs_admissible(t.rhs[j], tol * std::max(1.0, norm(t.rhs[j])))) {
            throw error(errc::positivity_lost, "right-hand side " + std::to_string(j)
                                                   + " became " + to_string(t.rhs[j]));
        }
    }
    for (double& v : t.coeffs[row]) {
        v /= pivot_value;
    }
    t.coeffs[row][col] = 1;
    t.rhs[row] = (1 / pivot_value) * pivot_rhs;

    const double d_k = t.reduced_costs[col];
    for (std::size_t c = 0; c < t.reduced_costs.size(); ++c) {
        t.reduced_costs[c] -= d_k * t.coeffs[row][c];
    }
    t.reduced_costs[col] = 0;
    t.objective = t.objective + d_k * t.rhs[row];
    t.basis[row] = col;
    ++t.iterations;
}

outcome solve(const problem& pb, const solve_options& opts)
{
    tableau t = make_tableau(pb);
    const int cap = opts.max_iters > 0
                      ? opts.max_iters
                      : 10 * static_cast<int>(t.reduced_costs.size() + t.coeffs.size());
    while (t.iterations < cap) {
        const pivot_choice choice = choose_pivot(t, opts.tol);
        if (std::holds_alternative<no_positive_cost>(choice)) {
            optimal out;
            out.x.assign(t.n_original, gelement{});
            for (std::size_t i = 0; i < t.basis.size(); ++i) {
                if (t.basis[i] < t.n_original) {
                    out.x[t.basis[i]] = t.rhs[i];
                }
            }
            out.objective = t.objective;
            out.pivots = t.iterations;
            out.basis = t.basis;
            return out;
        }
        if (const auto* u = std::get_if<unbounded_column>(&choice)) {
            return unbounded{u->col};
        }
        const pivot pv = std::get<pivot>(choice);
        pivot_step(t, pv.row, pv.col, opts.tol);
        if (opts.on_pivot) {
            opts.on_pivot(pv, t);
        }
    }
    return iteration_cap{};
}

} // namespace genival::lp
