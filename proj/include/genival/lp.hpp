#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "genival/core.hpp"

namespace genival::lp {

enum class constraint_form { inequality, equality };

/// maximize c.x subject to A x (<= or =) B, x >= 0, where every B_i is a
/// positive class or a nonnegative point.
struct problem {
    std::vector<std::vector<double>> a; // p rows, n columns
    std::vector<gelement> b;
    std::vector<double> c;
    constraint_form form = constraint_form::inequality;
    /// Equality form only: for each row, the column holding that row's unit vector.
    std::vector<std::size_t> basis;
};

struct tableau {
    std::vector<std::vector<double>> coeffs;
    std::vector<gelement> rhs;
    std::vector<double> reduced_costs;
    gelement objective;
    std::vector<std::size_t> basis;
    std::size_t n_original = 0;
    int iterations = 0;
};

/// Slack columns are appended for the inequality form. Throws
/// inconsistent_dimensions, negative_rhs or invalid_basis.
tableau make_tableau(const problem& pb);

struct pivot {
    std::size_t row;
    std::size_t col;
    friend bool operator==(const pivot&, const pivot&) = default;
};
struct no_positive_cost {};
struct unbounded_column {
    std::size_t col;
};

using pivot_choice = std::variant<pivot, no_positive_cost, unbounded_column>;

/// Entering column: largest positive reduced cost (smallest index on ties).
/// Leaving row: smallest l(B_j)/a_jk over a_jk > 0, then c(B_j)/a_jk, then row index.
pivot_choice choose_pivot(const tableau& t, double tol = 0);

/// Rows j != row become a_ik l_j - a_jk l_i (right-hand sides a_ik B_j - a_jk B_i),
/// then every row is divided by a_ik so the basis stays an identity. Throws
/// positivity_lost if a right-hand side turns negative beyond tol.
void pivot_step(tableau& t, std::size_t row, std::size_t col, double tol = 1e-9);

struct optimal {
    std::vector<gelement> x;
    gelement objective;
    int pivots;
    std::vector<std::size_t> basis;
};
struct unbounded {
    std::size_t column;
};
struct iteration_cap {};

using outcome = std::variant<optimal, unbounded, iteration_cap>;

struct solve_options {
    /// 0 selects 10 (n + p).
    int max_iters = 0;
    double tol = 1e-9;
    /// Called with every accepted pivot and the tableau after the step.
    std::function<void(const pivot&, const tableau&)> on_pivot;
};

outcome solve(const problem& pb, const solve_options& opts = {});

/// true when every entry is a positive class or a nonnegative point (within tol).
bool rhs_admissible(const gelement& b, double tol = 0) noexcept;

} // namespace genival::lp
