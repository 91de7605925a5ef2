#pragma once

#include <optional>

#include "latgrade/linalg.hpp"

namespace latgrade {

/// Equalities and weak (>=) inequalities over free rational variables.
struct LinearSystem {
    std::size_t variables = 0;
    std::vector<RatVector> eq_rows;
    RatVector eq_rhs;
    std::vector<RatVector> ge_rows;
    RatVector ge_rhs;

    explicit LinearSystem(std::size_t vars = 0) : variables(vars) {}

    void add_equality(RatVector row, Rational rhs);
    void add_inequality(RatVector row, Rational rhs);
    /// x_var >= bound
    void add_lower_bound(std::size_t var, Rational bound);
};

bool satisfies(const LinearSystem& sys, const RatVector& x);

/// Exact feasibility by two-phase simplex (phase one only) with Bland's rule.
/// A returned point always satisfies every constraint exactly.
std::optional<RatVector> lp_feasible(const LinearSystem& sys);

/// Number of lp_feasible calls made by this thread; used for budgets.
std::size_t lp_call_count();

} // namespace latgrade
