// Exact rational linear feasibility: two-phase simplex with Bland's rule,
// Farkas certificates on infeasibility, and enumeration of basic feasible
// points by walking the basis graph.
#pragma once

#include <functional>
#include <vector>

#include "ucat/rational.hpp"

namespace ucat {

struct LinRow {
    std::vector<Rat> coef;  // dense, one per variable
    Rat rhs;
    bool eq;  // true: == rhs, false: <= rhs
};

struct LinearSystem {
    int num_vars = 0;
    std::vector<LinRow> rows;
    void add_eq(std::vector<Rat> coef, Rat rhs) { rows.push_back({std::move(coef), std::move(rhs), true}); }
    void add_le(std::vector<Rat> coef, Rat rhs) { rows.push_back({std::move(coef), std::move(rhs), false}); }
};

struct LpResult {
    bool feasible = false;
    std::vector<Rat> point;  // num_vars values, when feasible
    // Multipliers y per row when infeasible: y free on equalities, y <= 0 on
    // inequalities, sum_i y_i a_ij <= 0 for every variable j, y.b > 0.
    std::vector<Rat> farkas;
    long pivots = 0;
};

// Deterministic; throws budget_error("lp-pivot-cap") past pivot_cap.
LpResult lp_feasible(const LinearSystem& system, long pivot_cap = 1000000);

struct VertexEnumStats {
    bool complete = false;      // basis graph exhausted within the caps
    bool stopped_early = false; // visitor requested stop
    long bases_visited = 0;
    long points_visited = 0;
};

// Visits every distinct basic feasible point of {rows, x >= 0}, starting
// from a phase-1 point. The visitor returns false to stop. Requires the
// feasible region of the system to be bounded.
VertexEnumStats for_each_basic_feasible_point(
    const LinearSystem& system, long max_bases, long pivot_cap,
    const std::function<bool(const std::vector<Rat>&)>& visit);

}  // namespace ucat
