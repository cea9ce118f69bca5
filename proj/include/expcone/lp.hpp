#pragma once

#include <vector>

#include "expcone/model.hpp"

namespace expcone {

/// Dense desk-scale LP: minimize obj subject to rows and finite column
/// bounds. Intended envelope: a few hundred columns, a couple thousand rows.
struct LpModel {
    std::vector<double> lb, ub, obj;  // per column; bounds must be finite
    std::vector<LinearRow> rows;      // expressions over column indices

    int num_cols() const { return static_cast<int>(obj.size()); }
    int add_col(double lower, double upper, double cost) {
        lb.push_back(lower);
        ub.push_back(upper);
        obj.push_back(cost);
        return num_cols() - 1;
    }
};

enum class LpStatus { Optimal, Infeasible, IterLimit };

struct LpSolution {
    LpStatus status = LpStatus::IterLimit;
    std::vector<double> x;         // structural columns
    double objective = 0.0;
    std::vector<double> row_dual;  // y with reduced costs c - A^T y
    long iterations = 0;
};

/// Bounded-variable primal simplex, two phases with artificials, Dantzig
/// pricing with a Bland fallback after 1000 degenerate pivots. Feasibility
/// and optimality tolerances 1e-9.
LpSolution solve_lp(const LpModel& model);

}  // namespace expcone
