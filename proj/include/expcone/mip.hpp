#pragma once

#include <functional>
#include <string>
#include <vector>

#include "expcone/lp.hpp"
#include "expcone/model.hpp"

namespace expcone {

enum class MipStatus { Optimal, Infeasible, NodeLimit, TimeLimit, RoundLimit, Exported };

struct MipResult {
    MipStatus status = MipStatus::Infeasible;
    bool has_incumbent = false;
    std::vector<double> incumbent;
    double objective = 0.0;  // incumbent objective
    double bound = 0.0;      // proven lower bound (minimization)
    double rel_gap = 0.0;    // |objective - bound| / max(1e-10, |objective|)
    long nodes = 0;
    int cuts_added = 0;
};

struct MipParams {
    double tol_gap = 1e-4;       // relative optimality gap
    double cone_tol = 1e-6;      // cone-feasibility target at incumbents
    long node_limit = 2000000;
    double time_limit_s = 1e9;
    int round_limit = 200;       // cutting-plane outer rounds
    double seed_eps = 0.1;       // initial tangent-grid accuracy per cone
};

/// Called on integral node solutions; returns violated rows to add globally
/// (empty = accept the point as an incumbent candidate).
using CutOracle = std::function<std::vector<LinearRow>(const std::vector<double>&)>;

/// Best-bound branch and bound over the integer columns; branches on the
/// most fractional variable (lowest index on ties). Deterministic: identical
/// inputs give identical node counts and incumbents.
MipResult branch_and_bound(const LpModel& model, const std::vector<int>& integer_cols,
                           const CutOracle& oracle, const MipParams& params);

/// Naive outer loop: solve the current MILP to optimality, add gradient cuts
/// at every violated cone of the incumbent, repeat. The MILP starts from a
/// tangent grid at seed_eps accuracy on every cone's ratio interval.
MipResult cutting_plane(const ModelIR& model, const MipParams& params);

/// Branch and cut: same outer approximation, with gradient cuts generated
/// lazily (globally) at integral nodes of a single search tree.
MipResult branch_and_cut(const ModelIR& model, const MipParams& params);

enum class MiecpMethod { CuttingPlane, BranchAndCut, SocReformulate };

/// Dispatcher. The SOC path reformulates with the given scheme and exports a
/// CBF file (export_path) for an external MISOCP solver; no in-tree solve.
struct SolveOptions {
    MiecpMethod method = MiecpMethod::BranchAndCut;
    MipParams params;
    struct SchemeSpec* scheme = nullptr;  // SocReformulate only
    std::string export_path;              // SocReformulate only
};
MipResult solve_miecp(const ModelIR& model, const SolveOptions& options);

/// The MILP outer approximation shared by both polyhedral drivers: linear
/// rows plus seeded tangent cuts; integer columns reported separately.
struct OuterMilp {
    LpModel lp;
    std::vector<int> integer_cols;
    // Ratio interval per cone from interval arithmetic over variable bounds.
    std::vector<std::pair<double, double>> ratio_bounds;
};
OuterMilp build_outer_milp(const ModelIR& model, double seed_eps);

/// Gradient cut for cone `c` at tangent ratio u, composed with its affine
/// expressions.
LinearRow composed_cut(const ExpConeConstraint& c, double u);

}  // namespace expcone
