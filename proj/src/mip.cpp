#include "expcone/mip.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "expcone/bench_io.hpp"
#include "expcone/cone_lift.hpp"
#include "expcone/outer_poly.hpp"

namespace expcone {

namespace {

constexpr double kIntTol = 1e-6;
constexpr double kRatioFloor = 1e-9;
constexpr double kRatioCap = 1e12;

double rel_gap_of(double obj, double bound) {
    return std::abs(obj - bound) / std::max(1e-10, std::abs(obj));
}

std::pair<double, double> expr_range(const AffineExpr& e, const std::vector<Variable>& vars) {
    double lo = e.constant(), hi = e.constant();
    for (const auto& [id, c] : e.coefs()) {
        const Variable& v = vars[static_cast<size_t>(id)];
        lo += std::min(c * v.lower, c * v.upper);
        hi += std::max(c * v.lower, c * v.upper);
    }
    return {lo, hi};
}

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

}  // namespace

LinearRow composed_cut(const ExpConeConstraint& c, double u) {
    LinearCut cut = gradient_cut(u, 1.0);
    AffineExpr expr = cut.a1 * c.e1 + cut.a2 * c.e2 + cut.a3 * c.e3;
    return {expr, RowSense::GE, 0.0};
}

OuterMilp build_outer_milp(const ModelIR& model, double seed_eps) {
    OuterMilp out;
    for (const Variable& v : model.variables) {
        if (!std::isfinite(v.lower) || !std::isfinite(v.upper))
            throw std::invalid_argument("polyhedral solve: all variables need finite bounds");
        out.lp.add_col(v.lower, v.upper, 0.0);
        if (v.kind != VarKind::Continuous) out.integer_cols.push_back(v.id);
    }
    for (const auto& [id, c] : model.objective.coefs()) out.lp.obj[static_cast<size_t>(id)] = c;
    out.lp.rows = model.linear_rows;

    const double ratio = 1.0 + std::sqrt(8.0 * std::max(seed_eps, 1e-4));
    for (const ExpConeConstraint& cone : model.cones) {
        auto [a1lo, a1hi] = expr_range(cone.e1, model.variables);
        auto [a2lo, a2hi] = expr_range(cone.e2, model.variables);
        double ulo = std::clamp(std::max(a1lo, kRatioFloor) / std::max(a2hi, kRatioFloor),
                                kRatioFloor, kRatioCap);
        double uhi = std::clamp(std::max(a1hi, kRatioFloor) / std::max(a2lo, kRatioFloor),
                                kRatioFloor, kRatioCap);
        if (uhi < ulo) std::swap(ulo, uhi);
        out.ratio_bounds.push_back({ulo, uhi});
        if (uhi / ulo < 1.0 + 1e-12) {
            out.lp.rows.push_back(composed_cut(cone, std::sqrt(ulo * uhi)));
            continue;
        }
        double u = ulo;
        int guard = 0;
        while (u < uhi && guard++ < 400) {
            out.lp.rows.push_back(composed_cut(cone, u));
            u *= ratio;
        }
        out.lp.rows.push_back(composed_cut(cone, uhi));
    }
    return out;
}

MipResult branch_and_bound(const LpModel& model, const std::vector<int>& integer_cols,
                           const CutOracle& oracle, const MipParams& params) {
    struct Node {
        double bound;
        long id;
        std::vector<double> lb, ub;
    };
    auto cmp = [](const Node& a, const Node& b) {
        return a.bound > b.bound || (a.bound == b.bound && a.id > b.id);
    };
    std::priority_queue<Node, std::vector<Node>, decltype(cmp)> open(cmp);

    Clock clock;
    MipResult res;
    LpModel work = model;  // rows grow with globally valid lazy cuts

    long next_id = 0;
    open.push({-kInf, next_id++, model.lb, model.ub});
    double lower = -kInf;
    double inc_obj = kInf;

    while (!open.empty()) {
        Node node = std::move(const_cast<Node&>(open.top()));
        open.pop();
        lower = std::max(lower, node.bound);
        if (res.has_incumbent && std::isfinite(lower) &&
            rel_gap_of(inc_obj, lower) <= params.tol_gap)
            break;
        if (res.nodes >= params.node_limit) {
            res.status = MipStatus::NodeLimit;
            res.bound = lower;
            res.rel_gap = res.has_incumbent ? rel_gap_of(inc_obj, lower) : kInf;
            return res;
        }
        if (clock.seconds() > params.time_limit_s) {
            res.status = MipStatus::TimeLimit;
            res.bound = lower;
            res.rel_gap = res.has_incumbent ? rel_gap_of(inc_obj, lower) : kInf;
            return res;
        }

        work.lb = node.lb;
        work.ub = node.ub;
        for (int resolve = 0; resolve < 1000; ++resolve) {
            LpSolution sol = solve_lp(work);
            ++res.nodes;
            if (sol.status == LpStatus::Infeasible) break;
            if (sol.status != LpStatus::Optimal)
                throw std::runtime_error("branch_and_bound: LP breakdown");
            if (res.has_incumbent &&
                sol.objective >= inc_obj - params.tol_gap * std::max(1e-10, std::abs(inc_obj)))
                break;  // cannot improve

            int branch_col = -1;
            double best_frac = kIntTol;
            for (int col : integer_cols) {
                double v = sol.x[static_cast<size_t>(col)];
                double frac = std::abs(v - std::round(v));
                if (frac > best_frac) {
                    best_frac = frac;
                    branch_col = col;
                }
            }
            if (branch_col >= 0) {
                double v = sol.x[static_cast<size_t>(branch_col)];
                Node down{sol.objective, next_id++, node.lb, node.ub};
                down.ub[static_cast<size_t>(branch_col)] = std::floor(v);
                Node up{sol.objective, next_id++, node.lb, node.ub};
                up.lb[static_cast<size_t>(branch_col)] = std::ceil(v);
                open.push(std::move(down));
                open.push(std::move(up));
                break;
            }
            // integral: let the oracle veto with new global cuts
            std::vector<LinearRow> cuts;
            if (oracle) cuts = oracle(sol.x);
            if (!cuts.empty()) {
                for (auto& c : cuts) work.rows.push_back(std::move(c));
                res.cuts_added += static_cast<int>(cuts.size());
                continue;
            }
            if (sol.objective < inc_obj) {
                inc_obj = sol.objective;
                res.incumbent = sol.x;
                res.has_incumbent = true;
            }
            break;
        }
    }

    if (open.empty()) lower = res.has_incumbent ? std::max(lower, inc_obj) : lower;
    if (!res.has_incumbent) {
        res.status = MipStatus::Infeasible;
        res.bound = lower;
        res.rel_gap = kInf;
        return res;
    }
    res.status = MipStatus::Optimal;
    res.objective = inc_obj;
    res.bound = open.empty() ? inc_obj : lower;
    res.rel_gap = rel_gap_of(res.objective, res.bound);
    return res;
}

namespace {

// Tangent anchor for a violated cone point, clamped into the cone's ratio
// interval so cut coefficients stay bounded.
double separation_anchor(double x2v, double x3v, std::pair<double, double> bounds) {
    double w = x3v / std::max(x2v, kRatioFloor);
    double u = w > 60.0 ? bounds.second : std::exp(std::max(w, -700.0));
    return std::clamp(u, bounds.first, bounds.second);
}

double safe_violation(double x1v, double x2v, double x3v) {
    return cone_violation(std::max(x1v, 1e-300), std::max(x2v, kRatioFloor), x3v);
}

struct CutHistory {
    std::vector<std::vector<double>> anchors;  // per cone

    bool add(size_t cone, double u) {
        for (double prev : anchors[cone])
            if (std::abs(std::log(u / prev)) < 1e-12) return false;
        anchors[cone].push_back(u);
        return true;
    }
};

}  // namespace

MipResult cutting_plane(const ModelIR& model, const MipParams& params) {
    OuterMilp om = build_outer_milp(model, params.seed_eps);
    const double obj_const = model.objective.constant();
    CutHistory history;
    history.anchors.resize(model.cones.size());

    Clock clock;
    MipResult agg;
    MipParams inner = params;
    for (int round = 0; round < params.round_limit; ++round) {
        inner.time_limit_s = params.time_limit_s - clock.seconds();
        if (inner.time_limit_s <= 0.0) {
            agg.status = MipStatus::TimeLimit;
            return agg;
        }
        MipResult res = branch_and_bound(om.lp, om.integer_cols, nullptr, inner);
        res.objective += obj_const;
        res.bound += obj_const;
        res.nodes += agg.nodes;
        res.cuts_added += agg.cuts_added;
        agg = res;
        if (!res.has_incumbent) return agg;

        double max_viol = 0.0;
        int fresh = 0;
        for (size_t ci = 0; ci < model.cones.size(); ++ci) {
            const ExpConeConstraint& cone = model.cones[ci];
            double x1v = cone.e1.value(res.incumbent);
            double x2v = cone.e2.value(res.incumbent);
            double x3v = cone.e3.value(res.incumbent);
            double alpha = safe_violation(x1v, x2v, x3v);
            max_viol = std::max(max_viol, alpha);
            if (alpha <= params.cone_tol) continue;
            double u = separation_anchor(x2v, x3v, om.ratio_bounds[ci]);
            if (history.add(ci, u)) {
                om.lp.rows.push_back(composed_cut(cone, u));
                ++fresh;
            }
            // also support at the incumbent's own ratio when distinct
            if (x1v > 0.0 && x2v > kRatioFloor) {
                double u2 = std::clamp(x1v / x2v, om.ratio_bounds[ci].first,
                                       om.ratio_bounds[ci].second);
                if (history.add(ci, u2)) {
                    om.lp.rows.push_back(composed_cut(cone, u2));
                    ++fresh;
                }
            }
        }
        agg.cuts_added += fresh;
        if (max_viol <= params.cone_tol) {
            agg.status = MipStatus::Optimal;
            agg.rel_gap = rel_gap_of(agg.objective, agg.bound);
            return agg;
        }
        if (fresh == 0) {
            agg.status = MipStatus::RoundLimit;
            return agg;
        }
    }
    agg.status = MipStatus::RoundLimit;
    return agg;
}

MipResult branch_and_cut(const ModelIR& model, const MipParams& params) {
    OuterMilp om = build_outer_milp(model, params.seed_eps);
    const double obj_const = model.objective.constant();
    CutHistory history;
    history.anchors.resize(model.cones.size());

    CutOracle oracle = [&](const std::vector<double>& x) {
        std::vector<LinearRow> cuts;
        for (size_t ci = 0; ci < model.cones.size(); ++ci) {
            const ExpConeConstraint& cone = model.cones[ci];
            double x1v = cone.e1.value(x);
            double x2v = cone.e2.value(x);
            double x3v = cone.e3.value(x);
            double alpha = safe_violation(x1v, x2v, x3v);
            if (alpha <= params.cone_tol) continue;
            double u = separation_anchor(x2v, x3v, om.ratio_bounds[ci]);
            for (int nudge = 0; nudge < 8; ++nudge) {
                if (history.add(ci, u)) {
                    cuts.push_back(composed_cut(cone, u));
                    break;
                }
                u *= 1.0 + 1e-7 * (nudge + 1);
            }
        }
        return cuts;
    };

    MipResult res = branch_and_bound(om.lp, om.integer_cols, oracle, params);
    res.objective += obj_const;
    res.bound += obj_const;
    res.rel_gap = res.has_incumbent ? rel_gap_of(res.objective, res.bound) : kInf;
    return res;
}

MipResult solve_miecp(const ModelIR& model, const SolveOptions& options) {
    switch (options.method) {
        case MiecpMethod::CuttingPlane: return cutting_plane(model, options.params);
        case MiecpMethod::BranchAndCut: return branch_and_cut(model, options.params);
        case MiecpMethod::SocReformulate: {
            if (options.scheme == nullptr)
                throw std::invalid_argument("solve_miecp: SOC reformulation needs a scheme");
            ModelIR reformulated = reformulate(model, *options.scheme);
            emit_cbf(reformulated, options.export_path);
            MipResult res;
            res.status = MipStatus::Exported;
            return res;
        }
    }
    throw std::invalid_argument("solve_miecp: unknown method");
}

}  // namespace expcone
