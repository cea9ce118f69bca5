#pragma once

#include <string>
#include <vector>

#include "expcone/model.hpp"
#include "expcone/scheme.hpp"
#include "expcone/socblock.hpp"

namespace expcone {

struct Certificate {
    double eps = 0.0;       // theoretical one-sided deviation bound
    std::string domain;     // ratio domain the bound is certified on
    bool one_sided = false; // true: the approximation never overshoots (eps_plus = 0)
};

/// SOC approximation of one exponential cone, written over the interface
/// triple (x1, x2, x3) = local ids (0, 1, 2); auxiliaries follow. Every row
/// is homogeneous, so scaling (x1, x2, x3, aux) by any positive factor
/// preserves feasibility.
struct ConeApproxBlock {
    std::vector<BlockVar> vars;
    std::vector<LinearRow> linear_rows;
    std::vector<SocRow> lorentz_rows;
    SchemeSpec scheme;
    Certificate certificate;
};

/// Empirical one-sided deviations of a scheme against the exact cone,
/// measured in the alpha parameterization on a sampling grid.
struct AccuracyReport {
    double eps_plus = 0.0;   // max approximation-over-exact deviation
    double eps_minus = 0.0;  // max exact-over-approximation deviation
    int grid_size = 0;
    double worst_point = 0.0;
};

/// Theoretical certificate of the lifted scheme. Log-form schemes are
/// certified on the widened ratio domain [1/M^2, M^2] (phi1/phi2 recompute
/// their (rho, L) with M^2); anchored schemes on their delta neighborhood.
Certificate certificate_for(const SchemeSpec& spec, double M);

/// Perspective substitution: the scalar hypograph/epigraph block over
/// (x, value) becomes a conic block over (x1, x2, x3), every auxiliary and
/// constant scaled by x2.
ConeApproxBlock lift(const SocBlock& block, const SchemeSpec& scheme, double M);

/// Tight assignment for the lifted block at a scaled interface point:
/// (x1, x2, x3) = lambda * (u_arg-derived triple), auxiliaries scaled along.
std::vector<double> lift_tight_assignment(const ConeApproxBlock& block, const SocBlock& scalar,
                                          double u, double lambda);

/// Replaces every exponential-cone constraint by a lifted block wired to its
/// three affine expressions; linear rows and objective are untouched.
ModelIR reformulate(const ModelIR& model, const SchemeSpec& scheme);

/// Grid check of the sandwich K_exp(-eps) in K-hat in K_exp(eps), reduced by
/// homogeneity to one dimension (grid >= 1 points over the scheme's domain).
AccuracyReport verify_sandwich(const SchemeSpec& scheme, double M, int grid);

struct BestScaleResult {
    std::vector<double> anchors;  // one per cone, clamped into the valid domain
    double pilot_objective = 0.0;
    std::vector<double> incumbent;
};

/// Pilot-solve the model at coarse tolerance within the time limit and read
/// one anchor per cone from the incumbent: x1/x2 for log-form pilots, x3/x2
/// for exponential-form ones. Throws std::runtime_error when the pilot finds
/// no incumbent (caller falls back to a default anchor).
BestScaleResult best_scale(const ModelIR& model, const SchemeSpec& pilot, double time_limit_s);

}  // namespace expcone
