#pragma once

#include <utility>
#include <vector>

namespace expcone {

/// Supporting hyperplane of the exponential cone at the ray through
/// (u, 1, log u): a1*x1 + a2*x2 + a3*x3 >= 0, valid on all of K_exp(0) and
/// tight on the source ray. Stored homogenized (rhs 0).
struct LinearCut {
    double a1 = 0.0, a2 = 0.0, a3 = 0.0;
    double source_ratio = 1.0;  // u = xhat1/xhat2 the cut was generated at

    double residual(double x1, double x2, double x3) const {
        return a1 * x1 + a2 * x2 + a3 * x3;
    }
};

/// Gradient inequality at (xhat1, xhat2):
/// x2 log(xhat1/xhat2) + x1 xhat2/xhat1 - x2 >= x3.
/// Throws std::domain_error for non-positive inputs.
LinearCut gradient_cut(double xhat1, double xhat2);

/// Geometric grid from 1/M to M with consecutive ratio 1 + sqrt(8 eps),
/// endpoints included; the last cell may close with a smaller ratio.
/// Size is ceil(2 log M / log(1 + sqrt(8 eps))) + 1 (a single point at M = 1).
std::vector<double> static_grid(double M, double eps);

struct OuterPolyhedron {
    std::vector<double> grid;
    std::vector<LinearCut> cuts;  // one tangent per grid point

    /// Value of the piecewise-linear upper envelope at x (scalar form).
    double envelope(double x) const;
};

/// Tangent cuts on the static grid; the envelope satisfies
/// 0 <= envelope(x) - log(x) <= eps on [1/M, M].
OuterPolyhedron outer_polyhedron(double M, double eps);

/// Largest nu-gap between log and its chord over [1, t] — identical in closed
/// form to the gap between log and the intersection of its tangents at 1 and
/// t: -log(log t/(t-1)) - 1 + log t/(t-1). Zero at t = 1 (continuity);
/// throws std::domain_error for t < 1.
double chord_gap(double t);
double tangent_gap(double t);

/// Closed-form lower bound on the minimax vertical distance forced between
/// two eps-perturbed consecutive extreme points: chord_gap(t) / 2.
double dH_lower(double t, double eps);

/// Direct numeric evaluation of the minimax over perturbations
/// (delta1, delta2) in [-eps, eps]^2 with inner maximization over [1, t]
/// (41x41 outer grid, golden-section inner search, tolerance 1e-8).
double dH_minimax(double t, double eps);

/// Constructive counting quantities of the extended-space and original-space
/// bounds: q_poly extreme-point doublings forced by the minimax distance,
/// n_outer tangent cells required by the grid construction.
struct LowerBoundCounts {
    int q_poly = 0;
    int n_outer = 0;
};
LowerBoundCounts lower_bound_counts(double M, double eps);

}  // namespace expcone
