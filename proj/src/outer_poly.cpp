#include "expcone/outer_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace expcone {

LinearCut gradient_cut(double xhat1, double xhat2) {
    if (!(xhat1 > 0.0) || !(xhat2 > 0.0))
        throw std::domain_error("gradient_cut: requires xhat1 > 0 and xhat2 > 0");
    const double u = xhat1 / xhat2;
    LinearCut cut;
    cut.a1 = 1.0 / u;
    cut.a2 = std::log(u) - 1.0;
    cut.a3 = -1.0;
    cut.source_ratio = u;
    return cut;
}

std::vector<double> static_grid(double M, double eps) {
    if (!(M >= 1.0)) throw std::invalid_argument("static_grid: requires M >= 1");
    if (!(eps > 0.0) || eps > 1.0)
        throw std::invalid_argument("static_grid: requires eps in (0, 1]");
    if (M == 1.0) return {1.0};
    const double ratio = 1.0 + std::sqrt(8.0 * eps);
    const int cells = static_cast<int>(std::ceil(2.0 * std::log(M) / std::log(ratio)));
    std::vector<double> grid;
    grid.reserve(static_cast<size_t>(cells) + 1);
    double x = 1.0 / M;
    for (int i = 0; i < cells; ++i) {
        grid.push_back(x);
        x *= ratio;
    }
    grid.push_back(M);  // last cell closes at M with ratio <= the target
    return grid;
}

double OuterPolyhedron::envelope(double x) const {
    double best = std::numeric_limits<double>::infinity();
    for (const LinearCut& c : cuts) {
        // cut in scalar form: nu <= log(u) + (x - u)/u at source u
        best = std::min(best, std::log(c.source_ratio) + x / c.source_ratio - 1.0);
    }
    return best;
}

OuterPolyhedron outer_polyhedron(double M, double eps) {
    OuterPolyhedron poly;
    poly.grid = static_grid(M, eps);
    poly.cuts.reserve(poly.grid.size());
    for (double u : poly.grid) poly.cuts.push_back(gradient_cut(u, 1.0));
    return poly;
}

double chord_gap(double t) {
    if (t < 1.0) throw std::domain_error("chord_gap: requires t >= 1");
    if (t == 1.0) return 0.0;
    const double slope = std::log(t) / (t - 1.0);
    return -std::log(slope) - 1.0 + slope;
}

double tangent_gap(double t) { return chord_gap(t); }

double dH_lower(double t, double eps) {
    if (!(eps > 0.0) || eps > 1.0)
        throw std::invalid_argument("dH_lower: requires eps in (0, 1]");
    return 0.5 * chord_gap(t);
}

namespace {

// max over [1, t] of |log x - slope (x - 1) - d1|; the unsigned part is
// concave with interior stationary point x = 1/slope, the |.| maximum adds
// the endpoint values |d1| and |d2|.
double inner_max(double t, double d1, double d2, double slope) {
    auto f = [&](double x) { return std::log(x) - slope * (x - 1.0) - d1; };
    double best = std::max(std::abs(d1), std::abs(d2));
    // golden-section maximization of the concave part
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 1.0, b = t;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-8) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return std::max(best, f(0.5 * (a + b)));
}

}  // namespace

double dH_minimax(double t, double eps) {
    if (t < 1.0) throw std::domain_error("dH_minimax: requires t >= 1");
    if (t == 1.0) return 0.0;
    const int n = 41;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        double d1 = -eps + 2.0 * eps * i / (n - 1);
        for (int j = 0; j < n; ++j) {
            double d2 = -eps + 2.0 * eps * j / (n - 1);
            double slope = (std::log(t) + d2 - d1) / (t - 1.0);
            best = std::min(best, inner_max(t, d1, d2, slope));
        }
    }
    return best;
}

LowerBoundCounts lower_bound_counts(double M, double eps) {
    if (!(M > 1.0)) throw std::invalid_argument("lower_bound_counts: requires M > 1");
    if (!(eps > 0.0) || eps > 1.0)
        throw std::invalid_argument("lower_bound_counts: requires eps in (0, 1]");
    LowerBoundCounts out;
    // (1 + sqrt(1e4 eps))^{2^q} >= M^2
    const double cells_poly = 2.0 * std::log(M) / std::log1p(std::sqrt(1e4 * eps));
    out.q_poly = cells_poly <= 1.0 ? 0 : static_cast<int>(std::ceil(std::log2(cells_poly)));
    out.n_outer = static_cast<int>(std::ceil(2.0 * std::log(M) / std::log1p(std::sqrt(8.0 * eps))));
    return out;
}

}  // namespace expcone
