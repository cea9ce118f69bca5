#include "expcone/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace expcone {

namespace {

// Legendre P_n and P_n' at x via the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
    if (n < 1 || n > 256)
        throw std::invalid_argument("gauss_legendre: order must be in [1, 256], got " +
                                    std::to_string(n));
    QuadratureRule rule;
    rule.nodes.assign(static_cast<size_t>(n), 0.0);
    rule.weights.assign(static_cast<size_t>(n), 0.0);
    if (n == 1) {
        rule.nodes[0] = 0.0;
        rule.weights[0] = 2.0;
        return rule;
    }
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess for the i-th root in (0, 1].
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p = 0.0, dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            std::tie(p, dp) = legendre(n, x);
            double step = p / dp;
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        std::tie(p, dp) = legendre(n, x);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<size_t>(n - 1 - i)] = x;
        rule.nodes[static_cast<size_t>(i)] = -x;
        rule.weights[static_cast<size_t>(n - 1 - i)] = w;
        rule.weights[static_cast<size_t>(i)] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[static_cast<size_t>(n / 2)] = 0.0;
        auto [p0, dp0] = legendre(n, 0.0);
        (void)p0;
        rule.weights[static_cast<size_t>(n / 2)] = 2.0 / (dp0 * dp0);
    }
    return rule;
}

double integrate(const std::function<double(double)>& f, const QuadratureRule& rule) {
    double sum = 0.0;
    for (size_t k = 0; k < rule.nodes.size(); ++k) {
        double v = f(rule.nodes[k]);
        if (!std::isfinite(v))
            throw std::runtime_error("integrate: non-finite integrand value at node " +
                                     std::to_string(rule.nodes[k]));
        sum += rule.weights[k] * v;
    }
    return sum;
}

}  // namespace expcone
