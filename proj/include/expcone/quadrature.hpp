#pragma once

#include <functional>
#include <vector>

namespace expcone {

/// Gauss-Legendre rule on [-1, 1]: strictly increasing nodes, positive
/// weights summing to 2, symmetric about the origin.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int order() const { return static_cast<int>(nodes.size()); }
};

/// Nodes are the roots of the degree-N Legendre polynomial, located by Newton
/// iteration from Chebyshev initial guesses (residual tolerance 1e-15).
/// Valid for 1 <= N <= 256; exact for polynomials of degree <= 2N-1.
QuadratureRule gauss_legendre(int n);

/// Sum of w_k * f(t_k). Throws std::runtime_error on a non-finite value.
double integrate(const std::function<double(double)>& f, const QuadratureRule& rule);

}  // namespace expcone
