#pragma once

#include <vector>

#include "expcone/quadrature.hpp"
#include "expcone/scheme.hpp"
#include "expcone/socblock.hpp"

namespace expcone {

/// Spec of a log-form generating function; kind must be Phi1, Phi2 or Phi3.
using GenFnSpec = SchemeSpec;

/// phi1(t,x) = a(t+1)^{a-1}(x-1) / (2^a + (t+1)^a (x-1)); integrates to log(x)
/// over t in [-1,1]. Throws std::domain_error on a non-positive denominator.
double phi1(double t, double x, double a);

/// phi2(t,x) = 2^s (x^{1/2^s}-1) / (2 + (t+1)(x^{1/2^s}-1)); the root
/// x^{1/2^s} is taken by s repeated square roots, mirroring the SOC tower.
double phi2(double t, double x, int s);

/// phi3(t,x) = (x/xhat-1) / (2 + (t+1)(x/xhat-1)); integrates to
/// log(x) - log(xhat).
double phi3(double t, double x, double xhat);

/// Quadrature-assembled approximation of log(x): sum of w_k phi(t_k, x) plus
/// log(anchor) for Phi3 (zero for the others).
double log_approx_value(const GenFnSpec& spec, const QuadratureRule& rule, double x);

/// SOC hypograph block of the assembled approximation. Interface vars "x"
/// (argument) and "nu" (hypograph value); per node k an auxiliary v_k plus
/// two sign-constrained residuals tied by equality rows, one Lorentz row per
/// node, and the aggregation row sum_k w_k v_k >= nu (+ anchor constant).
/// Phi2 additionally carries the shared square-root tower r_1..r_s.
SocBlock soc_block_log(const GenFnSpec& spec, const QuadratureRule& rule);

/// Assignment attaining the hypograph bound: v_k = phi(t_k, x), residuals
/// from their defining equalities, nu = log_approx_value.
std::vector<double> tight_assignment(const SocBlock& block, double x);

/// Quadrature error bound 64 L rho^{-2N} / (15 (rho^2 - 1)).
double quad_error_bound(double rho, double L, int n);

/// The (rho, L) pair of the applicable corollary. Phi1 requires a = 1;
/// Phi3 reads the certified neighborhood radius from spec.delta (in (0,1)).
/// For Phi2 the pair depends on s alone, which the caller fixes.
std::pair<double, double> log_scheme_rho_L(const GenFnSpec& spec, double M);

/// Smallest N whose certified bound is <= eps. For Phi2 the search is joint
/// over s = N. Throws std::invalid_argument when the parameters fall outside
/// the corollary's validity (rho <= 1 or L <= 0, or Phi1 with a != 1).
int points_needed_log(const GenFnSpec& spec, double M, double eps);

}  // namespace expcone
