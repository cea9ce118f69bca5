#pragma once

#include <string>
#include <utility>
#include <vector>

#include "expcone/scheme.hpp"
#include "expcone/socblock.hpp"

namespace expcone {

/// Spec of an exponential-form scheme; kind must be Limit, Taylor,
/// LimitShift or TaylorShift.
using ExpSchemeSpec = SchemeSpec;

/// Writing the even-order Taylor polynomial of exp as
///   sum_{j in [0,s]} alpha_j/(2j)! (beta_j + y)^{2j}.
/// alpha[s] = beta[s] = 1. beta[0] never enters the reconstruction (the j = 0
/// term is the bare constant alpha[0]); it is still computed and reported.
struct SosDecomposition {
    int s = 0;
    std::vector<double> alpha;
    std::vector<double> beta;
};

/// Rational-arithmetic coefficients as canonical "p/q" strings (s <= 20).
struct SosExact {
    std::vector<std::string> alpha;
    std::vector<std::string> beta;
};

/// Triangular moment recursion for the decomposition above. Exact rational
/// arithmetic for s <= 20, 128-bit floating point beyond (the entries span
/// ten orders of magnitude around the sign change; doubles lose it).
/// Valid for 1 <= s <= 64. All alpha are nonnegative iff s <= 33.
SosDecomposition sos_coefficients(int s);
SosExact sos_coefficients_exact(int s);

/// (1 + x/2^N)^{2^N} by N repeated squarings. Throws std::domain_error when
/// the base 1 + x/2^N is negative.
double psi_limit(double x, int n);

/// Even-order Taylor expansion of exp: sum_{i in [0,2s]} y^i / i!.
/// Strictly positive for every real y.
double taylor_even(double y, int s);

/// (taylor_even(x/2^N, s))^{2^N} by repeated squaring.
double psi_taylor(double x, int n, int s);

/// exp(anchor) * psi_limit(x - anchor, N).
double psi_shift(double x, int n, double anchor);

/// exp(anchor) * psi_taylor(x - anchor, N, s).
double psi_taylor_shift(double x, int n, int s, double anchor);

/// SOC epigraph block of the scheme: interface "x" (argument) and "v"
/// (epigraph value), tower auxiliaries r_1..r_N. Taylor kinds are emitted
/// only for s = 1 (no SOC representation is known beyond).
SocBlock soc_block_exp(const ExpSchemeSpec& spec);

/// Assignment attaining the epigraph bound (tower of partial powers).
std::vector<double> tight_assignment_exp(const SocBlock& block, double x);

/// One-sided deviation bound of the limit scheme on |x| <= range:
/// range^2 / 2^{N-2}; requires N >= log2(2*range) for validity.
double limit_bound(double range, int n);

/// The two printed deviation bounds of the even-order Taylor scheme on
/// |x| <= range: {x >= 0 case, x <= 0 case}. The certified bound is their max.
std::pair<double, double> taylor_bound_cases(double range, int n, int s);

/// Levels certifying deviation <= eps on |x| <= range (range is the
/// approximate-solution radius for the shift kinds):
/// limit kinds ceil(log2(4 range^2 / eps)); taylor kinds the closed form
/// ((2s+1) ln(e range/(2s+1)) + ln(1/eps)) / (2s ln 2).
int levels_needed_exp(const ExpSchemeSpec& spec, double range, double eps);

}  // namespace expcone
