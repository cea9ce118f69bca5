#include "expcone/exp_schemes.hpp"

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>

namespace expcone {

namespace {

// Depth recursion shared by every order: the pair at depth d is independent
// of s, and the coefficients of order s are alpha_j = A_{s-j}, beta_j = B_{s-j}.
// Even moment equation at depth d pins A_d, the odd one pins B_d.
template <typename Num>
void sos_depth_recursion(int depth, std::vector<Num>& A, std::vector<Num>& B) {
    std::vector<Num> fact(static_cast<size_t>(2 * depth + 2));
    fact[0] = 1;
    for (size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * static_cast<int>(i);

    A.assign(static_cast<size_t>(depth + 1), Num(0));
    B.assign(static_cast<size_t>(depth + 1), Num(0));
    A[0] = 1;
    B[0] = 1;
    std::vector<std::vector<Num>> bpow(static_cast<size_t>(depth + 1));
    bpow[0].assign(static_cast<size_t>(2 * depth + 2), Num(1));  // B_0 = 1
    for (int d = 1; d <= depth; ++d) {
        Num even = 1, odd = 1;
        for (int j = 0; j < d; ++j) {
            const int p = 2 * (d - j);
            even -= A[static_cast<size_t>(j)] * bpow[static_cast<size_t>(j)][static_cast<size_t>(p)] / fact[static_cast<size_t>(p)];
            odd -= A[static_cast<size_t>(j)] * bpow[static_cast<size_t>(j)][static_cast<size_t>(p) + 1] / fact[static_cast<size_t>(p) + 1];
        }
        A[static_cast<size_t>(d)] = even;
        B[static_cast<size_t>(d)] = odd / even;
        auto& pw = bpow[static_cast<size_t>(d)];
        pw.assign(static_cast<size_t>(2 * (depth - d) + 2), Num(1));
        for (size_t p = 1; p < pw.size(); ++p) pw[p] = pw[p - 1] * B[static_cast<size_t>(d)];
    }
}

void check_order(int s) {
    if (s < 1 || s > 64)
        throw std::invalid_argument("sos_coefficients: order must be in [1, 64]");
}

}  // namespace

SosDecomposition sos_coefficients(int s) {
    check_order(s);
    SosDecomposition out;
    out.s = s;
    out.alpha.assign(static_cast<size_t>(s + 1), 0.0);
    out.beta.assign(static_cast<size_t>(s + 1), 0.0);
    if (s <= 20) {
        std::vector<mpq_class> A, B;
        sos_depth_recursion(s, A, B);
        for (int j = 0; j <= s; ++j) {
            out.alpha[static_cast<size_t>(j)] = A[static_cast<size_t>(s - j)].get_d();
            out.beta[static_cast<size_t>(j)] = B[static_cast<size_t>(s - j)].get_d();
        }
    } else {
        std::vector<__float128> A, B;
        sos_depth_recursion(s, A, B);
        for (int j = 0; j <= s; ++j) {
            out.alpha[static_cast<size_t>(j)] = static_cast<double>(A[static_cast<size_t>(s - j)]);
            out.beta[static_cast<size_t>(j)] = static_cast<double>(B[static_cast<size_t>(s - j)]);
        }
    }
    return out;
}

SosExact sos_coefficients_exact(int s) {
    if (s < 1 || s > 20)
        throw std::invalid_argument("sos_coefficients_exact: rational mode covers s in [1, 20]");
    std::vector<mpq_class> A, B;
    sos_depth_recursion(s, A, B);
    SosExact out;
    for (int j = 0; j <= s; ++j) {
        out.alpha.push_back(A[static_cast<size_t>(s - j)].get_str());
        out.beta.push_back(B[static_cast<size_t>(s - j)].get_str());
    }
    return out;
}

double psi_limit(double x, int n) {
    if (n < 0) throw std::invalid_argument("psi_limit: requires N >= 0");
    double base = 1.0 + std::ldexp(x, -n);
    if (base < 0.0)
        throw std::domain_error("psi_limit: 1 + x/2^N is negative (outside representable region)");
    double r = base;
    for (int k = 0; k < n; ++k) r *= r;
    return r;
}

double taylor_even(double y, int s) {
    if (s < 1) throw std::invalid_argument("taylor_even: requires s >= 1");
    double sum = 1.0, term = 1.0;
    for (int i = 1; i <= 2 * s; ++i) {
        term *= y / i;
        sum += term;
    }
    return sum;
}

double psi_taylor(double x, int n, int s) {
    if (n < 0) throw std::invalid_argument("psi_taylor: requires N >= 0");
    double r = taylor_even(std::ldexp(x, -n), s);
    for (int k = 0; k < n; ++k) r *= r;
    return r;
}

double psi_shift(double x, int n, double anchor) {
    return std::exp(anchor) * psi_limit(x - anchor, n);
}

double psi_taylor_shift(double x, int n, int s, double anchor) {
    return std::exp(anchor) * psi_taylor(x - anchor, n, s);
}

SocBlock soc_block_exp(const ExpSchemeSpec& spec) {
    const bool taylor = spec.kind == SchemeKind::Taylor || spec.kind == SchemeKind::TaylorShift;
    const bool is_shift =
        spec.kind == SchemeKind::LimitShift || spec.kind == SchemeKind::TaylorShift;
    if (spec.log_form()) throw std::invalid_argument("soc_block_exp: wrong kind " + spec.name());
    if (taylor && spec.s != 1)
        throw std::invalid_argument(
            "soc_block_exp: no SOC representation is known for the even-order Taylor scheme "
            "beyond s = 1");
    const int n = spec.points;
    if (n < 0 || (!taylor && n < 1))
        throw std::invalid_argument("soc_block_exp: invalid level count");

    SocBlock b;
    b.scheme = spec;
    b.epigraph = true;
    int x = b.add_var("x", -kInf, kInf);
    int v = b.add_var("v", -kInf, kInf);
    const double scale = is_shift ? std::sqrt(std::exp(spec.anchor)) : 1.0;
    const double shift = is_shift ? spec.anchor : 0.0;

    if (taylor && n == 0) {
        // Single rotated row; the shift factor needs one linking auxiliary.
        AffineExpr arg = AffineExpr::variable(x);
        arg.add_constant(1.0 - shift);
        int top = v;
        if (is_shift) {
            top = b.add_var("r_0", 0.0, kInf);
            AffineExpr link = AffineExpr::variable(v);
            link.add_term(top, -std::exp(spec.anchor));
            b.linear_rows.push_back({link, RowSense::EQ, 0.0});
        }
        SocRow cone;
        cone.y1 = arg;
        cone.y2 = AffineExpr::variable(top);
        cone.y2.add_constant(-1.0);
        cone.y3 = AffineExpr::variable(top);
        b.lorentz_rows.push_back(cone);
        return b;
    }

    std::vector<int> r(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const bool last = (k == n - 1);
        // Sign bounds: r_k >= 0 for k in [N-1]; the Taylor kinds also bound r_N.
        double lb = (!last || taylor) ? 0.0 : -kInf;
        r[static_cast<size_t>(k)] = b.add_var("r_" + std::to_string(k + 1), lb, kInf);
    }
    {
        SocRow cone;  // (2 scale r_1, v-1, v+1): v >= scale^2 r_1^2
        cone.y1 = AffineExpr::variable(r[0], 2.0 * scale);
        cone.y2 = AffineExpr::variable(v);
        cone.y2.add_constant(-1.0);
        cone.y3 = AffineExpr::variable(v);
        cone.y3.add_constant(1.0);
        b.lorentz_rows.push_back(cone);
    }
    for (int k = 0; k + 1 < n; ++k) {
        SocRow cone;  // (2 r_{k+1}, r_k - 1, r_k + 1): r_k >= r_{k+1}^2
        cone.y1 = AffineExpr::variable(r[static_cast<size_t>(k) + 1], 2.0);
        cone.y2 = AffineExpr::variable(r[static_cast<size_t>(k)]);
        cone.y2.add_constant(-1.0);
        cone.y3 = AffineExpr::variable(r[static_cast<size_t>(k)]);
        cone.y3.add_constant(1.0);
        b.lorentz_rows.push_back(cone);
    }
    AffineExpr arg = AffineExpr::variable(x, std::ldexp(1.0, -n));
    arg.add_constant(1.0 - std::ldexp(shift, -n));
    if (taylor) {
        SocRow cone;  // (1 + 2^{-N}(x - shift), r_N - 1, r_N): r_N >= psi_hat_2
        cone.y1 = arg;
        cone.y2 = AffineExpr::variable(r.back());
        cone.y2.add_constant(-1.0);
        cone.y3 = AffineExpr::variable(r.back());
        b.lorentz_rows.push_back(cone);
    } else {
        AffineExpr link = AffineExpr::variable(r.back()) + (-1.0) * arg;
        b.linear_rows.push_back({link, RowSense::EQ, 0.0});  // r_N = 1 + 2^{-N}(x - shift)
    }
    return b;
}

std::vector<double> tight_assignment_exp(const SocBlock& b, double x) {
    const ExpSchemeSpec& spec = b.scheme;
    const bool taylor = spec.kind == SchemeKind::Taylor || spec.kind == SchemeKind::TaylorShift;
    const bool is_shift =
        spec.kind == SchemeKind::LimitShift || spec.kind == SchemeKind::TaylorShift;
    const int n = spec.points;
    const double shift = is_shift ? spec.anchor : 0.0;
    const double y = std::ldexp(x - shift, -n);
    std::vector<double> out(b.vars.size(), 0.0);
    out[0] = x;
    if (taylor && n == 0) {
        double val = taylor_even(y, 1);
        if (is_shift) out[2] = val;
        out[1] = std::exp(shift) * val;
        return out;
    }
    double top = taylor ? taylor_even(y, 1) : 1.0 + y;
    out[static_cast<size_t>(1 + n)] = top;
    for (int k = n - 1; k >= 1; --k) {
        top *= top;
        out[static_cast<size_t>(1 + k)] = top;
    }
    out[1] = (is_shift ? std::exp(spec.anchor) : 1.0) * top * top;
    return out;
}

double limit_bound(double range, int n) {
    return range * range * std::ldexp(1.0, -(n - 2));
}

std::pair<double, double> taylor_bound_cases(double range, int n, int s) {
    // Evaluated in log space; the factorials overflow doubles well below s = 64.
    auto expl = [](double t) { return t > 700.0 ? kInf : std::exp(t); };
    const double lr = std::log(range);
    const double lfac = std::lgamma(2.0 * s + 2.0);
    double case1 = expl((2.0 * s + 1.0) * lr - 2.0 * n * s * M_LN2 - lfac) +
                   expl((4.0 * s + 2.0) * lr - (n * (4.0 * s + 1.0) - 2.0) * M_LN2 - 2.0 * lfac);
    double case2 = expl(std::log(3.0) + (2.0 * s - 1.0) * lr - n * (2.0 * s - 2.0) * M_LN2 - lfac);
    return {case1, case2};
}

int levels_needed_exp(const ExpSchemeSpec& spec, double range, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("levels_needed_exp: requires eps > 0");
    if (!(range > 0.0)) throw std::invalid_argument("levels_needed_exp: requires range > 0");
    switch (spec.kind) {
        case SchemeKind::Limit:
        case SchemeKind::LimitShift: {
            double raw = std::ceil(std::log2(4.0 * range * range / eps));
            return std::max(1, static_cast<int>(raw));
        }
        case SchemeKind::Taylor:
        case SchemeKind::TaylorShift: {
            const double s = spec.s;
            double raw = ((2.0 * s + 1.0) * std::log(M_E * range / (2.0 * s + 1.0)) +
                          std::log(1.0 / eps)) /
                         (2.0 * s * M_LN2);
            return std::max(0, static_cast<int>(std::ceil(raw)));
        }
        default:
            throw std::invalid_argument("levels_needed_exp: wrong kind " + spec.name());
    }
}

}  // namespace expcone
