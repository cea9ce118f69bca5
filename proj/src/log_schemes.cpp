#include "expcone/log_schemes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace expcone {

namespace {

double checked_ratio(double num, double den, const char* who) {
    if (!(den > 0.0)) throw std::domain_error(std::string(who) + ": non-positive denominator");
    return num / den;
}

// x^{1/2^s} by repeated square roots, bit-for-bit the tower semantics.
double root_tower(double x, int s) {
    if (!(x > 0.0)) throw std::domain_error("phi2: requires x > 0");
    double r = x;
    for (int i = 0; i < s; ++i) r = std::sqrt(r);
    return r;
}

void require_kind(const GenFnSpec& spec, bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string(what) + ": wrong scheme kind " + spec.name());
}

}  // namespace

double phi1(double t, double x, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("phi1: requires a > 0");
    double num = a * std::pow(t + 1.0, a - 1.0) * (x - 1.0);
    double den = std::pow(2.0, a) + std::pow(t + 1.0, a) * (x - 1.0);
    return checked_ratio(num, den, "phi1");
}

double phi2(double t, double x, int s) {
    if (s < 1) throw std::invalid_argument("phi2: requires s >= 1");
    double xi = root_tower(x, s) - 1.0;
    double scale = std::ldexp(1.0, s);  // 2^s
    return checked_ratio(scale * xi, 2.0 + (t + 1.0) * xi, "phi2");
}

double phi3(double t, double x, double xhat) {
    if (!(xhat > 0.0)) throw std::invalid_argument("phi3: requires anchor > 0");
    double u = x / xhat - 1.0;
    return checked_ratio(u, 2.0 + (t + 1.0) * u, "phi3");
}

double log_approx_value(const GenFnSpec& spec, const QuadratureRule& rule, double x) {
    double sum = 0.0;
    for (size_t k = 0; k < rule.nodes.size(); ++k) {
        double t = rule.nodes[k];
        double f = 0.0;
        switch (spec.kind) {
            case SchemeKind::Phi1: f = phi1(t, x, spec.a); break;
            case SchemeKind::Phi2: f = phi2(t, x, spec.s); break;
            case SchemeKind::Phi3: f = phi3(t, x, spec.anchor); break;
            default: throw std::invalid_argument("log_approx_value: wrong kind " + spec.name());
        }
        sum += rule.weights[k] * f;
    }
    if (spec.kind == SchemeKind::Phi3) sum += std::log(spec.anchor);
    return sum;
}

SocBlock soc_block_log(const GenFnSpec& spec, const QuadratureRule& rule) {
    const int n = rule.order();
    if (n < 1) throw std::invalid_argument("soc_block_log: empty rule");
    SocBlock b;
    b.scheme = spec;
    b.rule = rule;
    b.epigraph = false;
    int x = b.add_var("x", -kInf, kInf);
    int nu = b.add_var("nu", -kInf, kInf);

    AffineExpr agg;  // sum w_k v_k - nu >= const
    double agg_rhs = 0.0;

    switch (spec.kind) {
        case SchemeKind::Phi1: {
            const double a = spec.a;
            if (!(a > 0.0)) throw std::invalid_argument("soc_block_log: phi1 requires a > 0");
            for (int k = 0; k < n; ++k) {
                const double tk = rule.nodes[static_cast<size_t>(k)];
                const std::string id = std::to_string(k + 1);
                int v = b.add_var("v_" + id, -kInf, kInf);
                int r1 = b.add_var("r1_" + id, 0.0, kInf);
                int r2 = b.add_var("r2_" + id, 0.0, kInf);
                // r1 = a - (t_k+1) v
                AffineExpr e1 = AffineExpr::variable(r1);
                e1.add_term(v, tk + 1.0);
                b.linear_rows.push_back({e1, RowSense::EQ, a});
                // r2 = a (t_k+1)^{a-1} (x - 1) - 2^a v
                const double slope = a * std::pow(tk + 1.0, a - 1.0);
                AffineExpr e2 = AffineExpr::variable(r2);
                e2.add_term(x, -slope);
                e2.add_term(v, std::pow(2.0, a));
                b.linear_rows.push_back({e2, RowSense::EQ, -slope});
                SocRow cone;
                cone.y1 = AffineExpr::variable(v, std::sqrt(std::pow(2.0, a + 2.0) * (tk + 1.0)));
                cone.y2 = AffineExpr::variable(r1) + AffineExpr::variable(r2, -1.0);
                cone.y3 = AffineExpr::variable(r1) + AffineExpr::variable(r2);
                b.lorentz_rows.push_back(cone);
                agg.add_term(v, rule.weights[static_cast<size_t>(k)]);
            }
            break;
        }
        case SchemeKind::Phi3: {
            if (!(spec.anchor > 0.0))
                throw std::invalid_argument("soc_block_log: phi3 requires anchor > 0");
            for (int k = 0; k < n; ++k) {
                const double tk = rule.nodes[static_cast<size_t>(k)];
                const std::string id = std::to_string(k + 1);
                int v = b.add_var("v_" + id, -kInf, kInf);
                int r1 = b.add_var("r1_" + id, 0.0, kInf);
                int r2 = b.add_var("r2_" + id, 0.0, kInf);
                // r1 = 1 - (t_k+1) v
                AffineExpr e1 = AffineExpr::variable(r1);
                e1.add_term(v, tk + 1.0);
                b.linear_rows.push_back({e1, RowSense::EQ, 1.0});
                // r2 = (x/xhat - 1) - 2 v
                AffineExpr e2 = AffineExpr::variable(r2);
                e2.add_term(x, -1.0 / spec.anchor);
                e2.add_term(v, 2.0);
                b.linear_rows.push_back({e2, RowSense::EQ, -1.0});
                SocRow cone;
                cone.y1 = AffineExpr::variable(v, std::sqrt(8.0 * (tk + 1.0)));
                cone.y2 = AffineExpr::variable(r1) + AffineExpr::variable(r2, -1.0);
                cone.y3 = AffineExpr::variable(r1) + AffineExpr::variable(r2);
                b.lorentz_rows.push_back(cone);
                agg.add_term(v, rule.weights[static_cast<size_t>(k)]);
            }
            agg_rhs = -std::log(spec.anchor);
            break;
        }
        case SchemeKind::Phi2: {
            const int s = spec.s;
            if (s < 1) throw std::invalid_argument("soc_block_log: phi2 requires s >= 1");
            std::vector<int> r(static_cast<size_t>(s));
            for (int i = 0; i < s; ++i) r[static_cast<size_t>(i)] = b.add_var("r_" + std::to_string(i + 1), 0.0, kInf);
            // (2 r_1, x-1, x+1) in L3, then (2 r_{i+1}, r_i-1, r_i+1).
            {
                SocRow cone;
                cone.y1 = AffineExpr::variable(r[0], 2.0);
                cone.y2 = AffineExpr::variable(x);
                cone.y2.add_constant(-1.0);
                cone.y3 = AffineExpr::variable(x);
                cone.y3.add_constant(1.0);
                b.lorentz_rows.push_back(cone);
            }
            for (int i = 0; i + 1 < s; ++i) {
                SocRow cone;
                cone.y1 = AffineExpr::variable(r[static_cast<size_t>(i) + 1], 2.0);
                cone.y2 = AffineExpr::variable(r[static_cast<size_t>(i)]);
                cone.y2.add_constant(-1.0);
                cone.y3 = AffineExpr::variable(r[static_cast<size_t>(i)]);
                cone.y3.add_constant(1.0);
                b.lorentz_rows.push_back(cone);
            }
            const double two_s = std::ldexp(1.0, s);
            for (int k = 0; k < n; ++k) {
                const double tk = rule.nodes[static_cast<size_t>(k)];
                const std::string id = std::to_string(k + 1);
                int v = b.add_var("v_" + id, -kInf, kInf);
                int g1 = b.add_var("gamma1_" + id, 0.0, kInf);
                int g2 = b.add_var("gamma2_" + id, 0.0, kInf);
                // gamma1 = 2^s - (t_k+1) v
                AffineExpr e1 = AffineExpr::variable(g1);
                e1.add_term(v, tk + 1.0);
                b.linear_rows.push_back({e1, RowSense::EQ, two_s});
                // gamma2 = r_s - 1 - 2^{1-s} v
                AffineExpr e2 = AffineExpr::variable(g2);
                e2.add_term(r[static_cast<size_t>(s) - 1], -1.0);
                e2.add_term(v, std::ldexp(1.0, 1 - s));
                b.linear_rows.push_back({e2, RowSense::EQ, -1.0});
                SocRow cone;
                cone.y1 = AffineExpr::variable(v, std::sqrt(std::ldexp(1.0, 3 - s) * (tk + 1.0)));
                cone.y2 = AffineExpr::variable(g1) + AffineExpr::variable(g2, -1.0);
                cone.y3 = AffineExpr::variable(g1) + AffineExpr::variable(g2);
                b.lorentz_rows.push_back(cone);
                agg.add_term(v, rule.weights[static_cast<size_t>(k)]);
            }
            break;
        }
        default:
            throw std::invalid_argument("soc_block_log: wrong kind " + spec.name());
    }
    agg.add_term(nu, -1.0);
    b.linear_rows.push_back({agg, RowSense::GE, agg_rhs});
    return b;
}

std::vector<double> tight_assignment(const SocBlock& b, double x) {
    const GenFnSpec& spec = b.scheme;
    std::vector<double> out(b.vars.size(), 0.0);
    out[0] = x;
    const int n = b.rule.order();
    switch (spec.kind) {
        case SchemeKind::Phi1:
            for (int k = 0; k < n; ++k) {
                const double tk = b.rule.nodes[static_cast<size_t>(k)];
                const double v = phi1(tk, x, spec.a);
                const size_t base = 2 + 3 * static_cast<size_t>(k);
                out[base] = v;
                out[base + 1] = spec.a - (tk + 1.0) * v;
                out[base + 2] = spec.a * std::pow(tk + 1.0, spec.a - 1.0) * (x - 1.0) -
                                std::pow(2.0, spec.a) * v;
            }
            break;
        case SchemeKind::Phi3:
            for (int k = 0; k < n; ++k) {
                const double tk = b.rule.nodes[static_cast<size_t>(k)];
                const double v = phi3(tk, x, spec.anchor);
                const size_t base = 2 + 3 * static_cast<size_t>(k);
                out[base] = v;
                out[base + 1] = 1.0 - (tk + 1.0) * v;
                out[base + 2] = (x / spec.anchor - 1.0) - 2.0 * v;
            }
            break;
        case SchemeKind::Phi2: {
            double r = x;
            for (int i = 0; i < spec.s; ++i) {
                r = std::sqrt(r);
                out[2 + static_cast<size_t>(i)] = r;
            }
            const double two_s = std::ldexp(1.0, spec.s);
            for (int k = 0; k < n; ++k) {
                const double tk = b.rule.nodes[static_cast<size_t>(k)];
                const double v = phi2(tk, x, spec.s);
                const size_t base = 2 + static_cast<size_t>(spec.s) + 3 * static_cast<size_t>(k);
                out[base] = v;
                out[base + 1] = two_s - (tk + 1.0) * v;
                out[base + 2] = r - 1.0 - std::ldexp(1.0, 1 - spec.s) * v;
            }
            break;
        }
        default:
            throw std::invalid_argument("tight_assignment: wrong kind " + spec.name());
    }
    out[1] = log_approx_value(spec, b.rule, x);
    return out;
}

double quad_error_bound(double rho, double L, int n) {
    return 64.0 * L * std::pow(rho, -2.0 * n) / (15.0 * (rho * rho - 1.0));
}

std::pair<double, double> log_scheme_rho_L(const GenFnSpec& spec, double M) {
    double rho = 0.0, L = 0.0;
    switch (spec.kind) {
        case SchemeKind::Phi1: {
            if (spec.a != 1.0)
                throw std::invalid_argument(
                    "points_needed_log: phi1 has closed-form (rho, L) only for a = 1");
            if (!(M > 1.0)) throw std::invalid_argument("points_needed_log: requires M > 1");
            const double c = (M + 1.0) / (M - 1.0);
            rho = c + 2.0 / std::sqrt(M);
            L = 1.0 / (c - rho / 2.0 - 0.5 / rho);
            break;
        }
        case SchemeKind::Phi2: {
            if (!(M > 1.0)) throw std::invalid_argument("points_needed_log: requires M > 1");
            const double xi = std::pow(M, 1.0 / std::ldexp(1.0, spec.s));
            const double c = (xi + 1.0) / (xi - 1.0);
            rho = c;
            L = std::ldexp(1.0, spec.s) / (c - rho / 2.0 - 0.5 / rho);
            break;
        }
        case SchemeKind::Phi3: {
            const double d = spec.delta;
            if (!(d > 0.0 && d < 1.0))
                throw std::invalid_argument("points_needed_log: phi3 requires delta in (0,1)");
            rho = (2.0 - d) / d;
            L = 1.0 / ((2.0 - d) / d - rho / 2.0 - 0.5 / rho);
            break;
        }
        default:
            throw std::invalid_argument("log_scheme_rho_L: wrong kind " + spec.name());
    }
    if (!(rho > 1.0) || !(L > 0.0) || !std::isfinite(L))
        throw std::invalid_argument("points_needed_log: parameters outside corollary validity");
    return {rho, L};
}

int points_needed_log(const GenFnSpec& spec, double M, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("points_needed_log: requires eps > 0");
    if (spec.kind == SchemeKind::Phi2) {
        // Corollary ties s = N; the bound eventually decays doubly fast in s.
        GenFnSpec probe = spec;
        for (int n = 1; n <= 64; ++n) {
            probe.s = n;
            auto [rho, L] = log_scheme_rho_L(probe, M);
            if (quad_error_bound(rho, L, n) <= eps) return n;
        }
        throw std::invalid_argument("points_needed_log: phi2 search exceeded s = 64");
    }
    auto [rho, L] = log_scheme_rho_L(spec, M);
    int n = 1;
    if (quad_error_bound(rho, L, 1) > eps) {
        double raw = std::log(64.0 * L / (15.0 * (rho * rho - 1.0) * eps)) / (2.0 * std::log(rho));
        n = std::max(1, static_cast<int>(std::ceil(raw)));
    }
    while (quad_error_bound(rho, L, n) > eps) ++n;
    while (n > 1 && quad_error_bound(rho, L, n - 1) <= eps) --n;
    return n;
}

}  // namespace expcone
