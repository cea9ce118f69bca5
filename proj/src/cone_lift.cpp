#include "expcone/cone_lift.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "expcone/exp_schemes.hpp"
#include "expcone/log_schemes.hpp"

namespace expcone {

namespace {

constexpr int kX1 = 0, kX2 = 1, kX3 = 2;

// Rewrite an expression over scalar-block locals into one over lifted locals:
// the argument and value map onto the interface triple by form, constants
// pick up an x2 coefficient, auxiliaries shift up by one slot.
AffineExpr homogenize(const AffineExpr& e, bool log_form) {
    AffineExpr out;
    const int arg = log_form ? kX1 : kX3;
    const int val = log_form ? kX3 : kX1;
    for (const auto& [id, c] : e.coefs()) {
        if (id == 0)
            out.add_term(arg, c);
        else if (id == 1)
            out.add_term(val, c);
        else
            out.add_term(id + 1, c);
    }
    out.add_term(kX2, e.constant());
    return out;
}

}  // namespace

Certificate certificate_for(const SchemeSpec& spec, double M) {
    if (!(M > 1.0)) throw std::invalid_argument("certificate_for: requires M > 1");
    Certificate cert;
    switch (spec.kind) {
        case SchemeKind::Phi1:
        case SchemeKind::Phi2: {
            SchemeSpec wide = spec;
            auto [rho, L] = log_scheme_rho_L(wide, M * M);
            cert.eps = quad_error_bound(rho, L, spec.points);
            cert.domain = "[1/M^2, M^2]";
            cert.one_sided = false;
            break;
        }
        case SchemeKind::Phi3: {
            auto [rho, L] = log_scheme_rho_L(spec, M * M);
            cert.eps = quad_error_bound(rho, L, spec.points);
            cert.domain = "[anchor(1-delta), anchor(1+delta)]";
            cert.one_sided = false;
            break;
        }
        case SchemeKind::Limit: {
            const double range = 2.0 * M * M * std::log(M);
            cert.eps = limit_bound(range, spec.points);
            cert.domain = "[-2M log M, 2M log M]";
            cert.one_sided = true;
            break;
        }
        case SchemeKind::LimitShift: {
            if (!(spec.delta > 0.0))
                throw std::invalid_argument("certificate_for: shift kinds require delta > 0");
            cert.eps = limit_bound(spec.delta, spec.points);
            cert.domain = "[anchor-delta, anchor+delta]";
            cert.one_sided = true;
            break;
        }
        case SchemeKind::Taylor: {
            const double range = 2.0 * M * M * std::log(M);
            auto [c1, c2] = taylor_bound_cases(range, spec.points, spec.s);
            cert.eps = std::max(c1, c2);
            cert.domain = "[-2M log M, 2M log M]";
            cert.one_sided = false;
            break;
        }
        case SchemeKind::TaylorShift: {
            if (!(spec.delta > 0.0))
                throw std::invalid_argument("certificate_for: shift kinds require delta > 0");
            auto [c1, c2] = taylor_bound_cases(spec.delta, spec.points, spec.s);
            cert.eps = std::max(c1, c2);
            cert.domain = "[anchor-delta, anchor+delta]";
            cert.one_sided = false;
            break;
        }
    }
    return cert;
}

ConeApproxBlock lift(const SocBlock& block, const SchemeSpec& scheme, double M) {
    if (block.scheme.kind != scheme.kind)
        throw std::invalid_argument("lift: block was built for scheme " + block.scheme.name() +
                                    ", not " + scheme.name());
    const bool log_form = scheme.log_form();
    if (log_form == block.epigraph) {
        // log-form blocks are hypographs, exp-form blocks epigraphs
    } else {
        throw std::invalid_argument("lift: block orientation does not match the scheme form");
    }

    ConeApproxBlock out;
    out.scheme = scheme;
    out.certificate = certificate_for(scheme, M);
    out.vars.push_back({"x1", -kInf, kInf});
    out.vars.push_back({"x2", -kInf, kInf});
    out.vars.push_back({"x3", -kInf, kInf});
    for (size_t j = 2; j < block.vars.size(); ++j) {
        const BlockVar& v = block.vars[j];
        if (!(v.lb == 0.0 || v.lb == -kInf) || !(v.ub == 0.0 || v.ub == kInf))
            throw std::invalid_argument("lift: auxiliary bound is not homogeneous");
        out.vars.push_back(v);
    }
    for (const auto& row : block.linear_rows) {
        AffineExpr e = homogenize(row.expr, log_form);
        e.add_term(kX2, -row.rhs);  // fold the right-hand side into the x2 column
        out.linear_rows.push_back({e, row.sense, 0.0});
    }
    for (const auto& cone : block.lorentz_rows) {
        SocRow r;
        r.y1 = homogenize(cone.y1, log_form);
        r.y2 = homogenize(cone.y2, log_form);
        r.y3 = homogenize(cone.y3, log_form);
        out.lorentz_rows.push_back(r);
    }
    return out;
}

std::vector<double> lift_tight_assignment(const ConeApproxBlock& block, const SocBlock& scalar,
                                          double u, double lambda) {
    std::vector<double> base = block.scheme.log_form() ? tight_assignment(scalar, u)
                                                       : tight_assignment_exp(scalar, u);
    std::vector<double> out(block.vars.size(), 0.0);
    const bool log_form = block.scheme.log_form();
    const double arg = base[0], val = base[1];
    out[kX1] = lambda * (log_form ? arg : val);
    out[kX3] = lambda * (log_form ? val : arg);
    out[kX2] = lambda;
    for (size_t j = 2; j < base.size(); ++j) out[j + 1] = lambda * base[j];
    return out;
}

ModelIR reformulate(const ModelIR& model, const SchemeSpec& scheme) {
    ModelIR out = model;
    out.cones.clear();
    for (const ExpConeConstraint& cone : model.cones) {
        SocBlock scalar = scheme.log_form()
                              ? soc_block_log(scheme, gauss_legendre(scheme.points))
                              : soc_block_exp(scheme);
        ConeApproxBlock lifted = lift(scalar, scheme, model.domain_M);

        std::vector<AffineExpr> subst(lifted.vars.size());
        subst[kX1] = cone.e1;
        subst[kX2] = cone.e2;
        subst[kX3] = cone.e3;
        for (size_t j = 3; j < lifted.vars.size(); ++j) {
            int id = out.add_variable(lifted.vars[j].lb, lifted.vars[j].ub, VarKind::Continuous);
            subst[j] = AffineExpr::variable(id);
        }
        auto compose = [&](const AffineExpr& e) {
            AffineExpr r(e.constant());
            for (const auto& [id, c] : e.coefs()) r += c * subst[static_cast<size_t>(id)];
            return r;
        };
        for (const auto& row : lifted.linear_rows)
            out.linear_rows.push_back({compose(row.expr), row.sense, row.rhs});
        for (const auto& cr : lifted.lorentz_rows)
            out.soc_rows.push_back({compose(cr.y1), compose(cr.y2), compose(cr.y3)});
    }
    return out;
}

AccuracyReport verify_sandwich(const SchemeSpec& scheme, double M, int grid) {
    if (grid < 1) throw std::invalid_argument("verify_sandwich: requires grid >= 1");
    if (!(M > 1.0)) throw std::invalid_argument("verify_sandwich: requires M > 1");

    AccuracyReport rep;
    rep.grid_size = grid;
    double lo = 0.0, hi = 0.0;
    bool log_spaced = false;
    if (scheme.log_form()) {
        log_spaced = true;
        if (scheme.kind == SchemeKind::Phi3 && scheme.delta >= 0.0 && scheme.anchor > 0.0 &&
            scheme.delta < 1.0) {
            lo = scheme.anchor * (1.0 - scheme.delta);
            hi = scheme.anchor * (1.0 + scheme.delta);
        } else {
            lo = 1.0 / (M * M);
            hi = M * M;
        }
    } else if (scheme.shifted()) {
        lo = scheme.anchor - scheme.delta;
        hi = scheme.anchor + scheme.delta;
    } else {
        hi = 2.0 * M * std::log(M);
        lo = -hi;
    }

    QuadratureRule rule;
    if (scheme.log_form()) rule = gauss_legendre(scheme.points);

    for (int i = 0; i < grid; ++i) {
        double frac = grid == 1 ? 0.5 : static_cast<double>(i) / (grid - 1);
        double u = log_spaced ? lo * std::pow(hi / lo, frac) : lo + frac * (hi - lo);
        double approx = 0.0, exact = 0.0;
        if (scheme.log_form()) {
            approx = log_approx_value(scheme, rule, u);
            exact = std::log(u);
        } else {
            double v = 0.0;
            switch (scheme.kind) {
                case SchemeKind::Limit: v = psi_limit(u, scheme.points); break;
                case SchemeKind::Taylor: v = psi_taylor(u, scheme.points, scheme.s); break;
                case SchemeKind::LimitShift: v = psi_shift(u, scheme.points, scheme.anchor); break;
                case SchemeKind::TaylorShift:
                    v = psi_taylor_shift(u, scheme.points, scheme.s, scheme.anchor);
                    break;
                default: break;
            }
            approx = v > 0.0 ? std::log(v) : -kInf;
            exact = u;
        }
        double dev = approx - exact;
        double worst = std::max(rep.eps_plus, rep.eps_minus);
        if (std::max(std::max(dev, 0.0), std::max(-dev, 0.0)) > worst) rep.worst_point = u;
        rep.eps_plus = std::max(rep.eps_plus, dev);
        rep.eps_minus = std::max(rep.eps_minus, -dev);
    }
    rep.eps_plus = std::max(rep.eps_plus, 0.0);
    rep.eps_minus = std::max(rep.eps_minus, 0.0);
    return rep;
}

}  // namespace expcone
