#include "expcone/model.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace expcone {

double cone_violation(double x1, double x2, double x3) {
    if (!(x1 > 0.0) || !(x2 > 0.0))
        throw std::domain_error("cone_violation: requires x1 > 0 and x2 > 0");
    // Logarithmic form of the membership test; bounded for all ratios in R^2.
    return x3 / x2 - std::log(x1 / x2);
}

namespace {

void check_expr(const AffineExpr& e, int num_vars, const std::string& where,
                std::vector<ValidationFinding>& out) {
    for (const auto& [id, c] : e.coefs()) {
        if (id < 0 || id >= num_vars)
            out.push_back({where + ": references unknown variable id " + std::to_string(id)});
        if (c == 0.0) out.push_back({where + ": stored zero coefficient"});
        if (!std::isfinite(c)) out.push_back({where + ": non-finite coefficient"});
    }
}

}  // namespace

std::vector<ValidationFinding> validate(const ModelIR& m) {
    std::vector<ValidationFinding> out;
    const int n = m.num_vars();
    for (size_t i = 0; i < m.variables.size(); ++i) {
        const Variable& v = m.variables[i];
        if (v.id != static_cast<int>(i))
            out.push_back({"variable " + std::to_string(i) + ": id mismatch"});
        if (!(v.lower <= v.upper))
            out.push_back({"variable " + std::to_string(i) + ": lower > upper"});
        if (v.kind == VarKind::Binary && (v.lower < 0.0 || v.upper > 1.0))
            out.push_back({"variable " + std::to_string(i) + ": binary bounds outside [0,1]"});
    }
    for (size_t i = 0; i < m.linear_rows.size(); ++i)
        check_expr(m.linear_rows[i].expr, n, "row " + std::to_string(i), out);
    for (size_t i = 0; i < m.cones.size(); ++i) {
        const auto& c = m.cones[i];
        const std::string where = "cone " + std::to_string(i);
        check_expr(c.e1, n, where, out);
        check_expr(c.e2, n, where, out);
        check_expr(c.e3, n, where, out);
    }
    for (size_t i = 0; i < m.soc_rows.size(); ++i) {
        const auto& r = m.soc_rows[i];
        const std::string where = "soc row " + std::to_string(i);
        check_expr(r.y1, n, where, out);
        check_expr(r.y2, n, where, out);
        check_expr(r.y3, n, where, out);
    }
    check_expr(m.objective, n, "objective", out);
    if (!(m.domain_M > 1.0)) out.push_back({"domain_M must exceed 1"});
    return out;
}

}  // namespace expcone
