#pragma once

#include <map>
#include <string>
#include <vector>

#include "expcone/model.hpp"
#include "expcone/quadrature.hpp"
#include "expcone/scheme.hpp"

namespace expcone {

struct BlockVar {
    std::string name;
    double lb = -kInf;
    double ub = kInf;
};

/// SOC description of a one-dimensional hypograph/epigraph approximation.
///
/// Local variable 0 is the function argument ("x"), local variable 1 the
/// function value ("nu"); auxiliaries follow. Linear and Lorentz rows are
/// written over the local ids, Lorentz rows radius-last.
struct SocBlock {
    std::vector<BlockVar> vars;
    std::vector<LinearRow> linear_rows;
    std::vector<SocRow> lorentz_rows;
    std::map<std::string, int> interface_vars;
    bool epigraph = false;  // true: value bounds the function from above
    SchemeSpec scheme;
    QuadratureRule rule;  // log-form blocks only

    int add_var(const std::string& name, double lb, double ub) {
        int id = static_cast<int>(vars.size());
        vars.push_back({name, lb, ub});
        interface_vars[name] = id;
        return id;
    }
};

/// Worst constraint violation of an assignment: bound, linear-row and
/// Lorentz-row residuals (positive = violated).
double max_residual(const SocBlock& block, std::span<const double> assignment);

}  // namespace expcone
