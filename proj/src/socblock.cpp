#include "expcone/socblock.hpp"

#include <algorithm>
#include <cmath>

namespace expcone {

double max_residual(const SocBlock& block, std::span<const double> x) {
    double worst = 0.0;
    for (size_t j = 0; j < block.vars.size(); ++j) {
        worst = std::max(worst, block.vars[j].lb - x[j]);
        worst = std::max(worst, x[j] - block.vars[j].ub);
    }
    for (const auto& row : block.linear_rows) {
        double v = row.expr.value(x);
        switch (row.sense) {
            case RowSense::LE: worst = std::max(worst, v - row.rhs); break;
            case RowSense::GE: worst = std::max(worst, row.rhs - v); break;
            case RowSense::EQ: worst = std::max(worst, std::abs(v - row.rhs)); break;
        }
    }
    for (const auto& cone : block.lorentz_rows) {
        double y1 = cone.y1.value(x), y2 = cone.y2.value(x), y3 = cone.y3.value(x);
        worst = std::max(worst, std::hypot(y1, y2) - y3);
    }
    return worst;
}

}  // namespace expcone
