#include "expcone/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace expcone {

namespace {

constexpr double kTol = 1e-9;

// Columns: [0, n) structural, [n, n+m) slack, [n+m, n+2m) artificial.
class Simplex {
  public:
    explicit Simplex(const LpModel& model) : n_(model.num_cols()), m_(static_cast<int>(model.rows.size())) {
        total_ = n_ + 2 * m_;
        lb_.assign(static_cast<size_t>(total_), 0.0);
        ub_.assign(static_cast<size_t>(total_), 0.0);
        cost_.assign(static_cast<size_t>(total_), 0.0);
        cols_.resize(static_cast<size_t>(total_));
        b_.assign(static_cast<size_t>(m_), 0.0);

        for (int j = 0; j < n_; ++j) {
            lb_[static_cast<size_t>(j)] = model.lb[static_cast<size_t>(j)];
            ub_[static_cast<size_t>(j)] = model.ub[static_cast<size_t>(j)];
            if (!std::isfinite(lb_[static_cast<size_t>(j)]) || !std::isfinite(ub_[static_cast<size_t>(j)]))
                throw std::invalid_argument("solve_lp: structural columns need finite bounds");
        }
        for (int i = 0; i < m_; ++i) {
            const LinearRow& row = model.rows[static_cast<size_t>(i)];
            for (const auto& [id, c] : row.expr.coefs())
                cols_[static_cast<size_t>(id)].push_back({i, c});
            b_[static_cast<size_t>(i)] = row.rhs - row.expr.constant();
            int s = n_ + i;
            cols_[static_cast<size_t>(s)].push_back({i, 1.0});
            switch (row.sense) {
                case RowSense::LE: lb_[static_cast<size_t>(s)] = 0.0; ub_[static_cast<size_t>(s)] = kInf; break;
                case RowSense::GE: lb_[static_cast<size_t>(s)] = -kInf; ub_[static_cast<size_t>(s)] = 0.0; break;
                case RowSense::EQ: lb_[static_cast<size_t>(s)] = 0.0; ub_[static_cast<size_t>(s)] = 0.0; break;
            }
        }
        for (int i = 0; i < m_; ++i) {
            int a = n_ + m_ + i;
            lb_[static_cast<size_t>(a)] = 0.0;
            ub_[static_cast<size_t>(a)] = kInf;
        }
    }

    LpSolution run(const LpModel& model) {
        LpSolution sol;
        start_basis();
        // Phase 1: drive the artificial infeasibility to zero.
        std::vector<double> phase1(static_cast<size_t>(total_), 0.0);
        for (int i = 0; i < m_; ++i) phase1[static_cast<size_t>(n_ + m_ + i)] = 1.0;
        cost_ = phase1;
        if (!iterate()) {
            sol.status = LpStatus::IterLimit;
            return sol;
        }
        refresh_basics();
        double infeas = 0.0;
        for (int i = 0; i < m_; ++i) infeas += x_[static_cast<size_t>(n_ + m_ + i)];
        if (infeas > 1e-7) {
            sol.status = LpStatus::Infeasible;
            sol.iterations = iters_;
            return sol;
        }
        fix_artificials();
        // Phase 2: the real objective.
        std::fill(cost_.begin(), cost_.end(), 0.0);
        for (int j = 0; j < n_; ++j) cost_[static_cast<size_t>(j)] = model.obj[static_cast<size_t>(j)];
        if (!iterate()) {
            sol.status = LpStatus::IterLimit;
            return sol;
        }
        refresh_basics();
        sol.status = LpStatus::Optimal;
        sol.x.assign(x_.begin(), x_.begin() + n_);
        sol.objective = 0.0;
        for (int j = 0; j < n_; ++j) sol.objective += model.obj[static_cast<size_t>(j)] * x_[static_cast<size_t>(j)];
        sol.row_dual = duals();
        sol.iterations = iters_;
        return sol;
    }

  private:
    int n_, m_, total_;
    std::vector<double> lb_, ub_, cost_, b_;
    std::vector<std::vector<std::pair<int, double>>> cols_;
    std::vector<int> basis_;          // column in basis per row
    std::vector<int> where_;          // -1 at lower, +1 at upper, 0 basic
    std::vector<double> x_;           // current values, all columns
    std::vector<double> binv_;        // dense m x m row-major basis inverse
    long iters_ = 0;
    long degenerate_ = 0;

    double binv(int i, int j) const { return binv_[static_cast<size_t>(i) * static_cast<size_t>(m_) + static_cast<size_t>(j)]; }
    double& binv(int i, int j) { return binv_[static_cast<size_t>(i) * static_cast<size_t>(m_) + static_cast<size_t>(j)]; }

    void start_basis() {
        x_.assign(static_cast<size_t>(total_), 0.0);
        where_.assign(static_cast<size_t>(total_), -1);
        basis_.assign(static_cast<size_t>(m_), 0);
        for (int j = 0; j < n_ + m_; ++j) {
            double lo = lb_[static_cast<size_t>(j)], hi = ub_[static_cast<size_t>(j)];
            double at;
            int w;
            if (std::isfinite(lo) && (!std::isfinite(hi) || std::abs(lo) <= std::abs(hi))) {
                at = lo;
                w = -1;
            } else {
                at = hi;
                w = +1;
            }
            x_[static_cast<size_t>(j)] = at;
            where_[static_cast<size_t>(j)] = w;
        }
        binv_.assign(static_cast<size_t>(m_) * static_cast<size_t>(m_), 0.0);
        // residual = b - A x over structural and slack starts
        std::vector<double> resid(b_);
        for (int j = 0; j < n_ + m_; ++j) {
            if (x_[static_cast<size_t>(j)] == 0.0) continue;
            for (const auto& [i, c] : cols_[static_cast<size_t>(j)]) resid[static_cast<size_t>(i)] -= c * x_[static_cast<size_t>(j)];
        }
        for (int i = 0; i < m_; ++i) {
            int a = n_ + m_ + i;
            double r = resid[static_cast<size_t>(i)];
            // orient the artificial so it starts feasible at |r|
            double sign = r >= 0.0 ? 1.0 : -1.0;
            cols_[static_cast<size_t>(a)].clear();
            cols_[static_cast<size_t>(a)].push_back({i, sign});
            basis_[static_cast<size_t>(i)] = a;
            where_[static_cast<size_t>(a)] = 0;
            x_[static_cast<size_t>(a)] = std::abs(r);
            binv(i, i) = sign;  // B = diag(sign), inverse likewise
        }
    }

    std::vector<double> dual_y() const {
        std::vector<double> y(static_cast<size_t>(m_), 0.0);
        for (int i = 0; i < m_; ++i) {
            double cb = cost_[static_cast<size_t>(basis_[static_cast<size_t>(i)])];
            if (cb == 0.0) continue;
            for (int j = 0; j < m_; ++j) y[static_cast<size_t>(j)] += cb * binv(i, j);
        }
        return y;
    }

    std::vector<double> duals() const { return dual_y(); }

    double reduced_cost(int j, const std::vector<double>& y) const {
        double d = cost_[static_cast<size_t>(j)];
        for (const auto& [i, c] : cols_[static_cast<size_t>(j)]) d -= y[static_cast<size_t>(i)] * c;
        return d;
    }

    // B^{-1} A_j
    std::vector<double> ftran(int j) const {
        std::vector<double> w(static_cast<size_t>(m_), 0.0);
        for (const auto& [i, c] : cols_[static_cast<size_t>(j)])
            for (int r = 0; r < m_; ++r) w[static_cast<size_t>(r)] += binv(r, i) * c;
        return w;
    }

    void refresh_basics() {
        std::vector<double> resid(b_);
        for (int j = 0; j < total_; ++j) {
            if (where_[static_cast<size_t>(j)] == 0 || x_[static_cast<size_t>(j)] == 0.0) continue;
            for (const auto& [i, c] : cols_[static_cast<size_t>(j)]) resid[static_cast<size_t>(i)] -= c * x_[static_cast<size_t>(j)];
        }
        for (int i = 0; i < m_; ++i) {
            double v = 0.0;
            for (int j = 0; j < m_; ++j) v += binv(i, j) * resid[static_cast<size_t>(j)];
            x_[static_cast<size_t>(basis_[static_cast<size_t>(i)])] = v;
        }
    }

    void fix_artificials() {
        // Remove basic artificials when a pivot is available; redundant rows
        // keep theirs pinned at zero.
        for (int i = 0; i < m_; ++i) {
            int a = basis_[static_cast<size_t>(i)];
            if (a < n_ + m_) continue;
            int enter = -1;
            std::vector<double> w;
            for (int j = 0; j < n_ + m_ && enter < 0; ++j) {
                if (where_[static_cast<size_t>(j)] == 0) continue;
                if (ub_[static_cast<size_t>(j)] - lb_[static_cast<size_t>(j)] <= kTol) continue;
                w = ftran(j);
                if (std::abs(w[static_cast<size_t>(i)]) > 1e-7) enter = j;
            }
            if (enter >= 0) {
                pivot(i, enter, w);
                where_[static_cast<size_t>(a)] = -1;
                x_[static_cast<size_t>(a)] = 0.0;
            }
        }
        for (int k = 0; k < m_; ++k) ub_[static_cast<size_t>(n_ + m_ + k)] = 0.0;
        refresh_basics();
    }

    void pivot(int row, int enter, const std::vector<double>& w) {
        const double piv = w[static_cast<size_t>(row)];
        const int leave = basis_[static_cast<size_t>(row)];
        for (int j = 0; j < m_; ++j) binv(row, j) /= piv;
        for (int i = 0; i < m_; ++i) {
            if (i == row) continue;
            double f = w[static_cast<size_t>(i)];
            if (f == 0.0) continue;
            for (int j = 0; j < m_; ++j) binv(i, j) -= f * binv(row, j);
        }
        basis_[static_cast<size_t>(row)] = enter;
        where_[static_cast<size_t>(enter)] = 0;
        (void)leave;
    }

    // One phase of bounded-variable primal simplex. Returns false on
    // iteration-limit breakdown.
    bool iterate() {
        const long max_iters = 20000L + 200L * static_cast<long>(m_ + n_);
        bool bland = false;
        for (long it = 0; it < max_iters; ++it, ++iters_) {
            std::vector<double> y = dual_y();
            int enter = -1, dir = 0;
            double best = kTol;
            for (int j = 0; j < total_; ++j) {
                int w = where_[static_cast<size_t>(j)];
                if (w == 0) continue;
                if (ub_[static_cast<size_t>(j)] - lb_[static_cast<size_t>(j)] <= 0.0) continue;  // fixed
                double d = reduced_cost(j, y);
                if (w == -1 && d < -best) {
                    if (bland) {
                        if (enter < 0) {
                            enter = j;
                            dir = +1;
                        }
                    } else {
                        best = -d;
                        enter = j;
                        dir = +1;
                    }
                } else if (w == +1 && d > best) {
                    if (bland) {
                        if (enter < 0) {
                            enter = j;
                            dir = -1;
                        }
                    } else {
                        best = d;
                        enter = j;
                        dir = -1;
                    }
                } else if (bland && enter < 0) {
                    if ((w == -1 && d < -kTol)) {
                        enter = j;
                        dir = +1;
                    } else if ((w == +1 && d > kTol)) {
                        enter = j;
                        dir = -1;
                    }
                }
                if (bland && enter >= 0) break;
            }
            if (enter < 0) return true;  // optimal for this phase

            std::vector<double> w = ftran(enter);
            // step length before the entering column hits its opposite bound
            double t_best = ub_[static_cast<size_t>(enter)] - lb_[static_cast<size_t>(enter)];
            int leave_row = -1;
            int leave_to = 0;
            for (int i = 0; i < m_; ++i) {
                double wi = dir * w[static_cast<size_t>(i)];
                int bj = basis_[static_cast<size_t>(i)];
                double xi = x_[static_cast<size_t>(bj)];
                if (wi > kTol) {
                    double room = (xi - lb_[static_cast<size_t>(bj)]) / wi;
                    if (room < t_best - 1e-12 ||
                        (room < t_best + 1e-12 && (leave_row < 0 || bj < basis_[static_cast<size_t>(leave_row)]))) {
                        t_best = std::max(room, 0.0);
                        leave_row = i;
                        leave_to = -1;
                    }
                } else if (wi < -kTol) {
                    double hi = ub_[static_cast<size_t>(bj)];
                    if (!std::isfinite(hi)) continue;
                    double room = (xi - hi) / wi;
                    if (room < t_best - 1e-12 ||
                        (room < t_best + 1e-12 && (leave_row < 0 || bj < basis_[static_cast<size_t>(leave_row)]))) {
                        t_best = std::max(room, 0.0);
                        leave_row = i;
                        leave_to = +1;
                    }
                }
            }
            if (!std::isfinite(t_best)) return false;  // should not happen with bounded columns
            if (t_best <= 1e-12) {
                if (++degenerate_ > 1000) bland = true;
            }
            // apply the step
            double step = dir * t_best;
            x_[static_cast<size_t>(enter)] += step;
            for (int i = 0; i < m_; ++i)
                x_[static_cast<size_t>(basis_[static_cast<size_t>(i)])] -= w[static_cast<size_t>(i)] * step;
            if (leave_row < 0) {
                // bound flip, basis unchanged
                where_[static_cast<size_t>(enter)] = (dir > 0) ? +1 : -1;
                x_[static_cast<size_t>(enter)] = (dir > 0) ? ub_[static_cast<size_t>(enter)] : lb_[static_cast<size_t>(enter)];
            } else {
                int bj = basis_[static_cast<size_t>(leave_row)];
                where_[static_cast<size_t>(bj)] = leave_to;
                x_[static_cast<size_t>(bj)] = (leave_to < 0) ? lb_[static_cast<size_t>(bj)] : ub_[static_cast<size_t>(bj)];
                pivot(leave_row, enter, w);
            }
            if ((it & 511) == 511) refresh_basics();
        }
        return false;
    }
};

}  // namespace

LpSolution solve_lp(const LpModel& model) {
    for (size_t j = 0; j < model.lb.size(); ++j)
        if (!(model.lb[j] <= model.ub[j])) {
            LpSolution sol;
            sol.status = LpStatus::Infeasible;
            return sol;
        }
    Simplex s(model);
    return s.run(model);
}

}  // namespace expcone
