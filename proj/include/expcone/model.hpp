#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace expcone {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VarKind { Continuous, Binary, Integer };

struct Variable {
    int id = 0;
    double lower = 0.0;
    double upper = 0.0;
    VarKind kind = VarKind::Continuous;
};

/// Sparse affine expression: sum of coef*var plus a constant.
/// Zero coefficients are never stored.
class AffineExpr {
  public:
    AffineExpr() = default;
    explicit AffineExpr(double constant) : constant_(constant) {}

    static AffineExpr variable(int id, double coef = 1.0) {
        AffineExpr e;
        e.add_term(id, coef);
        return e;
    }

    void add_term(int id, double coef) {
        if (coef == 0.0) return;
        auto it = coefs_.find(id);
        if (it == coefs_.end()) {
            coefs_.emplace(id, coef);
        } else {
            it->second += coef;
            if (it->second == 0.0) coefs_.erase(it);
        }
    }
    void set_constant(double c) { constant_ = c; }
    void add_constant(double c) { constant_ += c; }

    double constant() const { return constant_; }
    const std::map<int, double>& coefs() const { return coefs_; }
    bool is_constant() const { return coefs_.empty(); }

    double value(std::span<const double> x) const {
        double v = constant_;
        for (const auto& [id, c] : coefs_) v += c * x[static_cast<size_t>(id)];
        return v;
    }

    AffineExpr& operator+=(const AffineExpr& o) {
        for (const auto& [id, c] : o.coefs_) add_term(id, c);
        constant_ += o.constant_;
        return *this;
    }
    AffineExpr& operator*=(double s) {
        if (s == 0.0) {
            coefs_.clear();
            constant_ = 0.0;
            return *this;
        }
        for (auto& [id, c] : coefs_) c *= s;
        constant_ *= s;
        return *this;
    }
    friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
    friend AffineExpr operator*(double s, AffineExpr a) { return a *= s; }

    bool operator==(const AffineExpr&) const = default;

  private:
    std::map<int, double> coefs_;
    double constant_ = 0.0;
};

enum class RowSense { LE, EQ, GE };

struct LinearRow {
    AffineExpr expr;
    RowSense sense = RowSense::LE;
    double rhs = 0.0;
};

/// (e1, e2, e3) required to lie in the exponential cone: e2*log(e1/e2) >= e3.
struct ExpConeConstraint {
    AffineExpr e1, e2, e3;
};

/// (y1, y2, y3) required to lie in the 3-d Lorentz cone, radius last:
/// y3 >= sqrt(y1^2 + y2^2).
struct SocRow {
    AffineExpr y1, y2, y3;
};

struct ModelIR {
    std::vector<Variable> variables;
    std::vector<LinearRow> linear_rows;
    std::vector<ExpConeConstraint> cones;
    std::vector<SocRow> soc_rows;  // populated only by conic reformulation
    AffineExpr objective;          // always minimized
    double domain_M = 16.0;        // cone ratios live in [1/M, M]

    int add_variable(double lb, double ub, VarKind kind) {
        int id = static_cast<int>(variables.size());
        variables.push_back({id, lb, ub, kind});
        return id;
    }
    int num_vars() const { return static_cast<int>(variables.size()); }
};

/// Smallest alpha such that (x1, x2, x3) lies in K_exp(alpha), i.e.
/// alpha* = x3/x2 - log(x1/x2). Nonpositive iff the point is in the exact cone.
/// Throws std::domain_error unless x1 > 0 and x2 > 0.
double cone_violation(double x1, double x2, double x3);

struct ValidationFinding {
    std::string message;
};

/// Structural checks: referenced variable ids exist, bounds ordered, binaries
/// within [0,1], domain_M > 1. Empty report means the model is well formed.
std::vector<ValidationFinding> validate(const ModelIR& model);

}  // namespace expcone
