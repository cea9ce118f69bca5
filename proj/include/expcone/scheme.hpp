#pragma once

#include <stdexcept>
#include <string>

namespace expcone {

/// The seven approximation schemes. Phi* approximate the cone through its
/// logarithm (hypograph) form, the rest through its exponential (epigraph)
/// form.
enum class SchemeKind {
    Phi1,        // a(t+1)^{a-1}(x-1) / (2^a + (t+1)^a (x-1))
    Phi2,        // 2^s (x^{1/2^s}-1) / (2 + (t+1)(x^{1/2^s}-1))
    Phi3,        // scaled variant of Phi1 centered at an anchor
    Limit,       // (1 + x/2^N)^{2^N}
    Taylor,      // (even-order Taylor of exp at x/2^N)^{2^N}
    LimitShift,  // exp(anchor) * Limit at x - anchor
    TaylorShift  // exp(anchor) * Taylor at x - anchor
};

struct SchemeSpec {
    SchemeKind kind = SchemeKind::Phi1;
    int points = 1;       // quadrature points (log form) / squaring levels (exp form)
    int s = 1;            // root-tower depth (Phi2) / Taylor half-order
    double a = 1.0;       // Phi1 exponent
    double anchor = 1.0;  // Phi3 scale anchor, or shift anchor
    double delta = 0.0;   // certified anchor-neighborhood radius (0 = unset)

    static SchemeSpec phi1(int n, double a = 1.0) {
        return {SchemeKind::Phi1, n, 1, a, 1.0, 0.0};
    }
    static SchemeSpec phi2(int n, int s) { return {SchemeKind::Phi2, n, s, 1.0, 1.0, 0.0}; }
    static SchemeSpec phi3(int n, double anchor, double delta = 0.0) {
        return {SchemeKind::Phi3, n, 1, 1.0, anchor, delta};
    }
    static SchemeSpec limit(int n) { return {SchemeKind::Limit, n, 1, 1.0, 0.0, 0.0}; }
    static SchemeSpec taylor(int n, int s) { return {SchemeKind::Taylor, n, s, 1.0, 0.0, 0.0}; }
    static SchemeSpec limit_shift(int n, double anchor, double delta = 0.0) {
        return {SchemeKind::LimitShift, n, 1, 1.0, anchor, delta};
    }
    static SchemeSpec taylor_shift(int n, int s, double anchor, double delta = 0.0) {
        return {SchemeKind::TaylorShift, n, s, 1.0, anchor, delta};
    }

    bool log_form() const {
        return kind == SchemeKind::Phi1 || kind == SchemeKind::Phi2 || kind == SchemeKind::Phi3;
    }
    bool shifted() const {
        return kind == SchemeKind::Phi3 || kind == SchemeKind::LimitShift ||
               kind == SchemeKind::TaylorShift;
    }
    std::string name() const {
        switch (kind) {
            case SchemeKind::Phi1: return "phi1";
            case SchemeKind::Phi2: return "phi2";
            case SchemeKind::Phi3: return "phi3";
            case SchemeKind::Limit: return "limit";
            case SchemeKind::Taylor: return "taylor";
            case SchemeKind::LimitShift: return "limit-shift";
            case SchemeKind::TaylorShift: return "taylor-shift";
        }
        return "?";
    }
};

inline SchemeKind scheme_kind_from_name(const std::string& s) {
    if (s == "phi1") return SchemeKind::Phi1;
    if (s == "phi2") return SchemeKind::Phi2;
    if (s == "phi3") return SchemeKind::Phi3;
    if (s == "limit") return SchemeKind::Limit;
    if (s == "taylor") return SchemeKind::Taylor;
    if (s == "limit-shift") return SchemeKind::LimitShift;
    if (s == "taylor-shift") return SchemeKind::TaylorShift;
    throw std::invalid_argument("unknown scheme name: " + s);
}

}  // namespace expcone
