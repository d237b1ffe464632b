#pragma once

// The two-component cycle C_2 of projective lines: charges recorded
// component-wise and the family W_{a,b}(F) = -deg F + i(a rk_1 F + b rk_2 F).

#include "hnlab/stabcond.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace hnlab {

struct MultiCharge {
    Int deg;
    Int rk1;
    Int rk2;

    bool is_zero() const { return deg == 0 && rk1 == 0 && rk2 == 0; }

    friend bool operator==(const MultiCharge&, const MultiCharge&) = default;
    friend MultiCharge operator+(const MultiCharge& x, const MultiCharge& y) {
        return {x.deg + y.deg, x.rk1 + y.rk1, x.rk2 + y.rk2};
    }
    friend MultiCharge operator-(const MultiCharge& x, const MultiCharge& y) {
        return {x.deg - y.deg, x.rk1 - y.rk1, x.rk2 - y.rk2};
    }

    // Swap the roles of the two components.
    MultiCharge swapped() const { return {deg, rk2, rk1}; }
};

struct DeclaredObject {
    MultiCharge charge;
    std::vector<MultiCharge> quotients;

    void validate() const {
        for (const auto& q : quotients) {
            if (q.is_zero()) throw DomainError("declared quotient is zero");
            if (q == charge) throw DomainError("declared quotient equals the object");
        }
    }
};

inline void check_positive(const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0) throw DomainError("W_{a,b} needs a > 0 and b > 0");
}

inline QComplex w_ab(const MultiCharge& c, const Rational& a, const Rational& b) {
    check_positive(a, b);
    return {Rational(-c.deg), a * c.rk1 + b * c.rk2};
}

enum class Stability { Stable, StrictlySemistable, Unstable };

inline std::string to_string(Stability s) {
    switch (s) {
        case Stability::Stable: return "stable";
        case Stability::StrictlySemistable: return "semistable";
        case Stability::Unstable: return "unstable";
    }
    return "?";
}

// cross(W(obj), W(q)) > 0 means q has the larger phase.
inline Rational w_cross(const MultiCharge& o, const MultiCharge& q, const Rational& a, const Rational& b) {
    QComplex wo = w_ab(o, a, b), wq = w_ab(q, a, b);
    return wo.re * wq.im - wo.im * wq.re;
}

inline Stability is_semistable(const DeclaredObject& obj, const Rational& a, const Rational& b) {
    check_positive(a, b);
    obj.validate();
    if (obj.charge.is_zero()) throw DomainError("zero charge has no phase");
    bool equal = false;
    for (const auto& q : obj.quotients) {
        int s = sign(w_cross(obj.charge, q, a, b));
        if (s < 0) return Stability::Unstable;
        if (s == 0) equal = true;
    }
    return equal ? Stability::StrictlySemistable : Stability::Stable;
}

// alpha a + beta b + gamma = 0; the object is unstable where the left side has
// the sign `unstable_side`.
struct Wall {
    Int alpha;
    Int beta;
    Int gamma;
    int unstable_side;
    MultiCharge quotient;

    friend bool operator==(const Wall&, const Wall&) = default;
};

// Each quotient q gives cross(W(obj), W(q)) = alpha a + beta b, linear in (a,b)
// since Re W does not depend on them. Loci missing the open quadrant are dropped.
inline std::vector<Wall> walls(const DeclaredObject& obj) {
    obj.validate();
    std::vector<Wall> out;
    const MultiCharge& o = obj.charge;
    for (const auto& q : obj.quotients) {
        Int alpha = -o.deg * q.rk1 + q.deg * o.rk1;
        Int beta = -o.deg * q.rk2 + q.deg * o.rk2;
        Int gamma = 0;
        if (sign(alpha) * sign(beta) >= 0) continue;  // no zero with a, b > 0
        Int g = gcd_int(alpha, beta);
        out.push_back({alpha / g, beta / g, gamma, -1, q});
    }
    return out;
}

struct ScanGrid {
    std::vector<Rational> as;
    std::vector<Rational> bs;
    std::vector<std::vector<Stability>> rows;  // rows[j][i] at (as[i], bs[j])
};

// Verdicts on the grid step, 2 step, ..., up to the bounds. `order` permutes
// the evaluation of rows only; the result does not depend on it.
inline ScanGrid wall_scan(const DeclaredObject& obj, const Rational& step, const Rational& amax, const Rational& bmax,
                          const std::vector<std::size_t>& order = {}) {
    if (step <= 0 || amax <= 0 || bmax <= 0) throw DomainError("scan step and bounds must be positive");
    ScanGrid g;
    for (Rational v = step; v <= amax; v += step) g.as.push_back(v);
    for (Rational v = step; v <= bmax; v += step) g.bs.push_back(v);
    g.rows.assign(g.bs.size(), std::vector<Stability>(g.as.size(), Stability::Stable));
    std::vector<std::size_t> idx(g.bs.size());
    std::iota(idx.begin(), idx.end(), 0);
    if (order.size() == idx.size()) idx = order;
    for (std::size_t j : idx)
        for (std::size_t i = 0; i < g.as.size(); ++i) g.rows[j][i] = is_semistable(obj, g.as[i], g.bs[j]);
    return g;
}

// The line bundle L on C_2 of multidegree (1,1) with its two quotients.
inline DeclaredObject c2_line_bundle() { return {{2, 1, 1}, {{1, 1, 0}, {3, 0, 1}}}; }

}  // namespace hnlab
