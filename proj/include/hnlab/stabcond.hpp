#pragma once

// Stability conditions on E as translates of the standard one
// sigma_0 = (Z, P) by the universal cover of GL+(2,R), restricted to
// rational matrices.

#include "hnlab/autoeq.hpp"
#include "hnlab/lift.hpp"

#include <ostream>
#include <utility>

namespace hnlab {

struct QComplex {
    Rational re;
    Rational im;

    friend bool operator==(const QComplex&, const QComplex&) = default;
    friend QComplex operator+(const QComplex& a, const QComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend QComplex operator-(const QComplex& a, const QComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend QComplex operator-(const QComplex& a) { return {-a.re, -a.im}; }
    friend QComplex operator*(const QComplex& a, const QComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend QComplex operator*(const Int& k, const QComplex& a) { return {k * a.re, k * a.im}; }

    Rational norm() const { return re * re + im * im; }

    friend QComplex operator/(const QComplex& a, const QComplex& b) {
        Rational n = b.norm();
        if (n == 0) throw DomainError("division by zero");
        QComplex num = a * QComplex{b.re, -b.im};
        return {num.re / n, num.im / n};
    }

    friend std::ostream& operator<<(std::ostream& os, const QComplex& z) {
        return os << to_string(z.re) << "+" << to_string(z.im) << "i";
    }
};

struct RatMatrix2 {
    Rational a, b, c, d;

    static RatMatrix2 identity() { return {1, 0, 0, 1}; }
    static RatMatrix2 from(const IntMatrix2& m) { return {Rational(m.a), Rational(m.b), Rational(m.c), Rational(m.d)}; }

    Rational det() const { return a * d - b * c; }

    RatMatrix2 inverse() const {
        Rational k = det();
        if (k == 0) throw DomainError("singular matrix");
        return {d / k, -b / k, -c / k, a / k};
    }

    QComplex apply(const QComplex& z) const { return {a * z.re + b * z.im, c * z.re + d * z.im}; }

    // Positive multiple with integer entries; same action on rays.
    IntMatrix2 integral() const {
        Int l = lcm_int(lcm_int(denominator(a), denominator(b)), lcm_int(denominator(c), denominator(d)));
        auto up = [&](const Rational& v) { return Int(numerator(v) * (l / denominator(v))); };
        return {up(a), up(b), up(c), up(d)};
    }

    friend RatMatrix2 operator*(const RatMatrix2& m, const RatMatrix2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend bool operator==(const RatMatrix2&, const RatMatrix2&) = default;

    friend std::ostream& operator<<(std::ostream& os, const RatMatrix2& m) {
        return os << "[[" << to_string(m.a) << "," << to_string(m.b) << "],[" << to_string(m.c) << ","
                  << to_string(m.d) << "]]";
    }
};

inline QComplex to_complex(const PlaneVector& v) { return {Rational(v.x), Rational(v.y)}; }

// Pair (A, f): A acts on the plane of central charges, f is the monotone lift
// of A to phases, pinned by f(1/2).
class GLPlusTilde {
public:
    GLPlusTilde() : matrix_(RatMatrix2::identity()), anchor_(Phase::half()) {}

    GLPlusTilde(RatMatrix2 matrix, Phase anchor) : matrix_(std::move(matrix)), anchor_(std::move(anchor)) {
        if (matrix_.det() <= 0) throw DomainError("matrix must have positive determinant");
        PlaneVector image = matrix_.integral().apply(Phase::half().ray());
        if (next_phase_with_ray(anchor_.plus(-1), image) != anchor_)
            throw DomainError("anchor does not lie on the image ray of phase 1/2");
    }

    static GLPlusTilde identity() { return {}; }

    static GLPlusTilde from(const AutoEq& g) {
        return {RatMatrix2::from(plane_matrix(g.matrix())), g.anchor()};
    }

    const RatMatrix2& matrix() const { return matrix_; }
    const Phase& anchor() const { return anchor_; }

    Phase operator()(const Phase& t) const { return lift_phase(matrix_.integral(), Phase::half(), anchor_, t); }

    friend bool operator==(const GLPlusTilde&, const GLPlusTilde&) = default;

private:
    RatMatrix2 matrix_;
    Phase anchor_;
};

// g after h.
inline GLPlusTilde compose(const GLPlusTilde& g, const GLPlusTilde& h) {
    return {g.matrix() * h.matrix(), g(h.anchor())};
}

inline GLPlusTilde invert(const GLPlusTilde& g) {
    RatMatrix2 inv = g.matrix().inverse();
    return {inv, lift_phase(inv.integral(), g.anchor(), Phase::half(), Phase::half())};
}

// The condition (A,f) . (Z, P) = (A^-1 Z, P o f).
struct StabilityCondition {
    GLPlusTilde translate;

    static StabilityCondition standard() { return {}; }

    friend bool operator==(const StabilityCondition&, const StabilityCondition&) = default;
};

inline QComplex central_charge_of(const StabilityCondition& s, const Charge& c) {
    return s.translate.matrix().inverse().apply(to_complex(central_charge(c)));
}

// f(t): the slice of phase t is the standard slice of phase f(t).
inline Phase slicing_phase(const StabilityCondition& s, const Phase& t) { return s.translate(t); }

// t must be a multiple of 1/4, the only rational numbers with a lattice ray.
inline Phase slicing_phase(const StabilityCondition& s, const Rational& t) {
    Rational q = 4 * t;
    if (denominator(q) != 1) throw DomainError("phase " + to_string(t) + " has no lattice ray");
    return slicing_phase(s, Phase::quarter(numerator(q)));
}

// g . sigma_T = sigma_{T o g}, so the action is on the right.
inline StabilityCondition act(const GLPlusTilde& g, const StabilityCondition& s) {
    return {compose(s.translate, g)};
}

// The unique g with act(g, c1) = c2.
inline GLPlusTilde solve_transitivity(const StabilityCondition& c1, const StabilityCondition& c2) {
    return compose(invert(c1.translate), c2.translate);
}

// G . (W, R) = (W o G^-1 on classes, G(R)): the plane matrix of G multiplies
// the translate from the left.
inline StabilityCondition act_autoeq(const AutoEq& g, const StabilityCondition& s) {
    return {compose(GLPlusTilde::from(g), s.translate)};
}

struct CanonicalForm {
    QComplex tau;
    QComplex scale;
    IntMatrix2 reducer;  // rows give the reduced basis in terms of (W(k(x)), W(O))

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

// Reduces tau = W(k(x)) / W(O) into the fundamental domain |Re tau| <= 1/2,
// |tau| >= 1, with Re tau = -1/2 sent to +1/2 and Re tau >= 0 on the unit
// circle. The scale is the reduced W(O)-slot, fixed up to the stabiliser of tau.
inline CanonicalForm canonical_form(const StabilityCondition& s) {
    QComplex w1 = central_charge_of(s, Charge{0, 1});
    QComplex w2 = central_charge_of(s, Charge{1, 0});
    IntMatrix2 m = IntMatrix2::identity();

    auto shear = [&](const Int& n) {  // w1 -= n w2
        if (n == 0) return;
        w1 = w1 - n * w2;
        m = IntMatrix2{1, -n, 0, 1} * m;
    };
    auto flip = [&]() {  // (w1, w2) -> (-w2, w1)
        QComplex t = w1;
        w1 = -w2;
        w2 = t;
        m = IntMatrix2{0, -1, 1, 0} * m;
    };

    QComplex tau = w1 / w2;
    for (;;) {
        shear(floor_rational(tau.re + Rational(1, 2)));
        tau = w1 / w2;
        if (tau.norm() >= 1) break;
        flip();
        tau = w1 / w2;
    }
    if (tau.re == Rational(-1, 2)) shear(-1);
    tau = w1 / w2;
    if (tau.norm() == 1 && tau.re < 0) flip();
    tau = w1 / w2;

    auto good_scale = [&]() {
        if (tau == QComplex{0, 1}) return w2.re > 0 && w2.im >= 0;
        return w2.re > 0 || (w2.re == 0 && w2.im > 0);
    };
    for (int i = 0; i < 4 && !good_scale(); ++i) {
        if (tau == QComplex{0, 1}) {
            flip();
        } else {
            w1 = -w1;
            w2 = -w2;
            m = -m;
        }
    }
    return {tau, w2, m};
}

}  // namespace hnlab
