#pragma once

// Exact arithmetic on the charge lattice K(E) = Z^2: classes, central charge,
// slopes, phases and irrational phase cuts.

#include "hnlab/numeric.hpp"

#include <compare>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <variant>

namespace hnlab {

// Class in K(E), recorded as (rank, degree).
struct Charge {
    Int rk;
    Int deg;

    bool is_zero() const { return rk == 0 && deg == 0; }

    friend bool operator==(const Charge&, const Charge&) = default;
    friend Charge operator+(const Charge& a, const Charge& b) { return {a.rk + b.rk, a.deg + b.deg}; }
    friend Charge operator-(const Charge& a, const Charge& b) { return {a.rk - b.rk, a.deg - b.deg}; }
    friend Charge operator-(const Charge& a) { return {-a.rk, -a.deg}; }
    friend Charge operator*(const Int& k, const Charge& a) { return {k * a.rk, k * a.deg}; }

    friend std::ostream& operator<<(std::ostream& os, const Charge& c) {
        return os << "(" << c.rk << "," << c.deg << ")";
    }
};

// Point of the Gaussian lattice; the central charge Z = x + iy.
struct PlaneVector {
    Int x;
    Int y;

    bool is_zero() const { return x == 0 && y == 0; }

    friend bool operator==(const PlaneVector&, const PlaneVector&) = default;
    friend PlaneVector operator+(const PlaneVector& a, const PlaneVector& b) { return {a.x + b.x, a.y + b.y}; }
    friend PlaneVector operator-(const PlaneVector& a, const PlaneVector& b) { return {a.x - b.x, a.y - b.y}; }
    friend PlaneVector operator-(const PlaneVector& a) { return {-a.x, -a.y}; }
    friend PlaneVector operator*(const Int& k, const PlaneVector& a) { return {k * a.x, k * a.y}; }

    friend std::ostream& operator<<(std::ostream& os, const PlaneVector& v) {
        return os << "(" << v.x << "," << v.y << ")";
    }
};

inline Int cross(const PlaneVector& a, const PlaneVector& b) { return a.x * b.y - a.y * b.x; }
inline Int dot(const PlaneVector& a, const PlaneVector& b) { return a.x * b.x + a.y * b.y; }

// Z(F) = -deg(F) + i rk(F).
inline PlaneVector central_charge(const Charge& c) { return {-c.deg, c.rk}; }
inline Charge charge_of(const PlaneVector& z) { return {z.y, -z.x}; }

// Rotation by a quarter turn; the plane-side action of the phase shift by 1/2.
inline PlaneVector rotate_ccw(const PlaneVector& v) { return {-v.y, v.x}; }
inline PlaneVector rotate_cw(const PlaneVector& v) { return {v.y, -v.x}; }

inline PlaneVector primitive(const PlaneVector& v) {
    if (v.is_zero()) throw DomainError("zero vector has no primitive direction");
    Int g = gcd_int(v.x, v.y);
    return {v.x / g, v.y / g};
}

// Canonical half-open sector {y > 0} u {y = 0, x < 0}: rays of phase in (0,1].
inline bool in_sector(const PlaneVector& v) { return v.y > 0 || (v.y == 0 && v.x < 0); }

// <a,b> = rk(a)deg(b) - deg(a)rk(b) = Im(conj(Z(a)) Z(b)).
inline Int euler_form(const Charge& a, const Charge& b) { return a.rk * b.deg - a.deg * b.rk; }

inline Rational mass_squared(const Charge& c) {
    PlaneVector z = central_charge(c);
    return Rational(z.x * z.x + z.y * z.y);
}

// Slope deg/rk; infinite for torsion classes.
struct Slope {
    bool infinite = false;
    Rational value;

    friend bool operator==(const Slope&, const Slope&) = default;
    std::string str() const { return infinite ? "inf" : to_string(value); }
};

inline Slope slope(const Charge& c) {
    if (c.is_zero()) throw DomainError("slope undefined on zero class");
    if (c.rk == 0) return {true, Rational(0)};
    return {false, Rational(c.deg, c.rk)};
}

// Exact phase of a lattice ray: primitive direction in the canonical sector
// plus an integer shift. The represented value is reduced(dir) + shift with
// reduced(dir) in (0,1].
class Phase {
public:
    Phase() : dir_{0, 1}, shift_(0) {}

    Phase(PlaneVector dir, Int shift) : dir_(std::move(dir)), shift_(std::move(shift)) {
        if (!in_sector(dir_)) throw DomainError("phase direction outside canonical sector");
        if (gcd_int(dir_.x, dir_.y) != 1) throw DomainError("phase direction not primitive");
    }

    // The phase in (-1,1] whose ray is v.
    static Phase of_ray(const PlaneVector& v) {
        PlaneVector p = primitive(v);
        if (in_sector(p)) return Phase(p, 0);
        return Phase(-p, -1);
    }

    static Phase half() { return Phase({0, 1}, 0); }
    static Phase one() { return Phase({-1, 0}, 0); }

    // The phase k/4 for integer k (the only rational phases with lattice rays
    // besides multiples of 1/2 are the odd quarters).
    static Phase quarter(const Int& k) {
        static const PlaneVector dirs[4] = {{-1, 0}, {1, 1}, {0, 1}, {-1, 1}};
        // k/4 = m + r/4, r in {1,2,3,4}
        Int m = floor_div(k - 1, 4);
        int r = static_cast<int>(k - 4 * m);
        return Phase(dirs[r % 4], m);
    }

    const PlaneVector& dir() const { return dir_; }
    const Int& shift() const { return shift_; }

    // Actual ray exp(i pi phase) up to positive scaling.
    PlaneVector ray() const { return is_odd(shift_) ? -dir_ : dir_; }

    Phase plus(const Int& n) const { return Phase(dir_, shift_ + n); }

    Phase plus_half() const {
        PlaneVector r = rotate_ccw(dir_);
        if (in_sector(r)) return Phase(r, shift_);
        return Phase(-r, shift_ + 1);
    }

    Phase minus_half() const {
        PlaneVector r = rotate_cw(dir_);
        if (in_sector(r)) return Phase(r, shift_);
        return Phase(-r, shift_ - 1);
    }

    // Positive multiple of the primitive class on this ray.
    Charge primitive_charge() const { return charge_of(ray()); }

    // Display only; never used by exact code paths.
    double approx() const {
        double a = std::atan2(static_cast<double>(dir_.y), static_cast<double>(dir_.x));
        return a / 3.14159265358979323846 + static_cast<double>(shift_);
    }

    friend bool operator==(const Phase&, const Phase&) = default;

    friend std::strong_ordering operator<=>(const Phase& p, const Phase& q) {
        if (p.shift_ != q.shift_) return p.shift_ < q.shift_ ? std::strong_ordering::less : std::strong_ordering::greater;
        int s = sign(cross(p.dir_, q.dir_));
        if (s > 0) return std::strong_ordering::less;
        if (s < 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Phase& p) {
        return os << "{" << p.dir_ << "," << p.shift_ << "}";
    }

private:
    PlaneVector dir_;
    Int shift_;
};

inline std::strong_ordering phase_cmp(const Phase& p, const Phase& q) { return p <=> q; }

inline Phase reduced_phase(const Charge& c) {
    if (c.is_zero()) throw DomainError("phase undefined on zero class");
    return Phase::of_ray(central_charge(c));
}

// Smallest phase strictly greater than `from` whose ray is `ray`.
inline Phase next_phase_with_ray(const Phase& from, const PlaneVector& ray) {
    Phase base = Phase::of_ray(ray);
    Int j = floor_div(from.shift() - base.shift(), 2);
    Phase cand = base.plus(2 * j);
    while (cand <= from) cand = cand.plus(2);
    while (cand.plus(-2) > from) cand = cand.plus(-2);
    return cand;
}

// Largest phase strictly smaller than `from` whose ray is `ray`.
inline Phase prev_phase_with_ray(const Phase& from, const PlaneVector& ray) {
    Phase base = Phase::of_ray(ray);
    Int j = floor_div(from.shift() - base.shift(), 2);
    Phase cand = base.plus(2 * j);
    while (cand >= from) cand = cand.plus(-2);
    while (cand.plus(2) < from) cand = cand.plus(2);
    return cand;
}

// Real quadratic surd (a + b*sqrt(D)) / c with c > 0, b != 0, D > 0 non-square.
struct QuadSurd {
    Int a;
    Int b;
    Int c;
    Int D;

    QuadSurd(Int a_, Int b_, Int c_, Int D_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), D(std::move(D_)) {
        if (c <= 0) throw DomainError("surd denominator must be positive");
        if (b == 0) throw DomainError("surd coefficient b must be nonzero");
        if (D <= 0 || is_perfect_square(D)) throw DomainError("surd radicand must be a positive non-square");
    }

    friend bool operator==(const QuadSurd&, const QuadSurd&) = default;

    // sign(p + q*sqrt(D))
    static int sign_of(const Int& p, const Int& q, const Int& D) {
        int sp = sign(p), sq = sign(q);
        if (sq == 0) return sp;
        if (sp == 0 || sp == sq) return sq;
        // opposite signs: compare p^2 with q^2 D (never equal, D non-square)
        Int lhs = p * p, rhs = q * q * D;
        return lhs > rhs ? sp : sq;
    }

    // sign(value - p/q) for q > 0
    int compare_rational(const Int& p, const Int& q) const { return sign_of(a * q - c * p, b * q, D); }

    long double approx() const {
        return (static_cast<long double>(a) + static_cast<long double>(b) * std::sqrt(static_cast<long double>(D))) /
               static_cast<long double>(c);
    }
};

// Phase cut theta: either a lattice phase, or an irrational phase given by a
// surd slope placed in the strip (strip, strip+1).
struct RationalCut {
    Phase phase;
    friend bool operator==(const RationalCut&, const RationalCut&) = default;
};

struct SurdCut {
    QuadSurd slope;
    Int strip;

    friend bool operator==(const SurdCut&, const SurdCut&) = default;

    // sign of cross(ray(theta), v). Positive iff v lies in the open half-plane
    // of rays with phases in (theta, theta+1).
    int cross_sign(const PlaneVector& v) const {
        // upper direction of the cut line is (-s, 1): cross = -(s*v.y + v.x)
        int s = -QuadSurd::sign_of(slope.a * v.y + slope.c * v.x, slope.b * v.y, slope.D);
        return is_odd(strip) ? -s : s;
    }

    SurdCut plus(const Int& n) const { return {slope, strip + n}; }

    long double approx() const {
        long double s = slope.approx();
        return static_cast<long double>(strip) + std::atan2(1.0L, -s) / 3.14159265358979323846264338327950288L;
    }
};

using PhaseCut = std::variant<RationalCut, SurdCut>;

inline PhaseCut cut_plus(const PhaseCut& cut, const Int& n) {
    if (auto r = std::get_if<RationalCut>(&cut)) return RationalCut{r->phase.plus(n)};
    return std::get<SurdCut>(cut).plus(n);
}

inline bool is_rational_cut(const PhaseCut& cut) { return std::holds_alternative<RationalCut>(cut); }

// Order of the cut relative to a lattice phase p. Never equal for surd cuts.
inline std::strong_ordering cut_cmp(const PhaseCut& cut, const Phase& p) {
    if (auto r = std::get_if<RationalCut>(&cut)) return r->phase <=> p;
    const SurdCut& s = std::get<SurdCut>(cut);
    if (s.strip != p.shift()) return s.strip < p.shift() ? std::strong_ordering::less : std::strong_ordering::greater;
    // same strip: p.dir is counterclockwise of the cut's upper direction iff cut < p
    int c = QuadSurd::sign_of(s.slope.a * p.dir().y + s.slope.c * p.dir().x, s.slope.b * p.dir().y, s.slope.D);
    // c = sign(s*y + x); cross((-s,1), dir) = -(s*y + x)
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace hnlab
