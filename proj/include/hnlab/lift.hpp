#pragma once

// Exact monotone lifts of linear circle actions to the phase line.
//
// A 2x2 integer matrix M with det M > 0 acts on rays of the plane preserving
// their cyclic order. Its lifts to the phase line are the strictly increasing
// maps f with f(t+1) = f(t)+1 sending the ray of t to the ray M*exp(i pi t).
// A lift is pinned by one value; everything here is integer arithmetic.

#include "hnlab/lattice.hpp"

#include <vector>

namespace hnlab {

struct IntMatrix2 {
    Int a, b, c, d;  // [[a, b], [c, d]]

    static IntMatrix2 identity() { return {1, 0, 0, 1}; }

    Int det() const { return a * d - b * c; }

    PlaneVector apply(const PlaneVector& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

    // Inverse of a unimodular matrix.
    IntMatrix2 unimodular_inverse() const {
        if (det() != 1) throw DomainError("matrix is not in SL(2,Z)");
        return {d, -b, -c, a};
    }

    // Conjugation by the coordinate swap (u0,u1) <-> (u1,u0).
    IntMatrix2 swapped() const { return {d, c, b, a}; }

    friend IntMatrix2 operator*(const IntMatrix2& m, const IntMatrix2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend IntMatrix2 operator-(const IntMatrix2& m) { return {-m.a, -m.b, -m.c, -m.d}; }
    friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix2& m) {
        return os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
    }
};

namespace detail {

inline Int l1_norm(const PlaneVector& v) { return abs_int(v.x) + abs_int(v.y); }

// Point strictly inside the arc from u to v (angle below a half turn), taken
// as the sum of the L1-normalised endpoints so both halves shrink evenly.
inline PlaneVector arc_midpoint(const PlaneVector& u, const PlaneVector& v) {
    return primitive(l1_norm(v) * u + l1_norm(u) * v);
}

}  // namespace detail

// f(target) for the lift f of m with f(base) = base_image.
//
// The target is first moved by an integer k into [base, base+1), so the arc
// from ray(base) to ray(target - k) turns counterclockwise by less than a half
// turn. That arc is split at midpoints until every consecutive pair of image
// rays u, v has dot(u, v) > 0; each step then raises the phase by less than
// one half and is fixed by the image ray alone.
inline Phase lift_phase(const IntMatrix2& m, const Phase& base, const Phase& base_image, const Phase& target) {
    if (m.det() <= 0) throw DomainError("lift requires a matrix of positive determinant");

    Int k = target.shift() - base.shift();
    Phase reduced = target.plus(-k);
    while (reduced < base) {
        reduced = reduced.plus(1);
        k -= 1;
    }
    while (reduced >= base.plus(1)) {
        reduced = reduced.plus(-1);
        k += 1;
    }
    if (reduced == base) return base_image.plus(k);

    std::vector<PlaneVector> arc{base.ray(), reduced.ray()};
    std::vector<PlaneVector> refined;
    refined.reserve(8);
    bool split = true;
    while (split) {
        split = false;
        refined.clear();
        refined.push_back(arc.front());
        for (std::size_t i = 1; i < arc.size(); ++i) {
            const PlaneVector& u = arc[i - 1];
            const PlaneVector& v = arc[i];
            if (dot(m.apply(u), m.apply(v)) <= 0) {
                refined.push_back(detail::arc_midpoint(u, v));
                split = true;
            }
            refined.push_back(v);
        }
        arc.swap(refined);
    }

    Phase cur = base_image;
    for (std::size_t i = 1; i < arc.size(); ++i) cur = next_phase_with_ray(cur, m.apply(arc[i]));
    return cur.plus(k);
}

}  // namespace hnlab
