#pragma once

// The universal cover of SL(2,Z) acting on charges and phases through the
// twist functors T_O, T_k(p0) and the shift [1].

#include "hnlab/lattice.hpp"
#include "hnlab/lift.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hnlab {

enum class Letter { TO, TOinv, TK, TKinv, Shift, ShiftInv };

inline Letter inverse(Letter l) {
    switch (l) {
        case Letter::TO: return Letter::TOinv;
        case Letter::TOinv: return Letter::TO;
        case Letter::TK: return Letter::TKinv;
        case Letter::TKinv: return Letter::TK;
        case Letter::Shift: return Letter::ShiftInv;
        case Letter::ShiftInv: return Letter::Shift;
    }
    return l;
}

inline std::string_view letter_token(Letter l) {
    switch (l) {
        case Letter::TO: return "TO";
        case Letter::TOinv: return "to";
        case Letter::TK: return "TK";
        case Letter::TKinv: return "tk";
        case Letter::Shift: return "S";
        case Letter::ShiftInv: return "s";
    }
    return "?";
}

// Word in the generators, read as a composition: the rightmost letter acts
// first. The empty word is the identity.
struct GenWord {
    std::vector<Letter> letters;

    static GenWord fdual() { return {{Letter::TK, Letter::TO, Letter::TK}}; }
    static GenWord fdual_inverse() { return {{Letter::TKinv, Letter::TOinv, Letter::TKinv}}; }

    static GenWord power(Letter l, const Int& n) {
        GenWord w;
        Letter use = n < 0 ? hnlab::inverse(l) : l;
        for (Int i = 0; i < abs_int(n); ++i) w.letters.push_back(use);
        return w;
    }

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    // Number of maximal runs of a repeated letter (T_K^5 counts once).
    std::size_t syllables() const {
        std::size_t n = 0;
        for (std::size_t i = 0; i < letters.size(); ++i)
            if (i == 0 || letters[i] != letters[i - 1]) ++n;
        return n;
    }

    GenWord inverse() const {
        GenWord w;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(hnlab::inverse(*it));
        return w;
    }

    // Cancels adjacent inverse pairs.
    GenWord reduced() const {
        GenWord w;
        for (Letter l : letters) {
            if (!w.letters.empty() && w.letters.back() == hnlab::inverse(l))
                w.letters.pop_back();
            else
                w.letters.push_back(l);
        }
        return w;
    }

    // Composition: (*this) after `rhs`.
    friend GenWord operator*(const GenWord& lhs, const GenWord& rhs) {
        GenWord w = lhs;
        w.letters.insert(w.letters.end(), rhs.letters.begin(), rhs.letters.end());
        return w;
    }

    friend bool operator==(const GenWord&, const GenWord&) = default;

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i) out += ' ';
            out += letter_token(letters[i]);
        }
        return out;
    }

    // Accepts tokens TO, to, TK, tk, S, s with optional whitespace between them.
    static GenWord parse(std::string_view s) {
        GenWord w;
        std::size_t i = 0;
        while (i < s.size()) {
            char ch = s[i];
            if (std::isspace(static_cast<unsigned char>(ch)) || ch == '.' || ch == ',') {
                ++i;
                continue;
            }
            if (ch == 'S') { w.letters.push_back(Letter::Shift); ++i; continue; }
            if (ch == 's') { w.letters.push_back(Letter::ShiftInv); ++i; continue; }
            if ((ch == 'T' || ch == 't') && i + 1 < s.size()) {
                char nx = s[i + 1];
                if (ch == 'T' && nx == 'O') w.letters.push_back(Letter::TO);
                else if (ch == 't' && nx == 'o') w.letters.push_back(Letter::TOinv);
                else if (ch == 'T' && nx == 'K') w.letters.push_back(Letter::TK);
                else if (ch == 't' && nx == 'k') w.letters.push_back(Letter::TKinv);
                else throw DomainError("unknown generator token in word '" + std::string(s) + "'");
                i += 2;
                continue;
            }
            throw DomainError("unknown generator token in word '" + std::string(s) + "'");
        }
        return w;
    }
};

// Matrix of a generator acting on coordinates (rk, -deg).
inline IntMatrix2 generator_matrix(Letter l) {
    switch (l) {
        case Letter::TO: return {1, 1, 0, 1};
        case Letter::TOinv: return {1, -1, 0, 1};
        case Letter::TK: return {1, 0, -1, 1};
        case Letter::TKinv: return {1, 0, 1, 1};
        case Letter::Shift:
        case Letter::ShiftInv: return {-1, 0, 0, -1};
    }
    return IntMatrix2::identity();
}

inline IntMatrix2 word_matrix(const GenWord& w) {
    IntMatrix2 m = IntMatrix2::identity();
    for (Letter l : w.letters) m = m * generator_matrix(l);
    return m;
}

// Action of a matrix in (rk, -deg) coordinates on a class.
inline Charge apply_matrix(const IntMatrix2& m, const Charge& c) {
    PlaneVector u = m.apply({c.rk, -c.deg});
    return {u.x, -u.y};
}

inline Charge apply_to_charge(const GenWord& w, const Charge& c) { return apply_matrix(word_matrix(w), c); }

// The same matrix acting on central charges Z = (-deg, rk).
inline IntMatrix2 plane_matrix(const IntMatrix2& m) { return m.swapped(); }

namespace detail {

inline Phase apply_letter(Letter l, const Phase& p) {
    const PlaneVector& d = p.dir();
    switch (l) {
        case Letter::Shift: return p.plus(1);
        case Letter::ShiftInv: return p.plus(-1);
        // T_K is tensoring by a degree one line bundle: it keeps every strip.
        case Letter::TK: return Phase({d.x - d.y, d.y}, p.shift());
        case Letter::TKinv: return Phase({d.x + d.y, d.y}, p.shift());
        // T_O = T_K^-1 F T_K^-1 with F raising every phase by 1/2.
        case Letter::TO: return apply_letter(Letter::TKinv, apply_letter(Letter::TKinv, p).plus_half());
        case Letter::TOinv: return apply_letter(Letter::TK, apply_letter(Letter::TK, p).minus_half());
    }
    return p;
}

}  // namespace detail

inline Phase apply_to_phase(const GenWord& w, const Phase& p) {
    Phase cur = p;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) cur = detail::apply_letter(*it, cur);
    return cur;
}

// Element of the universal cover: a unimodular matrix together with the
// image of the phase 1/2.
class AutoEq {
public:
    AutoEq() : matrix_(IntMatrix2::identity()), anchor_(Phase::half()) {}

    AutoEq(IntMatrix2 matrix, Phase anchor) : matrix_(std::move(matrix)), anchor_(std::move(anchor)) {
        if (matrix_.det() != 1) throw DomainError("auto-equivalence matrix must have determinant 1");
        PlaneVector image = plane_matrix(matrix_).apply(Phase::half().ray());
        if (Phase::of_ray(image).dir() != anchor_.dir() ||
            is_odd(anchor_.shift() - Phase::of_ray(image).shift()))
            throw DomainError("anchor does not lie on the image ray of phase 1/2");
    }

    static AutoEq identity() { return {}; }

    const IntMatrix2& matrix() const { return matrix_; }
    const Phase& anchor() const { return anchor_; }

    friend bool operator==(const AutoEq&, const AutoEq&) = default;

private:
    IntMatrix2 matrix_;
    Phase anchor_;
};

inline AutoEq normal_form(const GenWord& w) { return AutoEq(word_matrix(w), apply_to_phase(w, Phase::half())); }

inline Phase lift_phase(const AutoEq& g, const Phase& p) {
    return lift_phase(plane_matrix(g.matrix()), Phase::half(), g.anchor(), p);
}

inline Charge apply_to_charge(const AutoEq& g, const Charge& c) { return apply_matrix(g.matrix(), c); }

// g after h.
inline AutoEq compose(const AutoEq& g, const AutoEq& h) { return AutoEq(g.matrix() * h.matrix(), lift_phase(g, h.anchor())); }

inline AutoEq invert(const AutoEq& g) {
    IntMatrix2 inv = g.matrix().unimodular_inverse();
    // the inverse lift sends g.anchor back to 1/2
    return AutoEq(inv, lift_phase(plane_matrix(inv), g.anchor(), Phase::half(), Phase::half()));
}

struct TorsionReduction {
    GenWord word;
    Charge result;
};

// Euclidean reduction of a class to the torsion class (0, gcd).
//
// Each round clears the degree modulo the rank with a power of T_K and then
// rotates by F = T_K T_O T_K, which swaps the roles of rank and degree.
inline TorsionReduction reduce_to_torsion(const Charge& c) {
    if (c.is_zero()) throw DomainError("cannot reduce the zero class");
    std::vector<GenWord> steps;  // in application order
    Int r = c.rk, d = c.deg;
    while (r != 0) {
        Int q = d / r;  // truncating, so |d| follows the usual Euclid remainders
        if (q != 0) steps.push_back(GenWord::power(Letter::TKinv, q));
        d -= q * r;
        steps.push_back(GenWord::fdual());
        Int nr = -d;
        d = r;
        r = nr;
    }
    if (d < 0) {
        steps.push_back(GenWord::power(Letter::Shift, 1));
        d = -d;
    }
    GenWord w;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) w = w * *it;
    return {w.reduced(), Charge{0, d}};
}

// Word whose phase action sends the lattice phase p to exactly 1.
inline GenWord map_phase_to_one(const Phase& p) {
    Phase base(p.dir(), 0);
    GenWord w = reduce_to_torsion(charge_of(base.dir())).word;
    Phase image = apply_to_phase(w, base);
    Int excess = image.shift() + p.shift();
    return (GenWord::power(Letter::ShiftInv, excess) * w).reduced();
}

inline GenWord map_phase_to_one(const PhaseCut& cut) {
    if (auto r = std::get_if<RationalCut>(&cut)) return map_phase_to_one(r->phase);
    throw DomainError("irrational cut is not a lattice phase");
}

}  // namespace hnlab
