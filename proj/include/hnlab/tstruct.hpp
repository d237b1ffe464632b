#pragma once

// t-structures D^{<=0} = D[P(theta)^-, oo): a phase cut plus the part of the
// stable objects at the cut that goes into the aisle.

#include "hnlab/autoeq.hpp"
#include "hnlab/objects.hpp"

#include <set>
#include <string>
#include <vector>

namespace hnlab {

// Set of stable labels at one phase. Smooth points are either none, all, a
// finite set, or the complement of a finite set.
struct StableSubsetSpec {
    enum class Smooth { None, All, Only, AllExcept };

    bool extreme = false;
    Smooth smooth = Smooth::None;
    std::set<std::string> ids;

    static StableSubsetSpec empty() { return {}; }
    static StableSubsetSpec extreme_only() { return {true, Smooth::None, {}}; }
    static StableSubsetSpec everything() { return {true, Smooth::All, {}}; }

    bool is_empty() const {
        return !extreme && (smooth == Smooth::None || (smooth == Smooth::Only && ids.empty()));
    }

    bool has_smooth() const {
        switch (smooth) {
            case Smooth::None: return false;
            case Smooth::Only: return !ids.empty();
            default: return true;
        }
    }

    bool contains(const StableLabel& l) const {
        if (l.is_extreme()) return extreme;
        switch (smooth) {
            case Smooth::None: return false;
            case Smooth::All: return true;
            case Smooth::Only: return ids.count(l.id) > 0;
            case Smooth::AllExcept: return ids.count(l.id) == 0;
        }
        return false;
    }

    StableSubsetSpec complement() const {
        StableSubsetSpec c{!extreme, Smooth::None, ids};
        switch (smooth) {
            case Smooth::None: c.smooth = Smooth::All; c.ids.clear(); break;
            case Smooth::All: c.smooth = Smooth::None; c.ids.clear(); break;
            case Smooth::Only: c.smooth = Smooth::AllExcept; break;
            case Smooth::AllExcept: c.smooth = Smooth::Only; break;
        }
        return c;
    }

    // Some smooth id in the set, for witnesses.
    std::string sample_smooth() const {
        if (smooth == Smooth::Only && !ids.empty()) return *ids.begin();
        std::string id = "x";
        for (int n = 1; ids.count(id) > 0 && smooth == Smooth::AllExcept; ++n) id = "x" + std::to_string(n);
        return id;
    }

    friend bool operator==(const StableSubsetSpec&, const StableSubsetSpec&) = default;
};

struct TStructure {
    PhaseCut cut;
    StableSubsetSpec minus;

    TStructure(PhaseCut c, StableSubsetSpec m = {}) : cut(std::move(c)), minus(std::move(m)) {
        if (!is_rational_cut(cut) && !minus.is_empty())
            throw DomainError("an irrational cut has no stable objects to split");
    }

    StableSubsetSpec plus() const { return minus.complement(); }

    TStructure shifted(const Int& n) const { return {cut_plus(cut, n), minus}; }
};

namespace detail {

inline bool labels_in(const SemistablePiece& p, const StableSubsetSpec& s) {
    return std::all_of(p.jh.begin(), p.jh.end(), [&](const JHEntry& e) { return s.contains(e.label); });
}

}  // namespace detail

struct Membership {
    bool leq0 = false;
    bool geq1 = false;
    bool heart = false;

    bool none() const { return !leq0 && !geq1 && !heart; }
};

inline Membership membership(const TStructure& t, const FormalObject& x) {
    validate(x);
    Membership m{true, true, true};
    const PhaseCut next = cut_plus(t.cut, 1);
    const StableSubsetSpec plus = t.plus();
    for (const auto& p : x.pieces) {
        auto c0 = cut_cmp(t.cut, p.phase);
        auto c1 = cut_cmp(next, p.phase);
        bool at_cut = c0 == 0;
        bool in_minus = at_cut && detail::labels_in(p, t.minus);
        bool in_plus = at_cut && detail::labels_in(p, plus);

        if (!(c0 < 0 || in_minus)) m.leq0 = false;
        if (!(c0 > 0 || in_plus)) m.geq1 = false;
        bool open_strip = c0 < 0 && c1 > 0;
        bool top = c1 == 0 && detail::labels_in(p, plus);
        if (!(open_strip || in_minus || top)) m.heart = false;
    }
    return m;
}

struct Truncation {
    FormalObject a;  // in D^{<=0}
    FormalObject b;  // in D^{>=1}
};

// The triangle A -> X -> B with A in D^{<=0} and B in D^{>=1}. A piece at the
// cut splits by label.
inline Truncation truncate(const TStructure& t, const FormalObject& x) {
    validate(x);
    Truncation out;
    for (const auto& p : x.pieces) {
        auto c = cut_cmp(t.cut, p.phase);
        if (c < 0) {
            out.a.pieces.push_back(p);
        } else if (c > 0) {
            out.b.pieces.push_back(p);
        } else {
            SemistablePiece lo{p.phase, {}, p.perfect}, hi{p.phase, {}, p.perfect};
            for (const auto& e : p.jh) (t.minus.contains(e.label) ? lo : hi).jh.push_back(e);
            for (SemistablePiece* part : {&lo, &hi}) {
                if (part->jh.empty()) continue;
                // a single copy of the extreme stable object is never perfect
                if (part->jh.size() < p.jh.size() && part->is_stable() && part->all_extreme()) part->perfect = false;
            }
            if (!lo.jh.empty()) out.a.pieces.push_back(std::move(lo));
            if (!hi.jh.empty()) out.b.pieces.push_back(std::move(hi));
        }
    }
    if (out.b.empty()) {
        out.a = x;
    } else if (out.a.empty()) {
        out.b = x;
    }
    return out;
}

inline bool is_noetherian(const TStructure& t) { return is_rational_cut(t.cut) && t.minus.is_empty(); }

// ---------------------------------------------------------------------------
// Non-Noetherian witnesses

// Unique F with <E,F> = 1 and Z(F), Z(E-F) both in the open half-plane of the
// strip (theta, theta+1). The solutions of <E,F> = 1 form a line F0 + tE; the
// half-plane conditions cut out an open interval of length one in t with
// irrational ends, so exactly one t survives.
inline Charge epi_partner(const Charge& e, const SurdCut& cut, const Int& bound = 10000) {
    PlaneVector ze = central_charge(e);
    if (cut.cross_sign(ze) <= 0) throw DomainError("seed charge is not inside the open strip");
    Int g = gcd_int(e.rk, e.deg);
    if (g != 1) throw DomainError("seed charge must be primitive");

    // extended Euclid: rk*y - deg*x = 1 gives F0 = (x, y)
    Int old_r = e.rk, r = -e.deg, old_s = 1, s = 0, old_t = 0, tt = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * tt; old_t = tt; tt = tmp;
    }
    // old_s*rk + old_t*(-deg) = old_r = +-1
    Charge f0{old_t, old_s};
    if (old_r < 0) f0 = -f0;
    // <E, F0> = rk*deg0 - deg*rk0 = 1
    auto side = [&](const Int& t) { return cut.cross_sign(central_charge(f0 + t * e)); };

    // smallest t with Z(F0 + tE) in the half-plane; side(t) increases with t
    Int lo = -1, hi = 1;
    while (side(hi) <= 0) hi *= 2;
    while (side(lo) > 0) lo *= 2;
    while (hi - lo > 1) {
        Int mid = floor_div(lo + hi, 2);
        (side(mid) > 0 ? hi : lo) = mid;
    }
    Charge f = f0 + hi * e;
    if (cut.cross_sign(central_charge(e - f)) <= 0) throw DomainError("no unimodular partner in the strip");
    if (abs_int(f.rk) > bound || abs_int(f.deg) > bound)
        throw DomainError("no partner within bound " + to_string(bound));
    return f;
}

// E = E_1 -> E_2 -> ... with every step an epimorphism in the heart of the
// irrational cut; returns `length` charges starting with the seed.
inline std::vector<Charge> epi_chain(const Charge& seed, const SurdCut& cut, std::size_t length,
                                     const Int& bound = 10000) {
    if (length == 0) throw DomainError("chain length must be positive");
    std::vector<Charge> out{seed};
    if (cut.cross_sign(central_charge(seed)) <= 0) throw DomainError("seed charge is not inside the open strip");
    while (out.size() < length) out.push_back(epi_partner(out.back(), cut, bound));
    return out;
}

struct WitnessChain {
    enum class Kind { SmoothPoint, Extreme, Irrational };
    Kind kind;
    std::vector<Charge> charges;             // in the original t-structure
    std::vector<Charge> normalized;          // after moving the cut to phase 0 (rational case)
    std::vector<Charge> kernels;             // class of each step's kernel, original frame
    std::string kernel;                      // symbolic kernel
    GenWord normalizer;                      // word sending the cut to phase 0
};

inline std::string to_string(WitnessChain::Kind k) {
    switch (k) {
        case WitnessChain::Kind::SmoothPoint: return "smooth";
        case WitnessChain::Kind::Extreme: return "extreme";
        case WitnessChain::Kind::Irrational: return "irrational";
    }
    return "?";
}

// A strictly increasing chain of epimorphisms in the heart.
inline WitnessChain non_noetherian_witness(const TStructure& t, std::size_t length, const Int& bound = 10000) {
    if (is_noetherian(t)) throw DomainError("the heart is Noetherian");
    if (length == 0) throw DomainError("chain length must be positive");

    if (auto s = std::get_if<SurdCut>(&t.cut)) {
        Charge seed{1, 0};
        if (s->cross_sign(central_charge(seed)) < 0) seed = -seed;
        WitnessChain w{WitnessChain::Kind::Irrational, epi_chain(seed, *s, length, bound), {}, {}, "C", {}};
        for (std::size_t i = 1; i < w.charges.size(); ++i) w.kernels.push_back(w.charges[i - 1] - w.charges[i]);
        return w;
    }

    const Phase& theta = std::get<RationalCut>(t.cut).phase;
    GenWord norm = (GenWord::power(Letter::ShiftInv, 1) * map_phase_to_one(theta)).reduced();
    GenWord back = norm.inverse();

    WitnessChain w;
    w.normalizer = norm;
    // After normalising, P(0) holds k(y)[-1] for smooth y and k(s)[-1].
    // O(mx) -> O((m+1)x) has kernel k(x)[-1]; O(2ms) -> O(2(m+1)s) has kernel B[-1]
    // with B a length two torsion module at s.
    Int step = 1;
    if (t.minus.has_smooth()) {
        w.kind = WitnessChain::Kind::SmoothPoint;
        w.kernel = "k(" + t.minus.sample_smooth() + ")[-1]";
    } else {
        w.kind = WitnessChain::Kind::Extreme;
        w.kernel = "B[-1]";
        step = 2;
    }
    for (std::size_t m = 1; m <= length; ++m) {
        Charge c{1, step * Int(m)};
        w.normalized.push_back(c);
        w.charges.push_back(apply_to_charge(back, c));
    }
    for (std::size_t i = 1; i < w.charges.size(); ++i) w.kernels.push_back(w.charges[i - 1] - w.charges[i]);
    return w;
}

}  // namespace hnlab
