#pragma once

// Objects of D^b(coh E) modelled by their Harder-Narasimhan data: strictly
// phase-decreasing semistable pieces, each with a Jordan-Hoelder composition
// over stable labels.

#include "hnlab/autoeq.hpp"
#include "hnlab/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hnlab {

// A stable object is either the unique extreme (non-perfect) one of its phase
// or a perfect one; perfect stable objects of a fixed phase correspond to
// smooth points and carry an opaque point identifier.
struct StableLabel {
    enum class Kind { Extreme, Smooth };
    Kind kind = Kind::Extreme;
    std::string id;

    static StableLabel extreme() { return {Kind::Extreme, {}}; }
    static StableLabel smooth(std::string id) { return {Kind::Smooth, std::move(id)}; }

    bool is_extreme() const { return kind == Kind::Extreme; }
    bool is_smooth() const { return kind == Kind::Smooth; }

    friend bool operator==(const StableLabel&, const StableLabel&) = default;
    friend auto operator<=>(const StableLabel&, const StableLabel&) = default;

    std::string str() const { return is_extreme() ? "extreme" : "smooth:" + id; }
};

struct JHEntry {
    StableLabel label;
    Int count;
    friend bool operator==(const JHEntry&, const JHEntry&) = default;
};

struct SemistablePiece {
    Phase phase;
    std::vector<JHEntry> jh;
    bool perfect = true;

    Int length() const {
        Int n = 0;
        for (const auto& e : jh) n += e.count;
        return n;
    }

    Charge charge() const { return length() * phase.primitive_charge(); }

    bool all_extreme() const {
        return std::all_of(jh.begin(), jh.end(), [](const JHEntry& e) { return e.label.is_extreme(); });
    }
    bool has_smooth() const {
        return std::any_of(jh.begin(), jh.end(), [](const JHEntry& e) { return e.label.is_smooth(); });
    }
    bool has_label(const StableLabel& l) const {
        return std::any_of(jh.begin(), jh.end(), [&](const JHEntry& e) { return e.label == l; });
    }
    bool is_stable() const { return jh.size() == 1 && jh.front().count == 1; }

    friend bool operator==(const SemistablePiece&, const SemistablePiece&) = default;
};

struct FormalObject {
    std::vector<SemistablePiece> pieces;       // strictly decreasing phases
    std::optional<bool> indecomposable;
    std::optional<bool> perfect;               // whole-object perfection when known

    bool empty() const { return pieces.empty(); }
    bool is_semistable() const { return pieces.size() == 1; }
    bool is_stable() const { return is_semistable() && pieces.front().is_stable(); }
    bool flagged_indecomposable() const { return indecomposable.value_or(false); }

    bool all_pieces_perfect() const {
        return std::all_of(pieces.begin(), pieces.end(), [](const SemistablePiece& p) { return p.perfect; });
    }

    // Perfection of the whole object: the recorded value, else all pieces perfect.
    bool is_perfect() const { return perfect ? *perfect : all_pieces_perfect(); }

    friend bool operator==(const FormalObject&, const FormalObject&) = default;
};

inline std::optional<std::string> validation_error(const FormalObject& x) {
    for (std::size_t i = 0; i < x.pieces.size(); ++i) {
        const auto& p = x.pieces[i];
        if (i > 0 && !(x.pieces[i - 1].phase > p.phase)) return "piece phases must strictly decrease";
        if (p.jh.empty()) return "empty Jordan-Hoelder composition";
        std::set<StableLabel> seen;
        for (const auto& e : p.jh) {
            if (e.count <= 0) return "Jordan-Hoelder counts must be positive";
            if (!seen.insert(e.label).second) return "repeated Jordan-Hoelder label";
        }
        if (!p.perfect && !p.all_extreme()) return "a non-perfect piece must have only extreme factors";
        if (p.is_stable() && p.all_extreme() && p.perfect) return "the extreme stable object is not perfect";
    }
    if (x.flagged_indecomposable()) {
        if (x.pieces.size() >= 2) {
            for (const auto& p : x.pieces)
                if (p.perfect) return "indecomposable unstable object with a perfect HN factor";
        } else if (x.pieces.size() == 1 && x.pieces.front().jh.size() != 1) {
            return "indecomposable semistable object with distinct JH factors";
        }
    }
    return std::nullopt;
}

inline void validate(const FormalObject& x) {
    if (auto err = validation_error(x)) throw DomainError("invalid object: " + *err);
}

inline Charge total_charge(const FormalObject& x) {
    Charge c{0, 0};
    for (const auto& p : x.pieces) c = c + p.charge();
    return c;
}

inline const Phase& phi_plus(const FormalObject& x) {
    if (x.empty()) throw DomainError("phi_plus of the zero object");
    return x.pieces.front().phase;
}

inline const Phase& phi_minus(const FormalObject& x) {
    if (x.empty()) throw DomainError("phi_minus of the zero object");
    return x.pieces.back().phase;
}

inline FormalObject shift(const FormalObject& x, const Int& n) {
    FormalObject y = x;
    for (auto& p : y.pieces) p.phase = p.phase.plus(n);
    return y;
}

// Smooth-point relabelling applied alongside an auto-equivalence; identity when empty.
using LabelMap = std::map<std::string, std::string>;

// Image of an object under an auto-equivalence. Extreme labels stay extreme,
// perfection is carried factor-wise.
inline FormalObject apply_autoeq(const AutoEq& g, const FormalObject& x, const LabelMap& relabel = {}) {
    FormalObject y = x;
    for (auto& p : y.pieces) {
        p.phase = lift_phase(g, p.phase);
        for (auto& e : p.jh) {
            if (!e.label.is_smooth()) continue;
            if (auto it = relabel.find(e.label.id); it != relabel.end()) e.label.id = it->second;
        }
    }
    return y;
}

inline FormalObject apply_word(const GenWord& w, const FormalObject& x, const LabelMap& relabel = {}) {
    FormalObject y = x;
    for (auto& p : y.pieces) {
        p.phase = apply_to_phase(w, p.phase);
        for (auto& e : p.jh) {
            if (!e.label.is_smooth()) continue;
            if (auto it = relabel.find(e.label.id); it != relabel.end()) e.label.id = it->second;
        }
    }
    return y;
}

enum class IndecomposableType { I, II, III, IV };

inline std::string to_string(IndecomposableType t) {
    switch (t) {
        case IndecomposableType::I: return "I";
        case IndecomposableType::II: return "II";
        case IndecomposableType::III: return "III";
        case IndecomposableType::IV: return "IV";
    }
    return "?";
}

inline IndecomposableType classify_type(const FormalObject& x) {
    if (!x.flagged_indecomposable()) throw DomainError("classify_type needs an object flagged indecomposable");
    validate(x);
    if (x.empty()) throw DomainError("the zero object has no type");
    if (x.pieces.size() >= 2) return IndecomposableType::IV;
    const auto& p = x.pieces.front();
    if (p.has_smooth()) return IndecomposableType::I;
    return p.perfect ? IndecomposableType::II : IndecomposableType::III;
}

// ---------------------------------------------------------------------------
// Hom rule engine

struct HomVerdict {
    enum class Kind { Zero, NonZero, Unknown };
    Kind kind = Kind::Unknown;
    std::string rule;

    friend bool operator==(const HomVerdict&, const HomVerdict&) = default;
};

inline std::string to_string(HomVerdict::Kind k) {
    switch (k) {
        case HomVerdict::Kind::Zero: return "zero";
        case HomVerdict::Kind::NonZero: return "nonzero";
        case HomVerdict::Kind::Unknown: return "unknown";
    }
    return "?";
}

namespace detail {

inline bool is_type_one(const FormalObject& x) {
    return x.is_semistable() && x.pieces.front().has_smooth();
}

inline const StableLabel* single_label(const FormalObject& x) {
    if (!x.is_semistable() || x.pieces.front().jh.size() != 1) return nullptr;
    return &x.pieces.front().jh.front().label;
}

}  // namespace detail

// Every rule whose hypotheses hold for Hom(X, Y), in priority order, without
// Serre transport. Rules with equal-phase hypotheses are checked exactly.
inline std::vector<HomVerdict> hom_rules_direct(const FormalObject& x, const FormalObject& y) {
    using K = HomVerdict::Kind;
    std::vector<HomVerdict> out;
    if (x.empty() || y.empty()) {
        out.push_back({K::Zero, "zero object"});
        return out;
    }
    const Phase& xm = phi_minus(x);
    const Phase& yp = phi_plus(y);

    if (xm > yp) out.push_back({K::Zero, "Lemma 3.8"});

    if (xm < yp && yp < xm.plus(1)) {
        bool both_ss = x.is_semistable() && y.is_semistable();
        out.push_back({K::NonZero, both_ss ? "Cor 4.4 (iii)" : "Prop 4.9 (1)"});
    }

    bool same_phase_ss = x.is_semistable() && y.is_semistable() && xm == yp;
    if (same_phase_ss && x.flagged_indecomposable() && y.flagged_indecomposable()) {
        const StableLabel* lx = detail::single_label(x);
        const StableLabel* ly = detail::single_label(y);
        if (lx && ly && *lx == *ly) out.push_back({K::NonZero, "Cor 4.4 (vi)"});
    }
    if (same_phase_ss && x.is_stable() && y.is_stable()) {
        bool iso = *detail::single_label(x) == *detail::single_label(y);
        out.push_back({iso ? K::NonZero : K::Zero, "Cor 4.4 (ii)"});
    }

    // stable X against a semistable Y in P(phi + i) missing X's factor
    if (x.is_stable() && y.is_semistable() && x.pieces.front().phase.dir() == y.pieces.front().phase.dir() &&
        !y.pieces.front().has_label(x.pieces.front().jh.front().label))
        out.push_back({K::Zero, "Cor 4.4 (iv)"});

    if (xm == yp && x.flagged_indecomposable() && y.flagged_indecomposable() && !detail::is_type_one(x) &&
        !detail::is_type_one(y))
        out.push_back({K::NonZero, "Prop 4.9 (2)"});

    return out;
}

// Rules for Hom(X,Y) obtained through Hom(X,Y) = Hom(Y,X[1])^*, used only
// when every HN factor of one of the two objects is perfect.
inline std::vector<HomVerdict> hom_rules_serre(const FormalObject& x, const FormalObject& y) {
    std::vector<HomVerdict> out;
    if (x.empty() || y.empty()) return out;
    if (!x.all_pieces_perfect() && !y.all_pieces_perfect()) return out;
    for (auto v : hom_rules_direct(y, shift(x, 1))) {
        v.rule = "Serre duality + " + v.rule;
        out.push_back(std::move(v));
    }
    return out;
}

inline std::vector<HomVerdict> hom_rules(const FormalObject& x, const FormalObject& y) {
    auto out = hom_rules_direct(x, y);
    auto serre = hom_rules_serre(x, y);
    out.insert(out.end(), serre.begin(), serre.end());
    return out;
}

// First applicable rule, or Unknown when no rule covers the pair.
inline HomVerdict hom_verdict(const FormalObject& x, const FormalObject& y) {
    auto rules = hom_rules(x, y);
    if (rules.empty()) return {HomVerdict::Kind::Unknown, "no applicable rule"};
    return rules.front();
}

// ---------------------------------------------------------------------------
// Spherical objects

struct SphericalVerdict {
    bool spherical = false;
    std::string reason;
};

// dim Ext^i(k(s), k(s)) for the structure sheaf of the singular point.
inline Int ext_dims_extreme(const Int& i) {
    if (i < 0) return 0;
    if (i == 0) return 1;
    return 2;
}

inline SphericalVerdict is_spherical(const FormalObject& x) {
    validate(x);
    if (x.empty()) return {false, "zero object"};
    if (x.pieces.size() != 1) return {false, "not semistable"};
    const auto& p = x.pieces.front();
    if (!p.is_stable()) return {false, "not stable"};
    if (p.jh.front().label.is_extreme()) return {false, "extreme: Ext^2 != 0"};
    return {true, "perfect and stable"};
}

struct SphericalConnection {
    GenWord word;
    std::optional<std::pair<std::string, std::string>> relabel;
};

// Word carrying the charge and phase of s1 to those of s2, followed by a
// smooth-point relabelling when the point identifiers differ.
inline SphericalConnection spherical_connect(const FormalObject& s1, const FormalObject& s2) {
    if (!is_spherical(s1).spherical || !is_spherical(s2).spherical)
        throw DomainError("spherical_connect needs two spherical objects");
    const Phase& p1 = s1.pieces.front().phase;
    const Phase& p2 = s2.pieces.front().phase;
    GenWord w = (map_phase_to_one(p2).inverse() * map_phase_to_one(p1)).reduced();
    SphericalConnection out{w, std::nullopt};
    const std::string& id1 = s1.pieces.front().jh.front().label.id;
    const std::string& id2 = s2.pieces.front().jh.front().label.id;
    if (id1 != id2) out.relabel = std::make_pair(id1, id2);
    return out;
}

// ---------------------------------------------------------------------------
// Torsion free sheaves S(d) on the nodal curve

inline Charge sd_charge(const std::vector<Int>& d) {
    if (d.empty()) throw DomainError("S(d) needs a nonempty degree vector");
    Int sum = 0;
    for (const auto& v : d) sum += v;
    return {Int(d.size()), 1 + sum};
}

// (d'_+, d''): add 1 to the last entry of d' and append d''.
inline std::vector<Int> sd_concat(std::vector<Int> first, const std::vector<Int>& second) {
    if (first.empty() || second.empty()) throw DomainError("S(d) concatenation needs nonempty vectors");
    first.back() += 1;
    first.insert(first.end(), second.begin(), second.end());
    return first;
}

using DegreeSupplier = std::function<std::vector<Int>(const Phase&)>;

// Primitive class (r, d) of the phase mapped to (d - 1, 0, ..., 0) of length r.
// Its charge is right; whether S of it is the extreme stable sheaf is not checked.
inline std::vector<Int> default_degree_vector(const Phase& phi) {
    Charge c = phi.primitive_charge();
    std::vector<Int> d(static_cast<std::size_t>(c.rk), Int(0));
    d.front() = c.deg - 1;
    return d;
}

struct SdChain {
    std::vector<Int> d0;
    FormalObject ledger;
    bool stability_unverified = false;
};

inline SdChain sd_chain(const std::vector<Phase>& phases, const DegreeSupplier& supplier = {}) {
    if (phases.empty()) throw DomainError("sd_chain needs at least one phase");
    for (std::size_t i = 0; i < phases.size(); ++i) {
        const Phase& p = phases[i];
        if (p.shift() != 0 || p.dir().y <= 0) throw DomainError("sd_chain phases must lie in (0,1)");
        if (i > 0 && !(phases[i - 1] < p)) throw DomainError("sd_chain phases must strictly increase");
    }
    DegreeSupplier d_of = supplier ? supplier : DegreeSupplier(default_degree_vector);

    SdChain out;
    out.stability_unverified = !supplier;
    out.ledger.indecomposable = true;
    out.ledger.perfect = false;
    std::vector<Int> acc;
    for (std::size_t k = phases.size(); k-- > 0;) {
        const Phase& p = phases[k];
        std::vector<Int> d = d_of(p);
        Charge c = sd_charge(d);
        Charge prim = p.primitive_charge();
        // c must be a positive multiple of the primitive class
        if (euler_form(prim, c) != 0 || c.is_zero())
            throw DomainError("degree vector charge is not on the phase's ray");
        Int mult = prim.rk != 0 ? c.rk / prim.rk : c.deg / prim.deg;
        if (mult <= 0) throw DomainError("degree vector charge is not a positive multiple of the phase's class");
        acc = acc.empty() ? d : sd_concat(acc, d);
        out.ledger.pieces.push_back({p, {{StableLabel::extreme(), mult}}, false});
    }
    out.d0 = acc;
    return out;
}

// ---------------------------------------------------------------------------
// Worked examples

inline SemistablePiece make_piece(Phase phase, StableLabel label, Int count, bool perfect) {
    return {std::move(phase), {{std::move(label), std::move(count)}}, perfect};
}

inline FormalObject make_indecomposable(std::vector<SemistablePiece> pieces) {
    FormalObject x{std::move(pieces), true, std::nullopt};
    validate(x);
    return x;
}

// Named objects: the structure sheaf, point sheaves, k(s), the two-piece
// complex with zero class, the rank two bundle with non-perfect HN factors,
// a band, and one archetype for each shadow shape.
inline std::vector<std::pair<std::string, FormalObject>> catalog() {
    using L = StableLabel;
    std::vector<std::pair<std::string, FormalObject>> out;
    auto add = [&](std::string name, FormalObject x) { out.emplace_back(std::move(name), std::move(x)); };

    // Smooth ids name the point a stable object corresponds to in P(1); O sits over p0.
    add("O", make_indecomposable({make_piece(Phase::half(), L::smooth("p0"), 1, true)}));
    add("k_p0", make_indecomposable({make_piece(Phase::one(), L::smooth("p0"), 1, true)}));
    add("k_x", make_indecomposable({make_piece(Phase::one(), L::smooth("x"), 1, true)}));
    add("k_x_shift3", make_indecomposable({make_piece(Phase::one().plus(3), L::smooth("x"), 1, true)}));
    add("k_s", make_indecomposable({make_piece(Phase::one(), L::extreme(), 1, false)}));
    add("zero_class", make_indecomposable({make_piece(Phase::one().plus(1), L::extreme(), 1, false),
                                           make_piece(Phase::one(), L::extreme(), 1, false)}));
    {
        FormalObject e = make_indecomposable({make_piece(Phase({-1, 1}, 0), L::extreme(), 1, false),
                                              make_piece(Phase({1, 1}, 0), L::extreme(), 1, false)});
        e.perfect = true;
        add("etale_rank2", e);
    }
    add("band", make_indecomposable({make_piece(Phase::one(), L::extreme(), 2, true)}));

    add("X1", make_indecomposable({make_piece(Phase::one(), L::smooth("x"), 2, true)}));
    add("X2", make_indecomposable({make_piece(Phase({-1, 2}, -1), L::smooth("y"), 2, true)}));
    add("X3", make_indecomposable({make_piece(Phase({1, 1}, 2), L::extreme(), 1, false),
                                   make_piece(Phase({-1, 1}, 1), L::extreme(), 1, false),
                                   make_piece(Phase({0, 1}, 1), L::extreme(), 1, false)}));
    add("X4", make_indecomposable({make_piece(Phase({-2, 1}, 0), L::extreme(), 1, false),
                                   make_piece(Phase({-1, 2}, 0), L::extreme(), 1, false)}));
    add("X5", make_indecomposable({make_piece(Phase({1, 1}, 0), L::extreme(), 2, true)}));
    return out;
}

inline FormalObject catalog_object(const std::string& name) {
    for (auto& [n, x] : catalog())
        if (n == name) return x;
    throw DomainError("no catalog object named '" + name + "'");
}

}  // namespace hnlab
